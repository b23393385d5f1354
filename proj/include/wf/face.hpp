#pragma once

#include "wf/rng.hpp"

#include <string>
#include <vector>

namespace wf {

/// Largest admissible allele label; the face lattice of {0,...,n} has 2^(n+1)
/// members, so exhaustive enumeration stays tractable only for small n.
inline constexpr int kMaxAlleleLabel = 12;

/// Coordinates with magnitude at or below this are classified as exact zeros
/// when deciding which stratum a point belongs to.
inline constexpr double kFaceTolerance = 1e-12;

/// A (sub)simplex of the closed probability simplex on alleles {0,...,n},
/// named by the sorted set of allele labels with positive frequency.
class Face {
public:
    Face(std::vector<int> labels, int ambient_n);

    static Face full(int ambient_n);
    static Face vertex(int label, int ambient_n);

    const std::vector<int>& indices() const { return indices_; }
    int ambient_n() const { return ambient_n_; }
    int dim() const { return static_cast<int>(indices_.size()) - 1; }
    bool is_vertex() const { return dim() == 0; }

    bool contains(int label) const;
    bool contains_face(const Face& sub) const;

    Face without(int label) const;
    Face with(int label) const;

    std::string to_string() const;

    friend bool operator==(const Face& a, const Face& b) {
        return a.ambient_n_ == b.ambient_n_ && a.indices_ == b.indices_;
    }
    friend bool operator<(const Face& a, const Face& b) {
        if (a.ambient_n_ != b.ambient_n_) return a.ambient_n_ < b.ambient_n_;
        if (a.indices_.size() != b.indices_.size()) return a.indices_.size() < b.indices_.size();
        return a.indices_ < b.indices_;
    }

private:
    std::vector<int> indices_;
    int ambient_n_;
};

/// All subsets of face.indices() of size k+1, as Faces. For k == face.dim()
/// this is the face itself (the boundary convention for the top dimension).
std::vector<Face> boundary_faces(const Face& face, int k);

/// Every face of the full simplex on {0,...,ambient_n} with dim >= min_dim,
/// ordered by (dimension, label set).
std::vector<Face> all_faces(int ambient_n, int min_dim = 0);

/// A point of the closed simplex together with the stratum it lies on.
/// Coordinates are stored in face-index order and must be nonnegative and
/// sum to 1 within kFaceTolerance.
class SimplexPoint {
public:
    SimplexPoint(Face face, std::vector<double> coords);

    static SimplexPoint barycenter(const Face& face);

    const Face& face() const { return face_; }
    const std::vector<double>& coords() const { return coords_; }

    /// Frequency of the given allele; 0 for ambient labels not on the face.
    double coord(int label) const;

    bool is_interior() const;

    /// The point reclassified onto the stratum where its coordinates are
    /// strictly positive (coordinates within tolerance of 0 are dropped).
    SimplexPoint classified() const;

    std::string to_string() const;

private:
    Face face_;
    std::vector<double> coords_;
};

/// Linear interpolation projection: allele s is absorbed into allele r.
/// The image lies on face \ {s}, with coordinate r picking up p^s.
SimplexPoint project_rs(const SimplexPoint& p, int r, int s);

/// An extension path: a base face, the anchor allele the path extends over,
/// and the ordered labels added along the ascending chain of faces.
class PathSpec {
public:
    PathSpec(Face base, int anchor, std::vector<int> added);

    const Face& base() const { return base_; }
    int anchor() const { return anchor_; }
    const std::vector<int>& added() const { return added_; }

    /// The face of the chain after m of the added labels, m = 0..added.size().
    Face face_after(int m) const;
    Face top_face() const { return face_after(static_cast<int>(added_.size())); }

private:
    Face base_;
    int anchor_;
    std::vector<int> added_;
};

/// The chained projection collapsing all added labels onto the anchor.
/// Summation runs from the last added label backwards, so the result is
/// bit-identical to folding project_rs along the path.
SimplexPoint project_chain(const SimplexPoint& p, const PathSpec& path);

/// Uniform sample from the open face (flat Dirichlet).
SimplexPoint sample_interior(const Face& face, Rng& rng);

}  // namespace wf
