#pragma once

#include "wf/extension.hpp"

namespace wf {

/// Raised when a lower-layer snapshot fails to cancel to a polynomial on the
/// stratum where a modified final condition is being assembled.
class OutOfModelFinalCondition : public std::runtime_error {
public:
    explicit OutOfModelFinalCondition(const std::string& what) : std::runtime_error(what) {}
};

/// Per-stratum final condition data: a polynomial on each prescribed face.
/// Faces never set are unprescribed; they inherit whatever the extensions of
/// lower strata induce and receive no correction layer. A face set to the
/// zero polynomial is prescribed and is corrected like any other value.
class StratifiedFinalCondition {
public:
    explicit StratifiedFinalCondition(int ambient_n);

    int ambient_n() const { return ambient_n_; }

    void set(const Face& face, MultiPoly value);
    void set_vertex(int label, const Rational& value);

    bool prescribed(const Face& face) const;
    const MultiPoly* find(const Face& face) const;
    const std::map<Face, MultiPoly>& components() const { return components_; }

    /// Value at a point, selected by the point's own stratum; unprescribed
    /// strata evaluate to 0.
    double eval(const SimplexPoint& p) const;

    int max_degree() const;

private:
    int ambient_n_;
    std::map<Face, MultiPoly> components_;
};

/// The hierarchical backward solution: one globally extended layer per
/// stratum dimension plus their sum.
struct GlobalSolution {
    int ambient_n = 0;
    std::vector<PiecewiseSolution> layers;
    PiecewiseSolution total;

    double eval(const SimplexPoint& p, double t) const { return total.eval(p, t); }
    RationalFn snapshot(const Face& face) const { return total.snapshot(face); }
};

/// The modified final condition on one face: the prescribed value minus the
/// t = 0 snapshots of all lower layers, which must cancel to polynomials.
MultiPoly modified_final_condition(const Face& face, const StratifiedFinalCondition& f,
                                   const std::vector<PiecewiseSolution>& lower_layers);

/// The same for a whole dimension layer: one polynomial per prescribed face.
std::map<Face, MultiPoly> modified_final_condition(int dim, const StratifiedFinalCondition& f,
                                                   const std::vector<PiecewiseSolution>& lower_layers);

/// Dimension-ascending construction: solve on the vertices, extend globally,
/// subtract induced conditions, solve the next stratum, and so on up to the
/// full simplex.
GlobalSolution solve_extended_kbe(const StratifiedFinalCondition& f, int max_degree);

/// Product formula for losing alleles in one fixed order: the top-face piece
/// of the pathwise extension of the constant 1 from a vertex.
RationalFn littler(const PathSpec& path);

/// The time-independent solution determined by vertex values:
/// U = sum_i f0(e_i) p^i on every face.
GlobalSolution stationary_solution(const std::map<int, Rational>& vertex_values, int ambient_n);

struct StemReport {
    std::vector<std::pair<Face, bool>> results;
    bool all_pass = true;
};

/// Checks L* U = 0 exactly on every face of dimension >= 1 for a
/// time-independent solution.
StemReport stem_check(const GlobalSolution& solution);

}  // namespace wf
