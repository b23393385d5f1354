#include "wf/face.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wf {

Face::Face(std::vector<int> labels, int ambient_n) : indices_(std::move(labels)), ambient_n_(ambient_n) {
    if (ambient_n_ < 0 || ambient_n_ > kMaxAlleleLabel)
        throw std::invalid_argument("ambient allele count out of range (n must be 0.." +
                                    std::to_string(kMaxAlleleLabel) + ")");
    if (indices_.empty()) throw std::invalid_argument("face needs at least one allele label");
    std::sort(indices_.begin(), indices_.end());
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 0 || indices_[i] > ambient_n_)
            throw std::invalid_argument("allele label " + std::to_string(indices_[i]) + " outside 0.." +
                                        std::to_string(ambient_n_));
        if (i > 0 && indices_[i] == indices_[i - 1])
            throw std::invalid_argument("duplicate allele label " + std::to_string(indices_[i]));
    }
}

Face Face::full(int ambient_n) {
    std::vector<int> all(ambient_n + 1);
    for (int i = 0; i <= ambient_n; ++i) all[i] = i;
    return Face(std::move(all), ambient_n);
}

Face Face::vertex(int label, int ambient_n) { return Face({label}, ambient_n); }

bool Face::contains(int label) const {
    return std::binary_search(indices_.begin(), indices_.end(), label);
}

bool Face::contains_face(const Face& sub) const {
    return ambient_n_ == sub.ambient_n_ &&
           std::includes(indices_.begin(), indices_.end(), sub.indices_.begin(), sub.indices_.end());
}

Face Face::without(int label) const {
    if (!contains(label)) throw std::invalid_argument("face does not contain label " + std::to_string(label));
    if (indices_.size() == 1) throw std::invalid_argument("cannot remove the last label of a face");
    std::vector<int> rest;
    rest.reserve(indices_.size() - 1);
    for (int i : indices_)
        if (i != label) rest.push_back(i);
    return Face(std::move(rest), ambient_n_);
}

Face Face::with(int label) const {
    if (contains(label)) throw std::invalid_argument("face already contains label " + std::to_string(label));
    std::vector<int> ext = indices_;
    ext.push_back(label);
    return Face(std::move(ext), ambient_n_);
}

std::string Face::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out << ',';
        out << indices_[i];
    }
    out << '}';
    return out.str();
}

namespace {

void subsets_of_size(const std::vector<int>& pool, std::size_t size, std::size_t start,
                     std::vector<int>& cur, int ambient_n, std::vector<Face>& out) {
    if (cur.size() == size) {
        out.emplace_back(cur, ambient_n);
        return;
    }
    for (std::size_t i = start; i + (size - cur.size()) <= pool.size(); ++i) {
        cur.push_back(pool[i]);
        subsets_of_size(pool, size, i + 1, cur, ambient_n, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Face> boundary_faces(const Face& face, int k) {
    if (k < 0 || k > face.dim())
        throw std::out_of_range("boundary dimension " + std::to_string(k) + " out of range for face " +
                                face.to_string());
    std::vector<Face> out;
    std::vector<int> cur;
    subsets_of_size(face.indices(), static_cast<std::size_t>(k) + 1, 0, cur, face.ambient_n(), out);
    return out;
}

std::vector<Face> all_faces(int ambient_n, int min_dim) {
    Face top = Face::full(ambient_n);
    std::vector<Face> out;
    for (int k = std::max(0, min_dim); k <= ambient_n; ++k) {
        auto layer = boundary_faces(top, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

SimplexPoint::SimplexPoint(Face face, std::vector<double> coords)
    : face_(std::move(face)), coords_(std::move(coords)) {
    if (coords_.size() != face_.indices().size())
        throw std::invalid_argument("coordinate count does not match face " + face_.to_string());
    double sum = 0.0;
    for (double c : coords_) {
        if (c < -kFaceTolerance) throw std::invalid_argument("negative simplex coordinate");
        sum += c;
    }
    if (std::abs(sum - 1.0) > kFaceTolerance)
        throw std::invalid_argument("simplex coordinates must sum to 1, got " + std::to_string(sum));
}

SimplexPoint SimplexPoint::barycenter(const Face& face) {
    std::vector<double> c(face.indices().size(), 1.0 / static_cast<double>(face.indices().size()));
    return SimplexPoint(face, std::move(c));
}

double SimplexPoint::coord(int label) const {
    if (label < 0 || label > face_.ambient_n())
        throw std::invalid_argument("allele label " + std::to_string(label) + " outside ambient range");
    const auto& idx = face_.indices();
    auto it = std::lower_bound(idx.begin(), idx.end(), label);
    if (it == idx.end() || *it != label) return 0.0;
    return coords_[static_cast<std::size_t>(it - idx.begin())];
}

bool SimplexPoint::is_interior() const {
    for (double c : coords_)
        if (c <= kFaceTolerance) return false;
    return true;
}

SimplexPoint SimplexPoint::classified() const {
    std::vector<int> labels;
    std::vector<double> coords;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (std::abs(coords_[i]) > kFaceTolerance) {
            labels.push_back(face_.indices()[i]);
            coords.push_back(coords_[i]);
        }
    }
    if (labels.empty()) throw std::domain_error("point has no positive coordinate");
    return SimplexPoint(Face(std::move(labels), face_.ambient_n()), std::move(coords));
}

std::string SimplexPoint::to_string() const {
    std::ostringstream out;
    out << face_.to_string() << ":(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ',';
        out << coords_[i];
    }
    out << ')';
    return out.str();
}

SimplexPoint project_rs(const SimplexPoint& p, int r, int s) {
    if (r == s) throw std::invalid_argument("projection needs distinct labels");
    if (!p.face().contains(r) || !p.face().contains(s))
        throw std::invalid_argument("projection labels must lie on the point's face");
    Face target = p.face().without(s);
    std::vector<double> coords;
    coords.reserve(target.indices().size());
    for (int label : target.indices())
        coords.push_back(label == r ? p.coord(r) + p.coord(s) : p.coord(label));
    return SimplexPoint(std::move(target), std::move(coords));
}

PathSpec::PathSpec(Face base, int anchor, std::vector<int> added)
    : base_(std::move(base)), anchor_(anchor), added_(std::move(added)) {
    if (!base_.contains(anchor_)) throw std::invalid_argument("path anchor must belong to the base face");
    Face acc = base_;
    for (int label : added_) acc = acc.with(label);  // throws on duplicates / overlap
}

Face PathSpec::face_after(int m) const {
    if (m < 0 || m > static_cast<int>(added_.size()))
        throw std::out_of_range("path stage out of range");
    Face acc = base_;
    for (int j = 0; j < m; ++j) acc = acc.with(added_[j]);
    return acc;
}

SimplexPoint project_chain(const SimplexPoint& p, const PathSpec& path) {
    if (!(p.face() == path.top_face()))
        throw std::invalid_argument("point must lie on the path's top face " + path.top_face().to_string());
    // Accumulate from the last added label backwards; this matches the
    // rounding of the right-to-left fold of single-step projections.
    double acc = 0.0;
    for (auto it = path.added().rbegin(); it != path.added().rend(); ++it) acc += p.coord(*it);
    std::vector<double> coords;
    coords.reserve(path.base().indices().size());
    for (int label : path.base().indices())
        coords.push_back(label == path.anchor() ? p.coord(path.anchor()) + acc : p.coord(label));
    return SimplexPoint(path.base(), std::move(coords));
}

SimplexPoint sample_interior(const Face& face, Rng& rng) {
    std::size_t k = face.indices().size();
    if (k == 1) return SimplexPoint(face, {1.0});
    std::vector<double> gaps(k);
    double total = 0.0;
    for (auto& g : gaps) {
        g = rng.next_exponential();
        total += g;
    }
    for (auto& g : gaps) g /= total;
    return SimplexPoint(face, std::move(gaps));
}

}  // namespace wf
