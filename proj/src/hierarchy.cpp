#include "wf/hierarchy.hpp"

#include <stdexcept>

namespace wf {

StratifiedFinalCondition::StratifiedFinalCondition(int ambient_n) : ambient_n_(ambient_n) {
    if (ambient_n_ < 1 || ambient_n_ > kMaxAlleleLabel)
        throw std::invalid_argument("final condition needs ambient n in 1.." + std::to_string(kMaxAlleleLabel));
}

void StratifiedFinalCondition::set(const Face& face, MultiPoly value) {
    if (face.ambient_n() != ambient_n_)
        throw std::invalid_argument("face ambient does not match final condition");
    if (!(value.chart() == Chart(face)))
        throw std::invalid_argument("final condition component must live on the standard chart of " +
                                    face.to_string());
    components_.insert_or_assign(face, std::move(value));
}

void StratifiedFinalCondition::set_vertex(int label, const Rational& value) {
    Face v = Face::vertex(label, ambient_n_);
    set(v, MultiPoly::constant(Chart(v), value));
}

bool StratifiedFinalCondition::prescribed(const Face& face) const { return components_.count(face) > 0; }

const MultiPoly* StratifiedFinalCondition::find(const Face& face) const {
    auto it = components_.find(face);
    return it == components_.end() ? nullptr : &it->second;
}

double StratifiedFinalCondition::eval(const SimplexPoint& p) const {
    const MultiPoly* component = find(p.face());
    return component ? component->eval(p) : 0.0;
}

int StratifiedFinalCondition::max_degree() const {
    int d = 0;
    for (const auto& [face, poly] : components_) d = std::max(d, poly.degree());
    return d;
}

MultiPoly modified_final_condition(const Face& face, const StratifiedFinalCondition& f,
                                   const std::vector<PiecewiseSolution>& lower_layers) {
    const MultiPoly* prescribed = f.find(face);
    MultiPoly out = prescribed ? *prescribed : MultiPoly(Chart(face));
    for (const auto& layer : lower_layers) {
        RationalFn snap = layer.snapshot(face);
        if (snap.is_zero()) continue;
        if (!snap.is_polynomial())
            throw OutOfModelFinalCondition("snapshot on " + face.to_string() +
                                           " does not cancel to a polynomial: " + snap.to_string());
        out -= snap.as_polynomial();
    }
    return out;
}

std::map<Face, MultiPoly> modified_final_condition(int dim, const StratifiedFinalCondition& f,
                                                   const std::vector<PiecewiseSolution>& lower_layers) {
    std::map<Face, MultiPoly> out;
    for (const Face& face : boundary_faces(Face::full(f.ambient_n()), dim))
        if (f.prescribed(face)) out.emplace(face, modified_final_condition(face, f, lower_layers));
    return out;
}

GlobalSolution solve_extended_kbe(const StratifiedFinalCondition& f, int max_degree) {
    int n = f.ambient_n();
    if (f.max_degree() > max_degree)
        throw std::invalid_argument("final condition has degree " + std::to_string(f.max_degree()) +
                                    ", above the truncation degree " + std::to_string(max_degree));
    GlobalSolution solution;
    solution.ambient_n = n;
    solution.layers.resize(static_cast<std::size_t>(n) + 1);

    for (int d = 0; d <= n; ++d) {
        auto& layer = solution.layers[static_cast<std::size_t>(d)];
        std::vector<PiecewiseSolution> lower(solution.layers.begin(),
                                             solution.layers.begin() + d);
        for (const Face& face : boundary_faces(Face::full(n), d)) {
            if (!f.prescribed(face)) continue;
            MultiPoly target = modified_final_condition(face, f, lower);
            ProperSolution u = [&] {
                if (d == 0) return vertex_solution(face, target.constant_value());
                try {
                    return proper_solution(target, face, max_degree);
                } catch (const std::exception& e) {
                    throw DecompositionError("proper solve failed on " + face.to_string() + " at degree " +
                                             std::to_string(max_degree) + ": " + e.what());
                }
            }();
            layer.merge(global_extension(u));
        }
        layer.combine_modes();
    }
    for (const auto& layer : solution.layers) solution.total.merge(layer);
    solution.total.combine_modes();
    return solution;
}

RationalFn littler(const PathSpec& path) {
    if (path.base().dim() != 0)
        throw std::invalid_argument("Littler's formula starts from a vertex, got base " +
                                    path.base().to_string());
    MultiPoly one = MultiPoly::constant(Chart(path.base()), 1);
    return chain_shape(one, path, static_cast<int>(path.added().size()));
}

GlobalSolution stationary_solution(const std::map<int, Rational>& vertex_values, int ambient_n) {
    for (const auto& [label, value] : vertex_values)
        if (label < 0 || label > ambient_n)
            throw std::invalid_argument("vertex label " + std::to_string(label) + " outside 0.." +
                                        std::to_string(ambient_n));
    GlobalSolution solution;
    solution.ambient_n = ambient_n;
    solution.layers.resize(1);
    for (const Face& face : all_faces(ambient_n)) {
        Chart chart(face);
        MultiPoly shape(chart);
        for (const auto& [label, value] : vertex_values)
            if (face.contains(label)) shape += MultiPoly::coordinate(chart, label).scaled(value);
        if (!shape.is_zero())
            solution.layers[0].add_mode(face, {Rational(0), Rational(1), RationalFn(shape)});
    }
    solution.total = solution.layers[0];
    return solution;
}

StemReport stem_check(const GlobalSolution& solution) {
    for (const auto& [face, piece] : solution.total.pieces())
        for (const auto& mode : piece)
            if (mode.kappa != 0)
                throw std::invalid_argument("stem check needs a time-independent solution; face " +
                                            face.to_string() + " carries eigenvalue " + to_string(mode.kappa));
    StemReport report;
    for (const Face& face : all_faces(solution.ambient_n, 1)) {
        RationalFn u = solution.snapshot(face);
        bool pass = apply_backward(u).is_zero();
        report.results.emplace_back(face, pass);
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

}  // namespace wf
