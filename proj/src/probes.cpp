#include "wf/probes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wf {

namespace {

SimplexPoint shifted(const SimplexPoint& p, const std::vector<double>& delta) {
    std::vector<double> coords = p.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += delta[i];
    return SimplexPoint(p.face(), std::move(coords));
}

}  // namespace

double pde_residual(const GlobalSolution& solution, const SimplexPoint& p, double t, double h) {
    if (h <= 0) throw std::invalid_argument("step size must be positive");
    if (!p.is_interior())
        throw std::invalid_argument("residual probe point must be interior to its face");
    if (t + h >= 0) throw std::invalid_argument("time stencil crosses t = 0");
    const Face& face = p.face();
    Chart chart(face);
    double min_coord = *std::min_element(p.coords().begin(), p.coords().end());
    if (face.dim() >= 1 && min_coord <= 2.5 * h)
        throw std::invalid_argument("stencil at " + p.to_string() + " leaves the open face for h = " +
                                    std::to_string(h));

    double dt = (solution.eval(p, t + h) - solution.eval(p, t - h)) / (2.0 * h);

    double lstar = 0.0;
    if (face.dim() >= 1) {
        std::size_t m = p.coords().size();
        auto unit = [&](int label, double step) {
            std::vector<double> delta(m, 0.0);
            for (std::size_t i = 0; i < m; ++i) {
                int lab = face.indices()[i];
                if (lab == label)
                    delta[i] += step;
                else if (lab == chart.dependent())
                    delta[i] -= step;
            }
            return delta;
        };
        auto add = [&](const std::vector<double>& a, const std::vector<double>& b) {
            std::vector<double> out(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
            return out;
        };
        double u0 = solution.eval(p, t);
        for (int i : chart.free_labels()) {
            for (int j : chart.free_labels()) {
                double second;
                if (i == j) {
                    second = (solution.eval(shifted(p, unit(i, h)), t) - 2.0 * u0 +
                              solution.eval(shifted(p, unit(i, -h)), t)) /
                             (h * h);
                } else {
                    second = (solution.eval(shifted(p, add(unit(i, h), unit(j, h))), t) -
                              solution.eval(shifted(p, add(unit(i, h), unit(j, -h))), t) -
                              solution.eval(shifted(p, add(unit(i, -h), unit(j, h))), t) +
                              solution.eval(shifted(p, add(unit(i, -h), unit(j, -h))), t)) /
                             (4.0 * h * h);
                }
                double xi = p.coord(i), xj = p.coord(j);
                lstar += 0.5 * xi * ((i == j ? 1.0 : 0.0) - xj) * second;
            }
        }
    }
    return -dt - lstar;
}

std::vector<ContinuityGap> continuity_probe(const std::function<double(const SimplexPoint&)>& evaluate,
                                            const Face& face, const Face& subface, int samples,
                                            std::span<const double> epsilons, std::uint64_t seed) {
    if (!face.contains_face(subface) || subface.dim() + 1 != face.dim())
        throw std::invalid_argument(subface.to_string() + " is not a facet of " + face.to_string());
    if (samples < 1) throw std::invalid_argument("need at least one probe sample");

    SimplexPoint center = SimplexPoint::barycenter(face);
    std::vector<ContinuityGap> gaps;
    for (double eps : epsilons) gaps.push_back({eps, 0.0});

    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
        SimplexPoint q = sample_interior(subface, rng);
        double boundary_value = evaluate(q);
        for (auto& gap : gaps) {
            std::vector<double> coords;
            coords.reserve(face.indices().size());
            for (std::size_t i = 0; i < face.indices().size(); ++i) {
                int label = face.indices()[i];
                coords.push_back((1.0 - gap.epsilon) * q.coord(label) +
                                 gap.epsilon * center.coords()[i]);
            }
            SimplexPoint approach(face, std::move(coords));
            gap.max_gap = std::max(gap.max_gap, std::abs(evaluate(approach) - boundary_value));
        }
    }
    return gaps;
}

std::vector<ContinuityGap> continuity_probe(const GlobalSolution& solution, double t, const Face& face,
                                            const Face& subface, int samples,
                                            std::span<const double> epsilons, std::uint64_t seed) {
    return continuity_probe([&](const SimplexPoint& p) { return solution.eval(p, t); }, face, subface,
                            samples, epsilons, seed);
}

std::vector<ContinuityGap> continuity_probe(const PiecewiseSolution& solution, double t, const Face& face,
                                            const Face& subface, int samples,
                                            std::span<const double> epsilons, std::uint64_t seed) {
    return continuity_probe([&](const SimplexPoint& p) { return solution.eval(p, t); }, face, subface,
                            samples, epsilons, seed);
}

}  // namespace wf
