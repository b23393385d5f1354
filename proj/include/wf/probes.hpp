#pragma once

#include "wf/hierarchy.hpp"

#include <functional>
#include <span>

namespace wf {

/// Central-difference estimate of -d_t U - L* U at an interior point of a
/// face; O(h^2) for exact solutions. Throws std::invalid_argument when the
/// stencil would leave the open face or cross t = 0.
double pde_residual(const GlobalSolution& solution, const SimplexPoint& p, double t, double h);

struct ContinuityGap {
    double epsilon;
    double max_gap;
};

/// Probes the codimension-1 transition face -> subface: samples interior
/// points q of the subface and compares U at q against U at points of the
/// open face approaching q at distances eps (along the segment towards the
/// face barycenter). Continuous transitions show gap -> 0 linearly in eps.
std::vector<ContinuityGap> continuity_probe(const std::function<double(const SimplexPoint&)>& evaluate,
                                            const Face& face, const Face& subface, int samples,
                                            std::span<const double> epsilons, std::uint64_t seed);

std::vector<ContinuityGap> continuity_probe(const GlobalSolution& solution, double t, const Face& face,
                                            const Face& subface, int samples,
                                            std::span<const double> epsilons, std::uint64_t seed);

std::vector<ContinuityGap> continuity_probe(const PiecewiseSolution& solution, double t, const Face& face,
                                            const Face& subface, int samples,
                                            std::span<const double> epsilons, std::uint64_t seed);

}  // namespace wf
