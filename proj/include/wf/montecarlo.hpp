#pragma once

#include "wf/hierarchy.hpp"

#include <cstdint>
#include <functional>

namespace wf {

/// Discrete Wright-Fisher run configuration. Diffusion time tau maps to
/// round(tau * N) resampling generations.
struct MCConfig {
    int pop_size;
    SimplexPoint p0;
    double horizon;
    int replicates;
    std::uint64_t seed;

    int generations() const;
    void validate() const;
};

struct MCEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    int replicates = 0;
    std::map<Face, double> absorbed_fraction;
};

/// One trajectory of the finite-N model: every generation the next allele
/// counts are a multinomial resample of N individuals from the current
/// frequencies. Lost alleles never return.
SimplexPoint simulate_discrete_wf(const MCConfig& cfg, Rng& rng);

/// Monte Carlo mean of `payoff` over trajectory endpoints, with deterministic
/// per-replicate streams and a fixed pairwise reduction order, so results do
/// not depend on the thread count.
MCEstimate mc_estimate(const std::function<double(const SimplexPoint&)>& payoff, const MCConfig& cfg,
                       int threads = 0);

/// Estimates E_p0[f(X_tau)], the backward solution at time -tau, with the
/// stratum component of f selected by the endpoint's face.
MCEstimate mc_backward_estimate(const StratifiedFinalCondition& f, const MCConfig& cfg, int threads = 0);

/// Same, but against the solution's extended final condition (its t = 0
/// snapshot), which also fills the strata the input left unprescribed.
MCEstimate mc_backward_estimate(const GlobalSolution& solution, const MCConfig& cfg, int threads = 0);

}  // namespace wf
