#include "wf/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace wf {

int MCConfig::generations() const { return static_cast<int>(std::lround(horizon * pop_size)); }

void MCConfig::validate() const {
    if (pop_size < 2) throw std::invalid_argument("population size must be at least 2");
    if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
    if (replicates < 1) throw std::invalid_argument("need at least one replicate");
}

namespace {

/// Exact binomial sampling by CDF inversion walking outward from the mode;
/// expected cost O(sqrt(N p (1-p))) per draw.
class BinomialSampler {
public:
    explicit BinomialSampler(int n_max) : log_fact_(static_cast<std::size_t>(n_max) + 1, 0.0) {
        for (std::size_t k = 1; k < log_fact_.size(); ++k)
            log_fact_[k] = log_fact_[k - 1] + std::log(static_cast<double>(k));
    }

    int draw(Rng& rng, int n, double p) const {
        if (n == 0 || p <= 0.0) return 0;
        if (p >= 1.0) return n;
        double u = rng.next_unit();
        int mode = static_cast<int>((n + 1) * p);
        if (mode > n) mode = n;
        double pm = pmf(n, mode, p);
        double cum = pm;
        if (u <= cum) return mode;
        int lo = mode, hi = mode;
        double plo = pm, phi = pm;
        double odds = p / (1.0 - p);
        while (lo > 0 || hi < n) {
            double next_lo = lo > 0 ? plo * lo / ((n - lo + 1.0) * odds) : -1.0;
            double next_hi = hi < n ? phi * (n - hi) * odds / (hi + 1.0) : -1.0;
            if (next_lo >= next_hi) {
                --lo;
                plo = next_lo;
                cum += plo;
                if (u <= cum) return lo;
            } else {
                ++hi;
                phi = next_hi;
                cum += phi;
                if (u <= cum) return hi;
            }
        }
        return u <= cum ? hi : n;  // rounding slack in the cumulative sum
    }

private:
    double pmf(int n, int k, double p) const {
        double lf = log_fact_[static_cast<std::size_t>(n)] - log_fact_[static_cast<std::size_t>(k)] -
                    log_fact_[static_cast<std::size_t>(n - k)];
        return std::exp(lf + k * std::log(p) + (n - k) * std::log1p(-p));
    }

    std::vector<double> log_fact_;
};

/// Initial integer counts via largest-remainder rounding of N * p0.
std::vector<int> initial_counts(const SimplexPoint& p0, int pop_size) {
    const auto& coords = p0.coords();
    std::vector<int> counts(coords.size());
    std::vector<std::pair<double, std::size_t>> remainders;
    int assigned = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        double exact = coords[i] * pop_size;
        counts[i] = static_cast<int>(std::floor(exact));
        assigned += counts[i];
        remainders.push_back({exact - counts[i], i});
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (int k = 0; k < pop_size - assigned; ++k)
        ++counts[remainders[static_cast<std::size_t>(k) % remainders.size()].second];
    return counts;
}

SimplexPoint endpoint_from_counts(const Face& start_face, const std::vector<int>& counts, int pop_size) {
    std::vector<int> labels;
    std::vector<double> coords;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > 0) {
            labels.push_back(start_face.indices()[i]);
            coords.push_back(static_cast<double>(counts[i]) / pop_size);
        }
    }
    return SimplexPoint(Face(std::move(labels), start_face.ambient_n()), std::move(coords));
}

SimplexPoint run_trajectory(const MCConfig& cfg, const BinomialSampler& binomial, Rng& rng) {
    std::vector<int> counts = initial_counts(cfg.p0, cfg.pop_size);
    int alive = 0;
    for (int c : counts)
        if (c > 0) ++alive;
    int generations = cfg.generations();
    double n = cfg.pop_size;
    std::vector<int> next(counts.size());
    for (int g = 0; g < generations && alive > 1; ++g) {
        int remaining = cfg.pop_size;
        double mass_left = 1.0;
        alive = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] == 0) {
                next[i] = 0;
                continue;
            }
            double p = counts[i] / n;
            int draw;
            if (remaining == 0) {
                draw = 0;
            } else if (mass_left - p <= 1e-12) {
                // last positive allele takes what is left; any true conditional
                // gap is at least 1/N, far above the rounding drift here
                draw = remaining;
            } else {
                draw = binomial.draw(rng, remaining, std::min(1.0, p / mass_left));
            }
            next[i] = draw;
            remaining -= draw;
            mass_left -= p;
            if (draw > 0) ++alive;
        }
        counts.swap(next);
    }
    return endpoint_from_counts(cfg.p0.face(), counts, cfg.pop_size);
}

double pairwise_sum(const std::vector<double>& values, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += values[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(values, lo, mid) + pairwise_sum(values, mid, hi);
}

}  // namespace

SimplexPoint simulate_discrete_wf(const MCConfig& cfg, Rng& rng) {
    cfg.validate();
    BinomialSampler binomial(cfg.pop_size);
    return run_trajectory(cfg, binomial, rng);
}

MCEstimate mc_estimate(const std::function<double(const SimplexPoint&)>& payoff, const MCConfig& cfg,
                       int threads) {
    cfg.validate();
    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw > 0 ? static_cast<int>(hw) : 1;
    }
    threads = std::min<int>(threads, cfg.replicates);

    BinomialSampler binomial(cfg.pop_size);
    std::vector<double> values(static_cast<std::size_t>(cfg.replicates));
    std::vector<std::map<Face, std::int64_t>> tallies(static_cast<std::size_t>(threads));

    auto worker = [&](int t) {
        auto reps = static_cast<std::int64_t>(cfg.replicates);
        std::int64_t lo = reps * t / threads, hi = reps * (t + 1) / threads;
        for (std::int64_t r = lo; r < hi; ++r) {
            Rng rng(cfg.seed, static_cast<std::uint64_t>(r));
            SimplexPoint endpoint = run_trajectory(cfg, binomial, rng);
            values[static_cast<std::size_t>(r)] = payoff(endpoint);
            ++tallies[static_cast<std::size_t>(t)][endpoint.face()];
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    MCEstimate est;
    est.replicates = cfg.replicates;
    est.mean = pairwise_sum(values, 0, values.size()) / cfg.replicates;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        double d = values[i] - est.mean;
        sq[i] = d * d;
    }
    double var = cfg.replicates > 1 ? pairwise_sum(sq, 0, sq.size()) / (cfg.replicates - 1) : 0.0;
    est.standard_error = std::sqrt(var / cfg.replicates);

    std::map<Face, std::int64_t> counts;
    for (const auto& tally : tallies)
        for (const auto& [face, c] : tally) counts[face] += c;
    for (const auto& [face, c] : counts)
        est.absorbed_fraction[face] = static_cast<double>(c) / cfg.replicates;
    return est;
}

MCEstimate mc_backward_estimate(const StratifiedFinalCondition& f, const MCConfig& cfg, int threads) {
    return mc_estimate([&](const SimplexPoint& endpoint) { return f.eval(endpoint); }, cfg, threads);
}

MCEstimate mc_backward_estimate(const GlobalSolution& solution, const MCConfig& cfg, int threads) {
    return mc_estimate([&](const SimplexPoint& endpoint) { return solution.eval(endpoint, 0.0); }, cfg,
                       threads);
}

}  // namespace wf
