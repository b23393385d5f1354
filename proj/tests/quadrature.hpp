#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace wftest {

/// Gauss-Legendre rule on [0,1], computed once by Newton iteration on the
/// Legendre polynomial. Test-only numerical integration oracle, independent
/// of the exact Dirichlet-formula path used by the library.
class GaussLegendre {
public:
    explicit GaussLegendre(int points = 16) {
        nodes_.resize(static_cast<std::size_t>(points));
        weights_.resize(static_cast<std::size_t>(points));
        int n = points;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            nodes_[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);  // map to [0,1]
            weights_[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    /// Integral of f over the d-dimensional orthogonal simplex
    /// {x >= 0, sum x <= 1}, by iterated rules with shrinking upper limits.
    double over_simplex(int dim, const std::function<double(const std::vector<double>&)>& f) const {
        std::vector<double> x(static_cast<std::size_t>(dim), 0.0);
        return recurse(0, 1.0, x, dim, f);
    }

private:
    double recurse(int level, double budget, std::vector<double>& x, int dim,
                   const std::function<double(const std::vector<double>&)>& f) const {
        if (level == dim) return f(x);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            x[static_cast<std::size_t>(level)] = budget * nodes_[i];
            sum += weights_[i] * recurse(level + 1, budget - x[static_cast<std::size_t>(level)], x, dim, f);
        }
        x[static_cast<std::size_t>(level)] = 0.0;
        return budget * sum;
    }

    std::vector<double> nodes_;
    std::vector<double> weights_;
};

}  // namespace wftest
