#pragma once

#include "wf/rational_fn.hpp"
#include "wf/rng.hpp"

#include <functional>
#include <vector>

namespace wftest {

/// Random polynomial with small integer-rational coefficients, total degree
/// <= max_degree, on the chart of the given face.
inline wf::MultiPoly random_poly(const wf::Chart& chart, int max_degree, wf::Rng& rng,
                                 int coeff_range = 9) {
    wf::MultiPoly out(chart);
    std::vector<int> e(static_cast<std::size_t>(chart.free_count()), 0);
    // Walk every monomial and keep it with probability ~1/2.
    std::function<void(int, int)> visit = [&](int pos, int used) {
        if (pos == chart.free_count()) {
            if (rng.next_unit() < 0.5) return;
            int num = rng.next_int(-coeff_range, coeff_range);
            if (num == 0) return;
            int den = rng.next_int(1, 4);
            out += wf::MultiPoly::monomial(chart, e, wf::Rational(num, den));
            return;
        }
        for (int k = 0; k + used <= max_degree; ++k) {
            e[static_cast<std::size_t>(pos)] = k;
            visit(pos + 1, used + k);
        }
        e[static_cast<std::size_t>(pos)] = 0;
    };
    visit(0, 0);
    return out;
}

/// Random nonzero rational function with denominator factors of the kind the
/// extension scheme produces (sums of coordinates).
inline wf::RationalFn random_rational_fn(const wf::Chart& chart, int max_degree, wf::Rng& rng) {
    wf::MultiPoly numer = random_poly(chart, max_degree, rng);
    if (numer.is_zero()) numer = wf::MultiPoly::constant(chart, 1);
    std::vector<wf::DenomFactor> denom;
    int factors = rng.next_int(0, 2);
    for (int k = 0; k < factors && chart.free_count() >= 2; ++k) {
        wf::MultiPoly sum(chart);
        int taken = 0;
        for (int label : chart.free_labels())
            if (rng.next_unit() < 0.6) {
                sum += wf::MultiPoly::coordinate(chart, label);
                ++taken;
            }
        if (taken >= 2) denom.push_back({sum, rng.next_int(1, 2)});
    }
    return wf::RationalFn(numer, denom);
}

inline wf::Face random_face(int ambient_n, int dim, wf::Rng& rng) {
    std::vector<int> labels;
    for (int i = 0; i <= ambient_n; ++i) labels.push_back(i);
    for (int i = static_cast<int>(labels.size()) - 1; i > 0; --i)
        std::swap(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(rng.next_int(0, i))]);
    labels.resize(static_cast<std::size_t>(dim) + 1);
    return wf::Face(labels, ambient_n);
}

}  // namespace wftest
