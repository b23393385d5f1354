#include "wf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wf {

namespace {

void enumerate_exponents(int vars, int max_degree, ExponentVec& cur, int pos, int used,
                         std::vector<ExponentVec>& out) {
    if (pos == vars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e + used <= max_degree; ++e) {
        cur[static_cast<std::size_t>(pos)] = e;
        enumerate_exponents(vars, max_degree, cur, pos + 1, used + e, out);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::vector<ExponentVec> monomial_basis(const Chart& chart, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("negative basis degree");
    std::vector<ExponentVec> out;
    ExponentVec cur(static_cast<std::size_t>(chart.free_count()), 0);
    if (chart.free_count() == 0) {
        out.push_back(cur);
        return out;
    }
    enumerate_exponents(chart.free_count(), max_degree, cur, 0, 0, out);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

std::vector<std::vector<Rational>> operator_matrix(const Face& face, int max_degree, OperatorKind kind) {
    Chart chart(face);
    auto basis = monomial_basis(chart, max_degree);
    std::map<ExponentVec, std::size_t> row_of;
    for (std::size_t i = 0; i < basis.size(); ++i) row_of.emplace(basis[i], i);

    std::vector<std::vector<Rational>> matrix(basis.size(), std::vector<Rational>(basis.size(), Rational(0)));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        MultiPoly mono = MultiPoly::monomial(chart, basis[j], 1);
        MultiPoly image = kind == OperatorKind::Backward ? apply_backward(mono) : apply_forward(mono);
        for (const auto& [e, c] : image.terms()) {
            auto it = row_of.find(e);
            if (it == row_of.end())
                throw DecompositionError("operator image leaves the degree-" + std::to_string(max_degree) +
                                         " basis on face " + face.to_string());
            matrix[it->second][j] = c;
        }
    }
    return matrix;
}

Rational forward_eigenvalue(int d, int m) {
    return Rational((m + d) * (m + d + 1), 2);
}

namespace {

MultiPoly degree_part(const MultiPoly& p, int k) {
    MultiPoly out(p.chart());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == k) out += MultiPoly::monomial(p.chart(), e, c);
    return out;
}

std::vector<EigenPair> compute_proper_basis(const Face& face, int max_degree) {
    if (face.dim() < 1)
        throw std::invalid_argument("proper basis needs a face of dimension >= 1, got " + face.to_string());
    int d = face.dim();
    if (max_degree < d + 1)
        throw std::invalid_argument("max degree must be at least dim+1 = " + std::to_string(d + 1));

    Chart chart(face);
    MultiPoly w = omega(face);
    int forward_degree = max_degree - (d + 1);

    std::vector<EigenPair> basis;
    for (const ExponentVec& top : monomial_basis(chart, forward_degree)) {
        int m = total_degree(top);
        Rational lambda = forward_eigenvalue(d, m);
        // The graded block of L at degree m is the scalar -lambda_m, so an
        // eigenvector with this leading monomial follows by back-substitution
        // through the strictly lower blocks.
        MultiPoly q = MultiPoly::monomial(chart, top, 1);
        for (int k = m - 1; k >= 0; --k) {
            MultiPoly residual = apply_forward(q) + q.scaled(lambda);
            MultiPoly rk = degree_part(residual, k);
            if (rk.is_zero()) continue;
            q += rk.scaled(Rational(-1) / (lambda - forward_eigenvalue(d, k)));
        }
        if (!(apply_forward(q) + q.scaled(lambda)).is_zero())
            throw DecompositionError("forward eigen identity failed in the degree-" + std::to_string(m) +
                                     " block on face " + face.to_string());
        MultiPoly proper = w * q;
        if (!(apply_backward(proper) + proper.scaled(lambda)).is_zero())
            throw DecompositionError("backward eigen identity failed in the degree-" + std::to_string(m) +
                                     " block on face " + face.to_string());
        basis.push_back(EigenPair{lambda, std::move(proper), std::move(q), face, true});
    }
    return basis;
}

std::mutex g_basis_mutex;
std::map<std::pair<Face, int>, std::vector<EigenPair>>& basis_cache() {
    static std::map<std::pair<Face, int>, std::vector<EigenPair>> cache;
    return cache;
}

/// Exact dense linear solve, Gaussian elimination with first-nonzero pivoting.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw DecompositionError("singular pairing block in spectral projection");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace

std::vector<EigenPair> proper_basis(const Face& face, int max_degree) {
    std::lock_guard<std::mutex> lock(g_basis_mutex);
    auto key = std::make_pair(face, max_degree);
    auto it = basis_cache().find(key);
    if (it == basis_cache().end()) it = basis_cache().emplace(key, compute_proper_basis(face, max_degree)).first;
    return it->second;
}

std::vector<Rational> project_final_condition(const MultiPoly& f, const std::vector<EigenPair>& basis) {
    if (basis.empty()) return {};
    const Face& face = basis.front().face;
    if (!(f.chart() == Chart(face))) throw std::invalid_argument("final condition on wrong chart");

    std::vector<Rational> coeffs(basis.size(), Rational(0));
    // Cross-eigenvalue pairings vanish by adjointness, so the system splits
    // into one Gram block per eigenvalue.
    std::size_t i = 0;
    while (i < basis.size()) {
        std::size_t j = i;
        while (j < basis.size() && basis[j].kappa == basis[i].kappa) ++j;
        std::size_t size = j - i;
        std::vector<std::vector<Rational>> gram(size, std::vector<Rational>(size));
        std::vector<Rational> rhs(size);
        for (std::size_t a = 0; a < size; ++a) {
            rhs[a] = inner_product(f, basis[i + a].forward_factor);
            for (std::size_t b = 0; b < size; ++b)
                gram[a][b] = inner_product(basis[i + b].eigenfunction, basis[i + a].forward_factor);
        }
        auto block = solve_linear(std::move(gram), std::move(rhs));
        for (std::size_t a = 0; a < size; ++a) coeffs[i + a] = block[a];
        i = j;
    }
    return coeffs;
}

MultiPoly ProperSolution::snapshot() const {
    MultiPoly out{Chart(face)};
    for (const auto& mode : modes) out += mode.shape.scaled(mode.coeff);
    return out;
}

ProperSolution proper_solution(const MultiPoly& f, const Face& face, int max_degree) {
    auto basis = proper_basis(face, max_degree);
    auto coeffs = project_final_condition(f, basis);
    ProperSolution sol{face, {}, max_degree};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i] == 0) continue;
        sol.modes.push_back({basis[i].kappa, coeffs[i], basis[i].eigenfunction});
    }
    return sol;
}

ProperSolution vertex_solution(const Face& vertex, const Rational& value) {
    if (vertex.dim() != 0) throw std::invalid_argument("vertex solution needs a vertex face");
    ProperSolution sol{vertex, {}, 0};
    if (value != 0) sol.modes.push_back({Rational(0), value, MultiPoly::constant(Chart(vertex), 1)});
    return sol;
}

double evaluate_solution(const ProperSolution& sol, const SimplexPoint& p, double t) {
    if (t > 0) throw std::invalid_argument("backward solutions are defined for t <= 0");
    double sum = 0.0;
    for (const auto& mode : sol.modes)
        sum += to_double(mode.coeff) * std::exp(to_double(mode.kappa) * t) * mode.shape.eval(p);
    return sum;
}

}  // namespace wf
