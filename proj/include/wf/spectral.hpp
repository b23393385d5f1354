#pragma once

#include "wf/operators.hpp"

namespace wf {

/// Raised when the eigen machinery cannot complete (violated exact identity,
/// singular pairing block).
class DecompositionError : public std::runtime_error {
public:
    explicit DecompositionError(const std::string& what) : std::runtime_error(what) {}
};

/// A backward eigenpair L* phi = -kappa phi. Proper pairs vanish on the face
/// boundary and arise as omega * (forward eigenfunction of the same
/// eigenvalue); the forward factor is kept for projections.
struct EigenPair {
    Rational kappa;
    MultiPoly eigenfunction;   // proper eigenfunction of L*
    MultiPoly forward_factor;  // forward eigenfunction q, eigenfunction = omega * q
    Face face;
    bool proper = true;
};

/// Monomial exponent vectors of total degree <= max_degree in graded-lex
/// ascending order.
std::vector<ExponentVec> monomial_basis(const Chart& chart, int max_degree);

/// Matrix of L or L* on that monomial basis; column j holds the expansion of
/// the operator applied to basis monomial j.
std::vector<std::vector<Rational>> operator_matrix(const Face& face, int max_degree, OperatorKind kind);

/// Forward eigenvalue of the degree-m graded block on a dim-d face:
/// (m+d)(m+d+1)/2.
Rational forward_eigenvalue(int d, int m);

/// Proper eigenbasis of L* on the face up to eigenfunction degree max_degree.
/// Pairs are ordered by eigenvalue, then graded-lex by the leading monomial
/// of the forward factor; forward factors are monic. Results are cached.
std::vector<EigenPair> proper_basis(const Face& face, int max_degree);

/// Coefficients c with f ~ sum c_m * eigenfunction_m, computed blockwise from
/// the biorthogonal pairing with the forward factors. Exact for f in the span.
std::vector<Rational> project_final_condition(const MultiPoly& f, const std::vector<EigenPair>& basis);

/// Spectral solution u(p,t) = sum c_m e^{kappa_m t} phi*_m(p) of the backward
/// equation on one open face, valid for t <= 0.
struct ProperSolution {
    struct Mode {
        Rational kappa;
        Rational coeff;
        MultiPoly shape;
    };

    Face face;
    std::vector<Mode> modes;
    int truncation_degree = 0;

    /// u(.,0) as a polynomial (the basis projection of the final condition).
    MultiPoly snapshot() const;
};

ProperSolution proper_solution(const MultiPoly& f, const Face& face, int max_degree);

/// The trivial solution on a vertex: constant in space and time.
ProperSolution vertex_solution(const Face& vertex, const Rational& value);

double evaluate_solution(const ProperSolution& sol, const SimplexPoint& p, double t);

}  // namespace wf
