#pragma once

#include "wf/face.hpp"
#include "wf/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wf {

/// Coordinate chart on a face: one allele label is eliminated through
/// p^dep = 1 - sum(others); the remaining labels are the free variables.
/// Convention: eliminate 0 when the face contains it, else the smallest label.
class Chart {
public:
    explicit Chart(Face face);
    Chart(Face face, int dependent);

    const Face& face() const { return face_; }
    int dependent() const { return dependent_; }
    const std::vector<int>& free_labels() const { return free_; }
    int free_count() const { return static_cast<int>(free_.size()); }

    /// Position of a label among the free variables, -1 if it is the
    /// dependent label or not on the face.
    int var_index(int label) const;

    friend bool operator==(const Chart& a, const Chart& b) {
        return a.face_ == b.face_ && a.dependent_ == b.dependent_;
    }

private:
    Face face_;
    int dependent_;
    std::vector<int> free_;
};

using ExponentVec = std::vector<int>;

int total_degree(const ExponentVec& e);

/// Graded-lexicographic order: first by total degree, then lex on exponents.
bool graded_lex_less(const ExponentVec& a, const ExponentVec& b);

/// Sparse multivariate polynomial over a face chart, with exact rational
/// coefficients. Zero coefficients are never stored.
class MultiPoly {
public:
    explicit MultiPoly(Chart chart);

    static MultiPoly constant(const Chart& chart, const Rational& value);
    static MultiPoly monomial(const Chart& chart, const ExponentVec& exponents, const Rational& coeff);
    /// The homogeneous coordinate p^label expressed in the chart; the
    /// dependent label yields 1 - sum of the free variables.
    static MultiPoly coordinate(const Chart& chart, int label);

    /// Global total-degree cap; operations producing higher degree throw.
    static int degree_cap();
    static void set_degree_cap(int cap);

    const Chart& chart() const { return chart_; }
    const std::map<ExponentVec, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;
    int degree() const;  // total degree; -1 for the zero polynomial

    Rational coeff(const ExponentVec& exponents) const;
    /// Largest monomial in graded-lex order; throws on the zero polynomial.
    const ExponentVec& leading_monomial() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    MultiPoly scaled(const Rational& factor) const;
    MultiPoly pow(int e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.chart_ == b.chart_ && a.terms_ == b.terms_;
    }

    /// Exact partial derivative with respect to the free variable `label`.
    MultiPoly partial(int label) const;

    /// Exact integral over the face in chart coordinates, termwise via the
    /// Dirichlet monomial formula.
    Rational integrate() const;

    double eval(const SimplexPoint& p) const;
    Rational eval_exact(const std::vector<Rational>& free_values) const;

    /// Substitutes each free variable by the image of its label, a polynomial
    /// on the target chart. Ring homomorphism.
    MultiPoly substitute(const Chart& target, const std::function<MultiPoly(int)>& image_of_label) const;

    /// Exact division by a nonconstant linear form on the same chart;
    /// nullopt if the division leaves a remainder.
    std::optional<MultiPoly> divide_by_linear(const MultiPoly& linear) const;

    /// Rational content (gcd of coefficients with the sign of the leading
    /// one); zero polynomial has content 0.
    Rational content() const;

    std::string to_string() const;
    static MultiPoly parse(const Chart& chart, const std::string& text);

private:
    void add_term(const ExponentVec& exponents, const Rational& coeff);
    void check_degree() const;

    Chart chart_;
    std::map<ExponentVec, Rational> terms_;
};

/// L2 product on the face: integral of a*b.
Rational inner_product(const MultiPoly& a, const MultiPoly& b);

/// Restriction to the facet obtained by deleting `lost_label`, re-expressed
/// in the facet's standard chart.
MultiPoly restrict_to_facet(const MultiPoly& poly, int lost_label);

/// Iterated facet restriction down to an arbitrary subface.
MultiPoly restrict_to_subface(const MultiPoly& poly, const Face& subface);

}  // namespace wf
