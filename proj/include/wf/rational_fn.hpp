#pragma once

#include "wf/polynomial.hpp"

#include <vector>

namespace wf {

/// Raised when a rational function is evaluated where a denominator factor
/// vanishes.
class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a restriction to a boundary face has no continuous extension
/// (a denominator factor vanishes identically there after cancellation).
class NoContinuousExtension : public std::runtime_error {
public:
    explicit NoContinuousExtension(const std::string& what) : std::runtime_error(what) {}
};

struct DenomFactor {
    MultiPoly factor;  // primitive linear form, strictly positive on the open face
    int power = 1;
};

/// Ratio of a polynomial and a product of linear forms, kept factored.
/// Construction canonicalizes: factors are made primitive (integer coprime
/// coefficients, positive leading coefficient), constant factors are folded
/// into the numerator, matching numerator factors are cancelled, and factors
/// are stored sorted.
class RationalFn {
public:
    explicit RationalFn(MultiPoly numerator);
    RationalFn(MultiPoly numerator, std::vector<DenomFactor> denominator);

    static RationalFn zero(const Chart& chart) { return RationalFn(MultiPoly(chart)); }

    const Chart& chart() const { return numer_.chart(); }
    const MultiPoly& numerator() const { return numer_; }
    const std::vector<DenomFactor>& denominator() const { return denom_; }

    bool is_zero() const { return numer_.is_zero(); }
    bool is_polynomial() const { return denom_.empty(); }
    /// Throws std::domain_error when a denominator factor remains.
    const MultiPoly& as_polynomial() const;

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    RationalFn scaled(const Rational& factor) const;

    RationalFn partial(int label) const;

    double eval(const SimplexPoint& p) const;

    /// Mathematical equality via cross-multiplication; exact.
    bool equals(const RationalFn& other) const;

    /// Substitutes each free variable of the source chart by a polynomial of
    /// degree <= 1 on the target chart (denominator factors must stay linear).
    RationalFn substitute(const Chart& target, const std::function<MultiPoly(int)>& image_of_label) const;

    /// Continuous restriction to the facet without `lost_label`; throws
    /// NoContinuousExtension when a surviving factor vanishes on the facet.
    RationalFn restrict_to_facet(int lost_label) const;
    RationalFn restrict_to_subface(const Face& subface) const;

    std::string to_string() const;

private:
    void canonicalize();

    MultiPoly numer_;
    std::vector<DenomFactor> denom_;
};

RationalFn operator*(const RationalFn& a, const MultiPoly& b);

}  // namespace wf
