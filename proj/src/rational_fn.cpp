#include "wf/rational_fn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wf {

namespace {

bool factor_less(const MultiPoly& a, const MultiPoly& b) { return a.terms() < b.terms(); }

}  // namespace

RationalFn::RationalFn(MultiPoly numerator) : numer_(std::move(numerator)) {}

RationalFn::RationalFn(MultiPoly numerator, std::vector<DenomFactor> denominator)
    : numer_(std::move(numerator)), denom_(std::move(denominator)) {
    canonicalize();
}

void RationalFn::canonicalize() {
    std::vector<DenomFactor> cleaned;
    Rational scale = 1;
    for (auto& df : denom_) {
        if (!(df.factor.chart() == numer_.chart()))
            throw std::invalid_argument("denominator factor on wrong chart");
        if (df.power < 0) throw std::invalid_argument("negative denominator power");
        if (df.power == 0) continue;
        if (df.factor.is_zero()) throw std::invalid_argument("zero denominator factor");
        if (df.factor.degree() > 1)
            throw std::invalid_argument("denominator factor must be linear: " + df.factor.to_string());
        if (df.factor.is_constant()) {
            scale /= rational_pow(df.factor.constant_value(), static_cast<unsigned>(df.power));
            continue;
        }
        Rational content = df.factor.content();
        scale /= rational_pow(content, static_cast<unsigned>(df.power));
        cleaned.push_back({df.factor.scaled(1 / content), df.power});
    }
    if (scale != 1) numer_ = numer_.scaled(scale);

    // Merge duplicate factors.
    std::sort(cleaned.begin(), cleaned.end(),
              [](const DenomFactor& a, const DenomFactor& b) { return factor_less(a.factor, b.factor); });
    denom_.clear();
    for (auto& df : cleaned) {
        if (!denom_.empty() && denom_.back().factor == df.factor)
            denom_.back().power += df.power;
        else
            denom_.push_back(std::move(df));
    }

    if (numer_.is_zero()) {
        denom_.clear();
        return;
    }
    // Cancel factors dividing the numerator exactly.
    for (auto it = denom_.begin(); it != denom_.end();) {
        while (it->power > 0) {
            auto q = numer_.divide_by_linear(it->factor);
            if (!q) break;
            numer_ = std::move(*q);
            --it->power;
        }
        it = it->power == 0 ? denom_.erase(it) : std::next(it);
    }
}

const MultiPoly& RationalFn::as_polynomial() const {
    if (!denom_.empty())
        throw std::domain_error("rational function is not polynomial: " + to_string());
    return numer_;
}

RationalFn RationalFn::operator-() const {
    RationalFn out = *this;
    out.numer_ = -out.numer_;
    return out;
}

namespace {

/// Product of a's factors not covered by b, raised to the power deficit.
MultiPoly complement_product(const Chart& chart, const std::vector<DenomFactor>& a,
                             const std::vector<DenomFactor>& b) {
    MultiPoly prod = MultiPoly::constant(chart, 1);
    for (const auto& fa : a) {
        int covered = 0;
        for (const auto& fb : b)
            if (fb.factor == fa.factor) covered = fb.power;
        for (int k = covered; k < fa.power; ++k) prod = prod * fa.factor;
    }
    return prod;
}

std::vector<DenomFactor> merged_denominator(const std::vector<DenomFactor>& a,
                                            const std::vector<DenomFactor>& b) {
    std::vector<DenomFactor> out = a;
    for (const auto& fb : b) {
        bool found = false;
        for (auto& fo : out) {
            if (fo.factor == fb.factor) {
                fo.power = std::max(fo.power, fb.power);
                found = true;
            }
        }
        if (!found) out.push_back(fb);
    }
    return out;
}

}  // namespace

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (!(a.chart() == b.chart())) throw std::invalid_argument("chart mismatch in rational addition");
    MultiPoly na = a.numerator() * complement_product(a.chart(), b.denominator(), a.denominator());
    MultiPoly nb = b.numerator() * complement_product(a.chart(), a.denominator(), b.denominator());
    return RationalFn(na + nb, merged_denominator(a.denominator(), b.denominator()));
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (!(a.chart() == b.chart())) throw std::invalid_argument("chart mismatch in rational product");
    std::vector<DenomFactor> denom = a.denominator();
    for (const auto& df : b.denominator()) {
        bool found = false;
        for (auto& d : denom)
            if (d.factor == df.factor) {
                d.power += df.power;
                found = true;
            }
        if (!found) denom.push_back(df);
    }
    return RationalFn(a.numerator() * b.numerator(), std::move(denom));
}

RationalFn operator*(const RationalFn& a, const MultiPoly& b) {
    return RationalFn(a.numerator() * b, a.denominator());
}

RationalFn RationalFn::scaled(const Rational& factor) const {
    RationalFn out = *this;
    out.numer_ = out.numer_.scaled(factor);
    if (out.numer_.is_zero()) out.denom_.clear();
    return out;
}

RationalFn RationalFn::partial(int label) const {
    if (denom_.empty()) return RationalFn(numer_.partial(label));
    // d(N / prod F_i^{e_i}) = (N' prod F_i - N sum_i e_i F_i' prod_{j!=i} F_j)
    //                          / prod F_i^{e_i + 1}
    MultiPoly all = MultiPoly::constant(chart(), 1);
    for (const auto& df : denom_) all = all * df.factor;
    MultiPoly top = numer_.partial(label) * all;
    for (std::size_t i = 0; i < denom_.size(); ++i) {
        MultiPoly others = MultiPoly::constant(chart(), 1);
        for (std::size_t j = 0; j < denom_.size(); ++j)
            if (j != i) others = others * denom_[j].factor;
        top -= numer_ * denom_[i].factor.partial(label).scaled(denom_[i].power) * others;
    }
    std::vector<DenomFactor> denom = denom_;
    for (auto& df : denom) ++df.power;
    return RationalFn(std::move(top), std::move(denom));
}

double RationalFn::eval(const SimplexPoint& p) const {
    double value = numer_.eval(p);
    for (const auto& df : denom_) {
        double f = df.factor.eval(p);
        if (std::abs(f) <= kFaceTolerance)
            throw EvalError("denominator factor (" + df.factor.to_string() + ") vanishes at " + p.to_string());
        for (int k = 0; k < df.power; ++k) value /= f;
    }
    return value;
}

bool RationalFn::equals(const RationalFn& other) const {
    if (!(chart() == other.chart())) return false;
    MultiPoly lhs = numer_ * complement_product(chart(), other.denom_, denom_);
    MultiPoly rhs = other.numer_ * complement_product(chart(), denom_, other.denom_);
    return lhs == rhs;
}

RationalFn RationalFn::substitute(const Chart& target,
                                  const std::function<MultiPoly(int)>& image_of_label) const {
    MultiPoly numer = numer_.substitute(target, image_of_label);
    std::vector<DenomFactor> denom;
    for (const auto& df : denom_) {
        MultiPoly image = df.factor.substitute(target, image_of_label);
        if (image.is_zero())
            throw NoContinuousExtension("factor (" + df.factor.to_string() +
                                        ") vanishes identically under the substitution");
        denom.push_back({std::move(image), df.power});
    }
    return RationalFn(std::move(numer), std::move(denom));
}

RationalFn RationalFn::restrict_to_facet(int lost_label) const {
    const Chart& src = chart();
    Face facet = src.face().without(lost_label);
    Chart dst(facet);
    auto images = [&](int label) {
        if (label == lost_label) return MultiPoly(dst);
        return MultiPoly::coordinate(dst, label);
    };
    MultiPoly numer = numer_.substitute(dst, images);
    std::vector<DenomFactor> denom;
    for (const auto& df : denom_) {
        MultiPoly image = df.factor.substitute(dst, images);
        if (image.is_zero()) {
            // The factor vanishes identically on the facet. The canonical form
            // already cancelled everything cancellable, so if the numerator
            // does not vanish there the restriction genuinely blows up; if it
            // does vanish, the limit depends on the approach direction.
            throw NoContinuousExtension("no continuous extension to " + facet.to_string() +
                                        ": factor (" + df.factor.to_string() + ") vanishes there");
        }
        denom.push_back({std::move(image), df.power});
    }
    return RationalFn(std::move(numer), std::move(denom));
}

RationalFn RationalFn::restrict_to_subface(const Face& subface) const {
    if (!chart().face().contains_face(subface))
        throw std::invalid_argument("subface " + subface.to_string() + " is not contained in " +
                                    chart().face().to_string());
    RationalFn cur = *this;
    auto lost = chart().face().indices();
    for (auto it = lost.rbegin(); it != lost.rend(); ++it)
        if (!subface.contains(*it)) cur = cur.restrict_to_facet(*it);
    return cur;
}

std::string RationalFn::to_string() const {
    if (denom_.empty()) return numer_.to_string();
    std::ostringstream out;
    out << '(' << numer_.to_string() << ") / ";
    for (std::size_t i = 0; i < denom_.size(); ++i) {
        if (i) out << ' ';
        out << '(' << denom_[i].factor.to_string() << ')';
        if (denom_[i].power > 1) out << '^' << denom_[i].power;
    }
    return out.str();
}

}  // namespace wf
