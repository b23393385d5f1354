#include "wf/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wf {

Chart::Chart(Face face) : Chart(face, face.contains(0) ? 0 : face.indices().front()) {}

Chart::Chart(Face face, int dependent) : face_(std::move(face)), dependent_(dependent) {
    if (!face_.contains(dependent_))
        throw std::invalid_argument("chart dependent label must lie on the face");
    for (int label : face_.indices())
        if (label != dependent_) free_.push_back(label);
}

int Chart::var_index(int label) const {
    auto it = std::lower_bound(free_.begin(), free_.end(), label);
    if (it == free_.end() || *it != label) return -1;
    return static_cast<int>(it - free_.begin());
}

int total_degree(const ExponentVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool graded_lex_less(const ExponentVec& a, const ExponentVec& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

namespace {
std::atomic<int> g_degree_cap{16};
}

int MultiPoly::degree_cap() { return g_degree_cap.load(); }

void MultiPoly::set_degree_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("degree cap must be positive");
    g_degree_cap.store(cap);
}

MultiPoly::MultiPoly(Chart chart) : chart_(std::move(chart)) {}

MultiPoly MultiPoly::constant(const Chart& chart, const Rational& value) {
    MultiPoly p(chart);
    p.add_term(ExponentVec(chart.free_count(), 0), value);
    return p;
}

MultiPoly MultiPoly::monomial(const Chart& chart, const ExponentVec& exponents, const Rational& coeff) {
    if (static_cast<int>(exponents.size()) != chart.free_count())
        throw std::invalid_argument("exponent vector length does not match chart");
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("negative exponent");
    MultiPoly p(chart);
    p.add_term(exponents, coeff);
    p.check_degree();
    return p;
}

MultiPoly MultiPoly::coordinate(const Chart& chart, int label) {
    if (!chart.face().contains(label))
        throw std::invalid_argument("label " + std::to_string(label) + " not on face " +
                                    chart.face().to_string());
    MultiPoly p(chart);
    ExponentVec e(chart.free_count(), 0);
    if (label == chart.dependent()) {
        p.add_term(e, 1);
        for (int i = 0; i < chart.free_count(); ++i) {
            ExponentVec ei(chart.free_count(), 0);
            ei[i] = 1;
            p.add_term(ei, -1);
        }
    } else {
        e[chart.var_index(label)] = 1;
        p.add_term(e, 1);
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Rational MultiPoly::coeff(const ExponentVec& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

const ExponentVec& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (graded_lex_less(best->first, it->first)) best = it;
    return best->first;
}

void MultiPoly::add_term(const ExponentVec& exponents, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_degree() const {
    if (degree() > degree_cap())
        throw std::domain_error("polynomial degree " + std::to_string(degree()) +
                                " exceeds the cap of " + std::to_string(degree_cap()));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    if (!(chart_ == rhs.chart_)) throw std::invalid_argument("chart mismatch in polynomial addition");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    if (!(chart_ == rhs.chart_)) throw std::invalid_argument("chart mismatch in polynomial subtraction");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.chart_ == b.chart_)) throw std::invalid_argument("chart mismatch in polynomial product");
    MultiPoly out(a.chart_);
    ExponentVec e(a.chart_.free_count());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    out.check_degree();
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(chart_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& factor) const {
    MultiPoly out(chart_);
    if (factor == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    MultiPoly out = constant(chart_, 1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

MultiPoly MultiPoly::partial(int label) const {
    int v = chart_.var_index(label);
    if (v < 0) throw std::invalid_argument("label " + std::to_string(label) + " is not a free chart variable");
    MultiPoly out(chart_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(v)] == 0) continue;
        ExponentVec d = e;
        int k = d[static_cast<std::size_t>(v)]--;
        out.add_term(d, c * k);
    }
    return out;
}

Rational MultiPoly::integrate() const {
    // Integral of prod x_i^{a_i} over the d-dimensional orthogonal simplex
    // equals prod(a_i!) / (d + sum a_i)!.
    int d = chart_.free_count();
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Int numer = 1;
        for (int a : e) numer *= factorial(static_cast<unsigned>(a));
        Int denom = factorial(static_cast<unsigned>(d + total_degree(e)));
        total += c * Rational(numer, denom);
    }
    return total;
}

double MultiPoly::eval(const SimplexPoint& p) const {
    if (!chart_.face().contains_face(p.face()))
        throw std::invalid_argument("point " + p.to_string() + " is not on the closed face " +
                                    chart_.face().to_string());
    std::vector<double> x(static_cast<std::size_t>(chart_.free_count()));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = p.coord(chart_.free_labels()[i]);
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = to_double(c);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= x[i];
        sum += term;
    }
    return sum;
}

Rational MultiPoly::eval_exact(const std::vector<Rational>& free_values) const {
    if (static_cast<int>(free_values.size()) != chart_.free_count())
        throw std::invalid_argument("value count does not match chart");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < free_values.size(); ++i)
            term *= rational_pow(free_values[i], static_cast<unsigned>(e[i]));
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const Chart& target, const std::function<MultiPoly(int)>& image_of_label) const {
    std::vector<MultiPoly> images;
    images.reserve(static_cast<std::size_t>(chart_.free_count()));
    for (int label : chart_.free_labels()) {
        MultiPoly img = image_of_label(label);
        if (!(img.chart() == target)) throw std::invalid_argument("substitution image on wrong chart");
        images.push_back(std::move(img));
    }
    // Cache powers of each image; exponents repeat across terms.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto image_pow = [&](std::size_t v, int e) -> const MultiPoly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
        return cache[static_cast<std::size_t>(e)];
    };
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (std::size_t v = 0; v < images.size(); ++v)
            if (e[v] > 0) term = term * image_pow(v, e[v]);
        out += term;
    }
    return out;
}

std::optional<MultiPoly> MultiPoly::divide_by_linear(const MultiPoly& linear) const {
    if (!(chart_ == linear.chart_)) throw std::invalid_argument("chart mismatch in division");
    if (linear.is_zero() || linear.degree() > 1)
        throw std::invalid_argument("divisor must be a nonzero linear form");
    if (linear.is_constant()) return scaled(1 / linear.constant_value());
    if (is_zero()) return MultiPoly(chart_);

    // Pivot on the smallest free variable appearing in the divisor.
    int v = -1;
    Rational cv = 0;
    for (const auto& [e, c] : linear.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 1 && (v < 0 || static_cast<int>(i) < v)) {
                v = static_cast<int>(i);
                cv = c;
            }
        }
    }
    MultiPoly quotient(chart_);
    MultiPoly rem = *this;
    auto degree_in_v = [&](const MultiPoly& p) {
        int d = 0;
        for (const auto& [e, c] : p.terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
        return d;
    };
    int dv = degree_in_v(rem);
    while (dv >= 1) {
        MultiPoly top(chart_);
        for (const auto& [e, c] : rem.terms_) {
            if (e[static_cast<std::size_t>(v)] == dv) {
                ExponentVec q = e;
                q[static_cast<std::size_t>(v)] = dv - 1;
                top.add_term(q, c / cv);
            }
        }
        quotient += top;
        rem -= top * linear;
        int next = degree_in_v(rem);
        if (next >= dv && !rem.is_zero()) throw std::logic_error("linear division failed to reduce");
        dv = next;
        if (rem.is_zero()) break;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quotient;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return 0;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    }
    Rational magnitude(num_gcd, den_lcm);
    auto lead = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (graded_lex_less(lead->first, it->first)) lead = it;
    return lead->second < 0 ? -magnitude : magnitude;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const ExponentVec, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return graded_lex_less(b->first, a->first); });
    std::ostringstream out;
    bool first = true;
    for (auto* t : order) {
        Rational c = t->second;
        bool negative = c < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        Rational mag = negative ? Rational(-c) : c;
        bool has_vars = total_degree(t->first) > 0;
        if (!has_vars || mag != 1) {
            out << mag.str();
            if (has_vars) out << '*';
        }
        bool first_var = true;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            int e = t->first[i];
            if (e == 0) continue;
            if (!first_var) out << ' ';
            first_var = false;
            out << 'p' << chart_.free_labels()[i];
            if (e > 1) out << '^' << e;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) + ": " + why);
    }
    long parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(text.substr(start, pos - start));
    }
    Rational parse_coeff() {
        long n = parse_uint();
        if (accept('/')) {
            long d = parse_uint();
            return Rational(n, d);
        }
        return Rational(n);
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const Chart& chart, const std::string& text) {
    Parser p{text};
    MultiPoly out(chart);
    bool first = true;
    while (!p.eof()) {
        Rational sign = 1;
        if (p.accept('-'))
            sign = -1;
        else if (p.accept('+')) {
            if (first) p.fail("unexpected leading '+'");
        } else if (!first) {
            p.fail("expected '+' or '-' between terms");
        }
        first = false;
        Rational coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
            coeff = p.parse_coeff();
            saw_coeff = true;
            p.accept('*');
        }
        ExponentVec e(chart.free_count(), 0);
        bool saw_var = false;
        while (p.peek() == 'p') {
            ++p.pos;
            int label = static_cast<int>(p.parse_uint());
            int v = chart.var_index(label);
            if (v < 0)
                p.fail("p" + std::to_string(label) + " is not a free variable of the chart on " +
                       chart.face().to_string());
            int exponent = 1;
            if (p.accept('^')) exponent = static_cast<int>(p.parse_uint());
            e[static_cast<std::size_t>(v)] += exponent;
            saw_var = true;
            p.accept('*');
        }
        if (!saw_coeff && !saw_var) p.fail("expected a term");
        out.add_term(e, sign * coeff);
    }
    out.check_degree();
    return out;
}

Rational inner_product(const MultiPoly& a, const MultiPoly& b) { return (a * b).integrate(); }

MultiPoly restrict_to_facet(const MultiPoly& poly, int lost_label) {
    const Chart& src = poly.chart();
    Face facet = src.face().without(lost_label);
    Chart dst(facet);
    return poly.substitute(dst, [&](int label) {
        if (label == lost_label) return MultiPoly(dst);  // p^lost = 0 on the facet
        return MultiPoly::coordinate(dst, label);
    });
}

MultiPoly restrict_to_subface(const MultiPoly& poly, const Face& subface) {
    if (!poly.chart().face().contains_face(subface))
        throw std::invalid_argument("subface " + subface.to_string() + " is not contained in " +
                                    poly.chart().face().to_string());
    MultiPoly cur = poly;
    // Drop lost labels from the largest down; the order is immaterial.
    auto lost = poly.chart().face().indices();
    for (auto it = lost.rbegin(); it != lost.rend(); ++it)
        if (!subface.contains(*it)) cur = restrict_to_facet(cur, *it);
    return cur;
}

}  // namespace wf
