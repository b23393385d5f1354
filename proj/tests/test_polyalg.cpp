#include "wf/rational_fn.hpp"

#include "wf/extension.hpp"

#include "quadrature.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <cmath>

using namespace wf;

namespace {

const Face kEdge({0, 1}, 1);
const Face kTri({0, 1, 2}, 2);

MultiPoly var(const Chart& chart, int label) { return MultiPoly::coordinate(chart, label); }

}  // namespace

TEST_CASE("ring arithmetic basics") {
    Chart c(kEdge);
    MultiPoly p1 = var(c, 1);
    CHECK((p1 + (-p1)).is_zero());

    MultiPoly prod = p1 * (MultiPoly::constant(c, 1) - p1);
    CHECK(prod == MultiPoly::parse(c, "p1 - p1^2"));

    CHECK_THROWS_AS(var(c, 1) + var(Chart(kTri), 1), std::invalid_argument);
}

TEST_CASE("rational factor bookkeeping") {
    Chart c(kTri);
    MultiPoly p1 = var(c, 1), p2 = var(c, 2);
    MultiPoly s = p1 + p2;
    RationalFn a(p1, {{s, 1}});
    RationalFn b(p2, {{s, 1}});
    RationalFn ab = a * b;
    CHECK(ab.numerator() == p1 * p2);
    REQUIRE(ab.denominator().size() == 1);
    CHECK(ab.denominator()[0].factor == s);
    CHECK(ab.denominator()[0].power == 2);
}

TEST_CASE("ring axioms on random operands") {
    Rng rng(21);
    for (int it = 0; it < 40; ++it) {
        Chart c(it % 2 ? kTri : kEdge);
        MultiPoly a = wftest::random_poly(c, 3, rng);
        MultiPoly b = wftest::random_poly(c, 3, rng);
        MultiPoly d = wftest::random_poly(c, 3, rng);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("partial derivatives") {
    Chart c(kEdge);
    MultiPoly p = var(c, 1);
    CHECK((p * (MultiPoly::constant(c, 1) - p)).partial(1) == MultiPoly::parse(c, "1 - 2*p1"));

    Chart ct(kTri);
    RationalFn f(var(ct, 1), {{var(ct, 1) + var(ct, 2), 1}});
    RationalFn expect(var(ct, 2), {{var(ct, 1) + var(ct, 2), 2}});
    CHECK(f.partial(1).equals(expect));
}

TEST_CASE("mixed partials commute on random rational functions") {
    Rng rng(5);
    for (int it = 0; it < 50; ++it) {
        Chart c(kTri);
        RationalFn f = wftest::random_rational_fn(c, 3, rng);
        CHECK(f.partial(1).partial(2).equals(f.partial(2).partial(1)));
    }
}

TEST_CASE("projection pullback") {
    // substitution of the linear interpolation projection, on the chart
    Face tri({0, 1, 2}, 2);
    Face source({0, 1}, 2);
    wf::ExtensionStep step(tri, 1, 2);
    Chart cs(source), ct(tri);

    CHECK(wf::compose_projection(var(cs, 1), step) == var(ct, 1) + var(ct, 2));
    CHECK(wf::compose_projection(MultiPoly::constant(cs, 1), step) == MultiPoly::constant(ct, 1));
    MultiPoly shifted = wf::compose_projection(var(cs, 1) * var(cs, 0), step);
    CHECK(shifted == (var(ct, 1) + var(ct, 2)) * (MultiPoly::constant(ct, 1) - var(ct, 1) - var(ct, 2)));
}

TEST_CASE("projection pullback is a ring homomorphism") {
    Rng rng(61);
    Face tri({0, 1, 2}, 2);
    wf::ExtensionStep step(tri, 0, 2);
    Chart cs(Face({0, 1}, 2));
    for (int it = 0; it < 25; ++it) {
        MultiPoly f = wftest::random_poly(cs, 3, rng);
        MultiPoly g = wftest::random_poly(cs, 3, rng);
        CHECK(wf::compose_projection(f * g, step) ==
              wf::compose_projection(f, step) * wf::compose_projection(g, step));
        CHECK(wf::compose_projection(f + g, step) ==
              wf::compose_projection(f, step) + wf::compose_projection(g, step));
    }
}

TEST_CASE("exact face integration against the spec values") {
    CHECK(MultiPoly::constant(Chart(kTri), 1).integrate() == Rational(1, 2));
    CHECK(var(Chart(kEdge), 1).integrate() == Rational(1, 2));

    Chart c(kTri);
    MultiPoly w = var(c, 1) * var(c, 2) * var(c, 0);  // p1 p2 (1 - p1 - p2)
    CHECK(w.integrate() == Rational(1, 120));
}

TEST_CASE("integration agrees with the quadrature oracle") {
    wftest::GaussLegendre quad(16);
    Rng rng(33);
    for (int it = 0; it < 20; ++it) {
        int dim = 1 + it % 3;
        std::vector<int> labels;
        for (int i = 0; i <= dim; ++i) labels.push_back(i);
        Chart c{Face(labels, dim)};
        MultiPoly f = wftest::random_poly(c, 6, rng);
        double numeric = quad.over_simplex(dim, [&](const std::vector<double>& x) {
            double s = 0.0;
            for (const auto& [e, coeff] : f.terms()) {
                double term = to_double(coeff);
                for (std::size_t i = 0; i < x.size(); ++i)
                    for (int k = 0; k < e[i]; ++k) term *= x[i];
                s += term;
            }
            return s;
        });
        CHECK(std::abs(to_double(f.integrate()) - numeric) < 1e-10);
    }
}

TEST_CASE("evaluation") {
    Chart c(kTri);
    RationalFn f(var(c, 1), {{var(c, 1) + var(c, 2), 1}});
    SimplexPoint p(kTri, {0.5, 0.2, 0.3});
    CHECK(f.eval(p) == doctest::Approx(0.4));

    MultiPoly w = var(c, 1) * var(c, 2) * var(c, 0);
    // exact vanishing on the whole boundary, checked symbolically
    for (const Face& facet : boundary_faces(kTri, 1)) CHECK(restrict_to_subface(w, facet).is_zero());
    Rng rng(9);
    for (int it = 0; it < 100; ++it) {
        Face facet = boundary_faces(kTri, 1)[static_cast<std::size_t>(rng.next_int(0, 2))];
        SimplexPoint q = sample_interior(facet, rng);
        CHECK(std::abs(w.eval(q)) < 1e-13);  // expanded form: cancellation roundoff only
    }

    SimplexPoint corner(Face::vertex(0, 2), {1.0});
    CHECK_THROWS_AS(f.eval(corner), EvalError);
}

TEST_CASE("exact rational evaluation option") {
    Chart c(kEdge);
    MultiPoly f = MultiPoly::parse(c, "2/3*p1^2 - 1/6*p1 + 1/7");
    Rational at = f.eval_exact({Rational(1, 2)});
    CHECK(at == Rational(2, 3) * Rational(1, 4) - Rational(1, 12) + Rational(1, 7));
}

TEST_CASE("serialization round trip is bit exact") {
    Rng rng(17);
    for (int it = 0; it < 60; ++it) {
        Chart c(it % 2 ? kTri : kEdge);
        MultiPoly f = wftest::random_poly(c, 5, rng);
        MultiPoly back = MultiPoly::parse(c, f.to_string());
        CHECK(back == f);
    }
    CHECK(MultiPoly::parse(Chart(kEdge), "0").is_zero());
    CHECK_THROWS_AS(MultiPoly::parse(Chart(kEdge), "p0 + 1"), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::parse(Chart(kEdge), "1 +"), std::invalid_argument);
}

TEST_CASE("degree cap is enforced") {
    Chart c(kEdge);
    MultiPoly p = var(c, 1);
    MultiPoly big = p.pow(MultiPoly::degree_cap());
    CHECK_THROWS_AS(big * p, std::domain_error);
}

TEST_CASE("division by linear forms") {
    Chart c(kTri);
    MultiPoly s = var(c, 1) + var(c, 2);
    MultiPoly n = s * s * var(c, 1);
    auto q = n.divide_by_linear(s);
    REQUIRE(q.has_value());
    CHECK(*q == s * var(c, 1));
    CHECK_FALSE(var(c, 1).divide_by_linear(s).has_value());

    // dividing by the dependent-coordinate form 1 - p1 - p2
    MultiPoly p0 = var(c, 0);
    auto q2 = (p0 * var(c, 2) * p0).divide_by_linear(p0);
    REQUIRE(q2.has_value());
    CHECK(*q2 == p0 * var(c, 2));
}

TEST_CASE("rational function restriction cancels exactly") {
    Chart c(kTri);
    // (p1+p2)(1-p1-p2) * p1 / (p1+p2) collapses to a polynomial already.
    RationalFn f((var(c, 1) + var(c, 2)) * var(c, 0) * var(c, 1), {{var(c, 1) + var(c, 2), 1}});
    CHECK(f.is_polynomial());

    // A surviving denominator that vanishes on a facet is rejected.
    RationalFn g(var(c, 0), {{var(c, 1) + var(c, 2), 1}});
    CHECK_THROWS_AS(g.restrict_to_subface(Face::vertex(0, 2)), NoContinuousExtension);
    // ... but restriction works where the factor stays positive.
    RationalFn on_edge = g.restrict_to_facet(2);
    CHECK(on_edge.equals(RationalFn(MultiPoly::parse(Chart(Face({0, 1}, 2)), "1 - p1"),
                                    {{MultiPoly::parse(Chart(Face({0, 1}, 2)), "p1"), 1}})));
}
