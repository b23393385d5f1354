#include "wf/operators.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace wf;

namespace {
const Face kEdge({0, 1}, 1);
const Face kTri({0, 1, 2}, 2);
MultiPoly var(const Chart& c, int label) { return MultiPoly::coordinate(c, label); }
}  // namespace

TEST_CASE("backward operator on the edge") {
    Chart c(kEdge);
    MultiPoly w = var(c, 1) * var(c, 0);  // p(1-p)
    CHECK(apply_backward(w) == -w);       // eigenvalue 1

    // vertex faces carry the zero operator
    MultiPoly one = MultiPoly::constant(Chart(Face::vertex(1, 1)), 1);
    CHECK(apply_backward(one).is_zero());
}

TEST_CASE("backward operator annihilates affine functions on every face") {
    for (const Face& face : all_faces(3, 1)) {
        Chart c(face);
        MultiPoly affine = MultiPoly::constant(c, Rational(7, 3));
        int k = 2;
        for (int label : face.indices()) affine += var(c, label).scaled(Rational(k++, 5));
        CHECK(apply_backward(affine).is_zero());
    }
}

TEST_CASE("backward operator on the rational extension shape") {
    // psi-bar = (p1+p2)(1-p1-p2) * p1/(p1+p2) has eigenvalue 1 on the triangle.
    Chart c(kTri);
    RationalFn psibar((var(c, 1) + var(c, 2)) * var(c, 0) * var(c, 1), {{var(c, 1) + var(c, 2), 1}});
    CHECK((apply_backward(psibar) + psibar).is_zero());
}

TEST_CASE("forward operator basics") {
    Chart c(kEdge);
    CHECK(apply_forward(MultiPoly::constant(c, 1)) == MultiPoly::constant(c, -1));
    CHECK(apply_forward(var(c, 1)) == MultiPoly::parse(c, "1 - 3*p1"));
}

TEST_CASE("adjointness spot checks") {
    Chart c(kEdge);
    MultiPoly u = var(c, 1);
    MultiPoly phi = var(c, 1).pow(2) * var(c, 0).pow(2);  // p^2 (1-p)^2 vanishes on the boundary
    CHECK(inner_product(apply_forward(u), phi) == inner_product(u, apply_backward(phi)));
    CHECK(adjointness_defect(MultiPoly::constant(c, 1), omega(kEdge)) == 0);
    CHECK(adjointness_defect(var(c, 1), omega(kEdge) * var(c, 1)) == 0);
}

TEST_CASE("adjointness defect vanishes for phi = omega * q") {
    Rng rng(41);
    for (int it = 0; it < 30; ++it) {
        const Face& face = it % 2 ? kTri : kEdge;
        Chart c(face);
        MultiPoly u = wftest::random_poly(c, 4, rng);
        MultiPoly q = wftest::random_poly(c, 4, rng);
        CHECK(adjointness_defect(u, omega(face) * q) == 0);
    }
}

TEST_CASE("omega") {
    Chart ce(kEdge);
    CHECK(omega(kEdge) == var(ce, 1) * var(ce, 0));
    Chart ct(kTri);
    CHECK(omega(kTri) == var(ct, 1) * var(ct, 2) * var(ct, 0));
    CHECK_THROWS_AS(omega(Face::vertex(0, 2)), std::invalid_argument);

    Rng rng(4);
    MultiPoly w = omega(kTri);
    for (int it = 0; it < 100; ++it) {
        Face facet = boundary_faces(kTri, rng.next_int(0, 1))[0];
        SimplexPoint q = sample_interior(facet, rng);
        CHECK(w.eval(q) == 0.0);
    }
}

TEST_CASE("restriction commutes with the backward operator") {
    Chart c(kTri);
    MultiPoly u = MultiPoly::parse(c, "3*p1^2 p2 - p2^3 + 1/2*p1 p2 + p1 - 4");
    CHECK(restriction_defect(u, Face({0, 1}, 2)).is_zero());
    CHECK(restriction_defect(MultiPoly::constant(c, 5), Face({1, 2}, 2)).is_zero());
    CHECK_THROWS_AS(restriction_defect(u, Face({0, 3}, 3)), std::invalid_argument);
}

TEST_CASE("restriction defect vanishes for random polynomials and faces") {
    Rng rng(19);
    for (int it = 0; it < 50; ++it) {
        int n = rng.next_int(2, 4);
        int dim = rng.next_int(1, n);
        Face face = wftest::random_face(n, dim, rng);
        // random proper subface of `face`
        std::vector<int> labels = face.indices();
        for (int i = static_cast<int>(labels.size()) - 1; i > 0; --i)
            std::swap(labels[static_cast<std::size_t>(i)],
                      labels[static_cast<std::size_t>(rng.next_int(0, i))]);
        labels.resize(static_cast<std::size_t>(rng.next_int(1, dim)) );
        Face subface(labels, n);
        MultiPoly u = wftest::random_poly(Chart(face), 6, rng);
        CHECK(restriction_defect(u, subface).is_zero());
    }
}

TEST_CASE("degree non-increase of the backward operator") {
    Rng rng(23);
    for (int it = 0; it < 30; ++it) {
        Chart c(it % 2 ? kTri : kEdge);
        MultiPoly u = wftest::random_poly(c, 6, rng);
        if (u.is_zero()) continue;
        CHECK(apply_backward(u).degree() <= u.degree());
    }
}
