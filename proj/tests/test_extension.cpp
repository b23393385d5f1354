#include "wf/extension.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace wf;

namespace {
MultiPoly var(const Chart& c, int label) { return MultiPoly::coordinate(c, label); }
}  // namespace

TEST_CASE("single-step extension from a vertex") {
    // psi = 1 on vertex {1} inside the edge {0,1}; allele 0 is lost over 1.
    Face edge({0, 1}, 1);
    ExtensionStep step(edge, /*r=*/1, /*s=*/0);
    MultiPoly one = MultiPoly::constant(Chart(Face::vertex(1, 1)), 1);
    RationalFn ext = extend_eigenfunction(one, 0, step);
    // p^1/(p^0+p^1) = p^1 on the edge chart
    CHECK(ext.is_polynomial());
    CHECK(ext.as_polynomial() == var(Chart(edge), 1));
}

TEST_CASE("single-step extension of the edge mode into the triangle") {
    Face tri({0, 1, 2}, 2);
    Face source({0, 1}, 2);
    MultiPoly psi = omega(source);  // p~(1-p~), eigenvalue 1
    ExtensionStep step(tri, /*r=*/1, /*s=*/2);
    RationalFn psibar = extend_eigenfunction(psi, 1, step);

    // (p1+p2)(1-p1-p2) p1/(p1+p2), written directly with its denominator
    Chart c(tri);
    RationalFn spec_form((var(c, 1) + var(c, 2)) * var(c, 0) * var(c, 1), {{var(c, 1) + var(c, 2), 1}});
    CHECK(psibar.equals(spec_form));

    // the exact eigen identity on the ambient face
    CHECK((apply_backward(psibar) + psibar).is_zero());

    // boundary trichotomy
    CHECK(psibar.restrict_to_facet(2).as_polynomial() == psi);
    CHECK(psibar.restrict_to_facet(1).is_zero());
}

TEST_CASE("eigen precheck rejects non-eigenfunctions") {
    Face tri({0, 1, 2}, 2);
    Face source({0, 1}, 2);
    MultiPoly not_eigen = var(Chart(source), 1).pow(2);
    CHECK_THROWS_AS(extend_eigenfunction(not_eigen, 1, ExtensionStep(tri, 1, 2)), std::invalid_argument);
}

TEST_CASE("extension of whole pieces") {
    Face tri({0, 1, 2}, 2);
    Face source({0, 1}, 2);
    ExtensionStep step(tri, 1, 2);

    CHECK(extend_solution_once({}, step).empty());

    Piece single{{Rational(1), Rational(1), RationalFn(omega(source))}};
    Piece extended = extend_solution_once(single, step);
    REQUIRE(extended.size() == 1);
    CHECK(extended[0].kappa == 1);
    CHECK(extended[0].shape.equals(RationalFn(var(Chart(tri), 1) * var(Chart(tri), 0))));
}

TEST_CASE("third facet restriction agrees with the lower extension") {
    // psi-bar on the ambient face restricted to a facet {I minus q} equals the
    // extension (same r, s) of psi restricted to the shared sub-boundary.
    Rng rng(47);
    Face tet({0, 1, 2, 3}, 3);
    for (int it = 0; it < 6; ++it) {
        int q = 3;  // drop the last label; r, s live in {0,1,2}
        Face source = tet.without(2);  // ... with s = 2
        auto basis = proper_basis(source, source.dim() + 2 + (it % 2));
        const auto& pair = basis[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(basis.size()) - 1))];
        ExtensionStep step(tet, /*r=*/1, /*s=*/2);
        RationalFn ext = extend_step(RationalFn(pair.eigenfunction), step);

        RationalFn restricted = ext.restrict_to_facet(q);
        Face small_ambient = tet.without(q);
        ExtensionStep small_step(small_ambient, 1, 2);
        RationalFn expected =
            extend_step(RationalFn(restrict_to_facet(pair.eigenfunction, q)), small_step);
        CHECK(restricted.equals(expected));
    }
}

TEST_CASE("iterated steps force the previous label as extension target") {
    // Extend the slow mode of the edge {0,1} to {0,1,2} (target 1, lost 2),
    // then one level further with lost label 3. Only target r = 2 keeps the
    // chain vanishing on every non-source facet; r = 0 leaks source mass onto
    // the facet {0,1,3}.
    Face tri({0, 1, 2}, 3);
    Face tet = Face::full(3);
    MultiPoly psi = omega(Face({0, 1}, 3));
    RationalFn on_tri = extend_step(RationalFn(psi), ExtensionStep(tri, 1, 2));

    RationalFn good = extend_step(on_tri, ExtensionStep(tet, 2, 3));
    for (const Face& facet : boundary_faces(tet, 2)) {
        RationalFn trace = good.restrict_to_facet([&] {
            for (int label : tet.indices())
                if (!facet.contains(label)) return label;
            return -1;
        }());
        if (facet == tri)
            CHECK(trace.equals(on_tri));
        else
            CHECK(trace.is_zero());
    }

    RationalFn leaky = extend_step(on_tri, ExtensionStep(tet, 0, 3));
    CHECK_FALSE(leaky.restrict_to_facet(2).is_zero());  // nonzero on {0,1,3}
}

TEST_CASE("pathwise extension closed form") {
    // base vertex {0}, path (0;1,2): the top piece is Littler's p0 p1/(1-p0)
    ProperSolution u = vertex_solution(Face::vertex(0, 2), 1);
    PathSpec path(Face::vertex(0, 2), 0, {1, 2});
    PiecewiseSolution ext = pathwise_extension(u, path);

    Face tri({0, 1, 2}, 2);
    Chart c(tri);
    RationalFn littler_form(var(c, 0) * var(c, 1), {{var(c, 1) + var(c, 2), 1}});
    REQUIRE(ext.find(tri) != nullptr);
    CHECK(ext.find(tri)->at(0).shape.equals(littler_form));

    // the edge piece is p0 (the chart form of p^0 on {0,1})
    Face edge({0, 1}, 2);
    CHECK(ext.snapshot(edge).equals(RationalFn(var(Chart(edge), 0))));

    // support: nothing lives on off-chain faces
    CHECK(ext.find(Face({0, 2}, 2)) == nullptr);
    CHECK(ext.snapshot(Face({0, 2}, 2)).is_zero());
}

TEST_CASE("closed form equals the Fold of single steps on random paths") {
    Rng rng(53);
    int done = 0;
    while (done < 20) {
        int n = rng.next_int(2, 4);
        int base_dim = rng.next_int(0, n - 1);
        Face base = wftest::random_face(n, base_dim, rng);
        int anchor = base.indices()[static_cast<std::size_t>(rng.next_int(0, base.dim()))];
        std::vector<int> added;
        for (int label = 0; label <= n; ++label)
            if (!base.contains(label)) added.push_back(label);
        for (int i = static_cast<int>(added.size()) - 1; i > 0; --i)
            std::swap(added[static_cast<std::size_t>(i)],
                      added[static_cast<std::size_t>(rng.next_int(0, i))]);
        PathSpec path(base, anchor, added);

        MultiPoly shape = [&] {
            if (base_dim == 0) return MultiPoly::constant(Chart(base), 1);
            auto basis = proper_basis(base, base.dim() + 3);
            return basis[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(basis.size()) - 1))]
                .eigenfunction;
        }();

        RationalFn folded(shape);
        for (std::size_t j = 0; j < added.size(); ++j) {
            int prev = j == 0 ? anchor : added[j - 1];
            ExtensionStep step(path.face_after(static_cast<int>(j) + 1), prev, added[j]);
            folded = extend_step(folded, step);
        }
        RationalFn closed = chain_shape(shape, path, static_cast<int>(added.size()));
        CHECK(closed.equals(folded));
        ++done;
    }
}

TEST_CASE("global extension of a vertex value is the coordinate") {
    for (int n : {1, 2, 3}) {
        ProperSolution u = vertex_solution(Face::vertex(0, n), 1);
        PiecewiseSolution ext = global_extension(u);
        for (const Face& face : all_faces(n)) {
            if (!face.contains(0)) {
                CHECK(ext.find(face) == nullptr);
                continue;
            }
            RationalFn snap = ext.snapshot(face);
            CHECK(snap.is_polynomial());
            CHECK(snap.as_polynomial() == var(Chart(face), 0));
        }
    }
}

TEST_CASE("global extension from the full simplex is the solution itself") {
    Face tri({0, 1, 2}, 2);
    ProperSolution u = proper_solution(omega(tri), tri, 5);
    PiecewiseSolution ext = global_extension(u);
    CHECK(ext.pieces().size() == 1);
    CHECK(ext.snapshot(tri).equals(RationalFn(u.snapshot())));
}

TEST_CASE("global extension pieces collapse to polynomials and stay eigen") {
    // base edge {0,1} inside the triangle, mode p~(1-p~)
    Face base({0, 1}, 2);
    ProperSolution u = proper_solution(omega(base), base, 4);
    PiecewiseSolution ext = global_extension(u);

    Face tri({0, 1, 2}, 2);
    RationalFn top = ext.snapshot(tri);
    CHECK(top.is_polynomial());
    // averaged extension: p0 p1 (computed by hand from both anchors)
    CHECK(top.as_polynomial() == var(Chart(tri), 0) * var(Chart(tri), 1));
    CHECK((apply_backward(top) + top).is_zero());

    CHECK(ext.find(Face({0, 2}, 2)) == nullptr);
    CHECK(ext.find(Face({1, 2}, 2)) == nullptr);
}

TEST_CASE("piecewise evaluation selects the stratum of the point") {
    ProperSolution u = vertex_solution(Face::vertex(1, 2), 1);
    PiecewiseSolution ext = global_extension(u);
    SimplexPoint inner(Face({0, 1, 2}, 2), {0.2, 0.5, 0.3});
    CHECK(ext.eval(inner, -1.0) == doctest::Approx(0.5));
    SimplexPoint off(Face({0, 2}, 2), {0.6, 0.4});
    CHECK(ext.eval(off, -1.0) == 0.0);
}
