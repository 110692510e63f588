#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "localh/examples.hpp"
#include "localh/util.hpp"

using namespace localh;

namespace {

IntPoly both_methods(const Triangulation& t) {
    IntPoly a = local_h(t, LocalHMethod::excess);
    IntPoly b = local_h(t, LocalHMethod::alternating);
    REQUIRE(a == b);
    return a;
}

}  // namespace

TEST_CASE("face order is by cardinality then lexicographic") {
    CHECK(face_less(0b001, 0b010));
    CHECK(face_less(0b010, 0b100));
    CHECK(face_less(0b100, 0b011));   // singleton before any pair
    CHECK(face_less(0b011, 0b101));
    CHECK_FALSE(face_less(0b011, 0b011));
}

TEST_CASE("complex closure and f-vector") {
    Complex cx = Complex::from_facets(3, {0b111});
    CHECK(cx.faces.size() == 8);      // full power set including the empty face
    CHECK(cx.f_vector() == std::vector<std::int64_t>({1, 3, 3, 1}));
    CHECK(cx.is_face(0b101));
    CHECK_FALSE(cx.is_face(0b1000));

    // h of the full simplex is 1 in every dimension parameter
    CHECK(h_vector(cx.faces, 3) == IntPoly::one());
}

TEST_CASE("trivial triangulation has zero local h-vector") {
    for (int d = 1; d <= 5; ++d) {
        Triangulation t = trivial_triangulation(d);
        CHECK(validate(t).ok);
        CHECK(h_vector(t.cx.faces, d) == IntPoly::one());
        CHECK(both_methods(t).is_zero());
        // the open top cell is the only interior face
        auto in = interior_faces(t);
        REQUIRE(in.size() == 1);
        CHECK(in[0] == t.full());
        Classification c = classify(t);
        CHECK(c.quasi_geometric);
        CHECK(c.vertex_induced);
    }
}

TEST_CASE("interior point subdivision: h and local h") {
    Triangulation t = interior_point(3);
    CHECK(validate(t).ok);
    CHECK(h_vector(t.cx.faces, 3) == IntPoly({1, 1, 1}));
    CHECK(both_methods(t) == IntPoly({0, 1, 1}));
    CHECK(both_methods(t).is_symmetric(3));
    CHECK(both_methods(interior_point(4)) == IntPoly({0, 1, 1, 1}));

    // interior faces are exactly those containing the apex w
    int w = t.vertex_index("w");
    REQUIRE(w >= 0);
    auto in = interior_faces(t);
    CHECK(in.size() == 7);
    for (Mask f : in) CHECK(((f >> w) & 1) == 1);
}

TEST_CASE("subdivided edge is semismall with local h equal to t") {
    Triangulation t = subdivided_edge();
    CHECK(both_methods(t) == IntPoly::monomial(1));
    CHECK(is_semismall(t));
    CHECK(classify(t).vertex_induced);
}

TEST_CASE("override triangle: census, classes, local h") {
    Triangulation t = figure1();
    CHECK(validate(t).ok);
    CHECK(h_vector(t.cx.faces, 3) == IntPoly({1, 2, 1}));
    CHECK(both_methods(t) == IntPoly({0, 1, 1}));

    Classification c = classify(t);
    CHECK(c.quasi_geometric);
    CHECK_FALSE(c.vertex_induced);    // the override lifts an edge carrier to V

    // the overridden edge plus the three edges through the interior vertex
    auto census = face_census(t);
    CHECK(census[2][3] == 4);
    CHECK(census[3][3] == 4);
    CHECK(census[1][3] == 1);         // the interior vertex

    // dropping the override restores vertex-inducedness but breaks the ball;
    // the formulas still agree yet the result loses its symmetry
    Triangulation bad = figure1_no_override();
    CHECK(classify(bad).vertex_induced);
    CHECK(both_methods(bad) == IntPoly::monomial(1));
    CHECK_FALSE(both_methods(bad).is_symmetric(3));
}

TEST_CASE("join powers of the interior point triangle") {
    IntPoly block({0, 1, 1});         // t + t^2
    for (int t_ = 1; t_ <= 3; ++t_) {
        Triangulation g = gamma_t(t_);
        CHECK(validate(g).ok);
        IntPoly expect = IntPoly::one();
        for (int s = 0; s < t_; ++s) expect *= block;
        CHECK(both_methods(g) == expect);
    }
    Triangulation g3 = gamma_t(3);
    CHECK(h_vector(g3.cx.faces, 9) == IntPoly({1, 3, 6, 7, 6, 3, 1}));
    CHECK(both_methods(g3).coeffs(9) ==
          std::vector<std::int64_t>({0, 0, 0, 1, 3, 3, 1, 0, 0, 0}));
}

TEST_CASE("local h and h are multiplicative under joins") {
    Triangulation a = interior_point(3);
    Triangulation b = figure1();
    Triangulation j = join(a, b);
    CHECK(j.d == 6);
    CHECK(validate(j).ok);
    CHECK(local_h(j) == local_h(a) * local_h(b));
    CHECK(h_vector(j.cx.faces, 6) == h_vector(a.cx.faces, 3) * h_vector(b.cx.faces, 3));

    // vertex ids carry factor prefixes and every facet splits across factors
    CHECK(j.vertex_index("1.w") >= 0);
    CHECK(j.vertex_index("2.4") >= 0);
    CHECK(j.cx.facets.size() == a.cx.facets.size() * b.cx.facets.size());
}

TEST_CASE("links and relative local h-vectors") {
    Triangulation t = interior_point(3);
    Mask Ew = 1ULL << t.vertex_index("w");
    Mask Ev = 1ULL << t.vertex_index("v1");

    LinkComplex lw = link(t, Ew);
    CHECK(lw.cx.nv == 3);             // link of the apex is the boundary triangle
    CHECK(relative_local_h(t, Ew) == IntPoly({1, 1, 1}));
    CHECK(relative_local_h(t, Ev) == IntPoly::monomial(1));
    CHECK(relative_local_h(t, 0) == local_h(t));

    // symmetry of the relative vector around (d - |E|) / 2
    CHECK(relative_local_h(t, Ew).is_symmetric(2));
    CHECK(relative_local_h(t, Ev).is_symmetric(2));
}

TEST_CASE("coned boundary sphere of the interior point subdivision") {
    Triangulation t = interior_point(3);
    ConedSphere hat = cone_sphere(t);
    CHECK(hat.cone == t.n());
    CHECK(hat.cx.f_vector() == std::vector<std::int64_t>({1, 5, 9, 6}));
    // Euler characteristic of a 2-sphere
    CHECK(5 - 9 + 6 == 2);
}

TEST_CASE("validation rejects malformed inputs") {
    TriangulationInput in;
    in.d = 2;
    in.vertices = {{"a", {1}}, {"b", {2}}};
    in.facets = {{"a", "b"}};
    CHECK(validate(Triangulation::build_unchecked(in)).ok);

    SUBCASE("unknown vertex id in a facet") {
        in.facets = {{"a", "zzz"}};
        CHECK_THROWS_AS(Triangulation::build(in), input_error);
    }
    SUBCASE("carrier coordinate out of range") {
        in.vertices[0].second = {3};
        CHECK_THROWS_AS(Triangulation::build(in), input_error);
    }
    SUBCASE("empty carrier") {
        in.vertices[0].second = {};
        CHECK_THROWS_AS(Triangulation::build(in), input_error);
    }
    SUBCASE("excess below zero is caught by validate") {
        // two vertices carried by the same coordinate: |F| > |sigma(F)|
        in.vertices = {{"a", {1}}, {"b", {1}}};
        ValidationReport rep = validate(Triangulation::build_unchecked(in));
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.violations.empty());
    }
}

TEST_CASE("homology validation certifies balls and flags the doctored input") {
    for (int characteristic : {0, 2, 3}) {
        CHECK(homology_validate(trivial_triangulation(3), characteristic).ok);
        CHECK(homology_validate(interior_point(3), characteristic).ok);
        CHECK(homology_validate(figure1(), characteristic).ok);
        CHECK(homology_validate(subdivided_edge(), characteristic).ok);
    }

    HomologyReport bad = homology_validate(figure1_no_override(), 0);
    CHECK_FALSE(bad.ok);
    bool found = false;
    for (const auto& s : bad.subsets)
        if (s.U == 0b110 && !s.absolute_ok) found = true;
    CHECK(found);   // restriction to {2,3} is a disjoint union, not a ball
}

TEST_CASE("restriction faces and excess bookkeeping") {
    Triangulation t = figure1();
    // restriction to U = {2,3}: the override forces the edge {2,3} out
    Mask U = 0b110;
    for (Mask f : subset_faces(t, U)) CHECK((t.sigma_of(f) & ~U) == 0);
    for (Mask f : t.cx.faces) {
        CHECK(t.excess(f) >= 0);
        CHECK(t.excess(f) == popcount64(t.sigma_of(f)) - popcount64(f));
    }
}
