#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "localh/examples.hpp"
#include "localh/geometry.hpp"

using namespace localh;

TEST_CASE("reference positions span the standard simplex") {
    // coordinate 1 at the origin, coordinate i at e_{i-1}
    auto p1 = reference_position(1, 3);
    CHECK(p1 == std::vector<mpq_class>({0, 0}));
    auto p2 = reference_position(2, 3);
    CHECK(p2 == std::vector<mpq_class>({1, 0}));
    auto p3 = reference_position(3, 3);
    CHECK(p3 == std::vector<mpq_class>({0, 1}));
}

TEST_CASE("interior point heights certify regularity") {
    for (int d : {2, 3, 4}) {
        Triangulation t = interior_point(d);
        Realization g = interior_point_realization(d);
        RegularityReport rep = verify_regular(t, g);
        CHECK(rep.ok);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("flat heights do not induce the subdivision") {
    Triangulation t = interior_point(3);
    Realization g = interior_point_realization(3);
    for (auto& [id, h] : g.heights) h = 0;
    RegularityReport rep = verify_regular(t, g);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("a height pushed above the boundary plane breaks the lower hull") {
    Triangulation t = interior_point(3);
    Realization g = interior_point_realization(3);
    g.heights["w"] = 5;   // lifted w is no longer below the boundary facet
    CHECK_FALSE(verify_regular(t, g).ok);
}

TEST_CASE("a vertex moved out of its carrier face is rejected") {
    Triangulation t = interior_point(3);
    Realization g = interior_point_realization(3);
    g.coords["w"] = {0, 0};   // w coincides with the corner of coordinate 1
    RegularityReport rep = verify_regular(t, g);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("join heights certify the join of regular subdivisions") {
    Triangulation a = interior_point(2);
    Triangulation b = interior_point(3);
    Realization ga = interior_point_realization(2);
    Realization gb = interior_point_realization(3);

    Triangulation j = join(a, b);
    Realization gj = join_realization(a, ga, b.d, gb);
    RegularityReport rep = verify_regular(j, gj);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
}

TEST_CASE("product heights certify the join powers") {
    for (int t_ : {1, 2}) {
        Triangulation g = gamma_t(t_);
        Realization r = gamma_t_realization(t_);
        RegularityReport rep = verify_regular(g, r);
        CHECK(rep.ok);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("missing geometric data is reported, not crashed on") {
    Triangulation t = interior_point(3);
    Realization g = interior_point_realization(3);
    g.coords.erase("w");
    RegularityReport rep = verify_regular(t, g);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("exact arithmetic: a realization with tiny rational offsets still certifies") {
    Triangulation t = interior_point(3);
    Realization g = interior_point_realization(3);
    // nudge the interior point by 1/10^6 within the interior; exact rationals
    // keep the certificate decisive
    g.coords["w"][0] += mpq_class(1, 1000000);
    RegularityReport rep = verify_regular(t, g);
    CHECK(rep.ok);
}
