#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "localh/examples.hpp"
#include "localh/io_json.hpp"
#include "localh/util.hpp"

using namespace localh;

TEST_CASE("triangulation round-trips through JSON") {
    for (const Triangulation& t :
         {trivial_triangulation(3), interior_point(4), figure1(), subdivided_edge(), gamma_t(2)}) {
        TriangulationInput in = t.to_input();
        Json j = triangulation_to_json(in);
        TriangulationInput back = triangulation_from_json(j);
        Triangulation t2 = Triangulation::build(back);

        CHECK(t2.d == t.d);
        CHECK(t2.ids == t.ids);
        CHECK(t2.vsigma == t.vsigma);
        CHECK(t2.cx.facets == t.cx.facets);
        CHECK(local_h(t2) == local_h(t));

        // serialization is stable: a second round trip is byte-identical
        CHECK(triangulation_to_json(t2.to_input()).dump() == j.dump());
    }
}

TEST_CASE("the parser enforces the schema strictly") {
    Json good = triangulation_to_json(figure1().to_input());
    CHECK_NOTHROW(triangulation_from_json(good));

    SUBCASE("unknown top-level key") {
        Json j = good;
        j["extra"] = 1;
        CHECK_THROWS_AS(triangulation_from_json(j), input_error);
    }
    SUBCASE("missing facets") {
        Json j = good;
        j.erase("facets");
        CHECK_THROWS_AS(triangulation_from_json(j), input_error);
    }
    SUBCASE("missing dimension") {
        Json j = good;
        j.erase("d");
        CHECK_THROWS_AS(triangulation_from_json(j), input_error);
    }
    SUBCASE("wrong type for vertices") {
        Json j = good;
        j["vertices"] = "nope";
        CHECK_THROWS_AS(triangulation_from_json(j), input_error);
    }
    SUBCASE("not an object at all") {
        CHECK_THROWS_AS(triangulation_from_json(Json::array()), input_error);
    }
}

TEST_CASE("malformed JSON text raises an input error") {
    CHECK_THROWS_AS(parse_json_text("{ this is not json"), input_error);
    CHECK_THROWS_AS(parse_json_text(""), input_error);
    CHECK_NOTHROW(parse_json_text("{}"));
}

TEST_CASE("duplicate vertex ids are rejected") {
    Json j;
    j["d"] = 2;
    j["vertices"] = Json::array({Json::object({{"id", "a"}, {"sigma", {1}}}),
                                 Json::object({{"id", "a"}, {"sigma", {2}}})});
    j["facets"] = Json::array({Json::array({"a", "a"})});
    CHECK_THROWS_AS(Triangulation::build(triangulation_from_json(j)), input_error);
}

TEST_CASE("realizations parse exact rationals") {
    Json j;
    j["coords"] = Json::object({{"a", Json::array({"1/2", "-3/7"})},
                                {"b", Json::array({"0", "2"})}});
    j["heights"] = Json::object({{"a", "-1/3"}, {"b", "0"}});
    Realization g = realization_from_json(j);
    CHECK(g.coords["a"][0] == mpq_class(1, 2));
    CHECK(g.coords["a"][1] == mpq_class(-3, 7));
    CHECK(g.coords["b"][1] == 2);
    CHECK(g.heights["a"] == mpq_class(-1, 3));

    // round trip through the serializer
    Json j2 = realization_to_json(g);
    Realization g2 = realization_from_json(j2);
    CHECK(g2.coords == g.coords);
    CHECK(g2.heights == g.heights);
}

TEST_CASE("zero denominators and garbage rationals are rejected") {
    Json j;
    j["coords"] = Json::object({{"a", Json::array({"1/0"})}});
    j["heights"] = Json::object({{"a", "0"}});
    CHECK_THROWS_AS(realization_from_json(j), input_error);

    j["coords"] = Json::object({{"a", Json::array({"abc"})}});
    CHECK_THROWS_AS(realization_from_json(j), input_error);
}

TEST_CASE("polynomial serialization pads to the requested degree") {
    IntPoly p({0, 1, 1});
    Json j = intpoly_to_json(p, 5);
    CHECK(j == Json::array({0, 1, 1, 0, 0, 0}));
    CHECK(intpoly_to_json(IntPoly::zero(), 2) == Json::array({0, 0, 0}));
}

TEST_CASE("built-in example realizations survive a JSON round trip and stay regular") {
    Triangulation t = gamma_t(2);
    Realization g = gamma_t_realization(2);
    Realization g2 = realization_from_json(realization_to_json(g));
    CHECK(g2.coords == g.coords);
    CHECK(g2.heights == g.heights);
}
