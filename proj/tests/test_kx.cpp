#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "localh/examples.hpp"
#include "localh/kx.hpp"
#include "localh/util.hpp"

using namespace localh;

namespace {

// I as a d x n zero matrix with ones at the listed (row, column) positions.
std::vector<std::vector<int>> I_at(int d, int n,
                                   std::initializer_list<std::pair<int, int>> ones) {
    std::vector<std::vector<int>> I(d, std::vector<int>(n, 0));
    for (auto [r, c] : ones) I[r][c] = 1;
    return I;
}

std::vector<int> J_at(int n, int j) {
    std::vector<int> J(n, 0);
    J[j] = 1;
    return J;
}

}  // namespace

// Vertex indices of interior_point(3): v1 = 0, v2 = 1, v3 = 2, w = 3.

TEST_CASE("pairing derivative identity: the degree-3 proof instance") {
    Triangulation t = interior_point(3);
    KxInstance inst;
    inst.cor_mode = true;
    inst.elem = {{0, 0, 0, 1}};                      // u = x_w, a class in L^1
    inst.I = I_at(3, 4, {{0, 0}, {1, 3}, {2, 3}});   // x^I = x_v1 x_w^2
    inst.J = J_at(4, 0);                             // x^J = x_v1

    KxReport rep = verify_kx_identity(t, inst);
    REQUIRE(rep.input_valid);
    CHECK(rep.identity_holds);
    CHECK_FALSE(rep.rhs_zero);        // sqrt(x^I x^J) = x_v1 x_w
    CHECK(rep.var_names.size() == 6); // one symbol per admissible (i, j) pair
    CHECK(rep.lhs != "0");            // the proof instance pairs nontrivially
}

TEST_CASE("odd exponents collapse the square root and both sides vanish") {
    Triangulation t = interior_point(3);
    KxInstance inst;
    inst.cor_mode = true;
    inst.elem = {{0, 0, 0, 1}};
    inst.I = I_at(3, 4, {{0, 0}, {1, 1}, {2, 2}});   // x^I = x_v1 x_v2 x_v3
    inst.J = J_at(4, 3);                             // x^J = x_w

    KxReport rep = verify_kx_identity(t, inst);
    REQUIRE(rep.input_valid);
    CHECK(rep.rhs_zero);
    CHECK(rep.identity_holds);        // the derivative of the square is also 0
    CHECK(rep.rhs == "0");
}

TEST_CASE("derivatives taken only at the interior vertex") {
    Triangulation t = interior_point(3);
    KxInstance inst;
    inst.cor_mode = true;
    inst.elem = {{0, 0, 0, 1}};
    inst.I = I_at(3, 4, {{0, 3}, {1, 3}, {2, 3}});   // x^I = x_w^3
    inst.J = J_at(4, 3);                             // x^I x^J = x_w^4

    KxReport rep = verify_kx_identity(t, inst);
    REQUIRE(rep.input_valid);
    CHECK(rep.identity_holds);
    CHECK_FALSE(rep.rhs_zero);
}

TEST_CASE("degree identity with the cone vertex as the class") {
    Triangulation t = interior_point(3);
    KxInstance inst;
    inst.cor_mode = false;
    inst.elem = {{0, 0, 0, 0, 1}};                   // h = x_c
    inst.I = I_at(3, 4, {{0, 0}, {1, 3}, {2, 3}});
    inst.J = J_at(4, 1);                             // x^I x^J = x_v1 x_v2 x_w^2

    KxReport rep = verify_kx_identity(t, inst);
    REQUIRE(rep.input_valid);
    CHECK(rep.rhs_zero);
    CHECK(rep.identity_holds);
}

TEST_CASE("degree identity for a two-term class") {
    Triangulation t = interior_point(3);
    KxInstance inst;
    inst.cor_mode = false;
    inst.elem = {{1, 0, 0, 0}, {0, 0, 0, 1}};        // h = x_v1 + x_w
    inst.I = I_at(3, 4, {{0, 0}, {1, 3}, {2, 3}});
    inst.J = J_at(4, 0);                             // x^I x^J = x_v1^2 x_w^2

    KxReport rep = verify_kx_identity(t, inst);
    REQUIRE(rep.input_valid);
    CHECK(rep.identity_holds);
    CHECK_FALSE(rep.rhs_zero);
}

TEST_CASE("the one-dimensional segment instance") {
    Triangulation t = trivial_triangulation(1);
    KxInstance inst;
    inst.cor_mode = false;
    inst.elem = {{0}};                               // h = 1
    inst.I = {{1}};
    inst.J = {1};                                    // x^I x^J = x_v1^2

    KxReport rep = verify_kx_identity(t, inst);
    REQUIRE(rep.input_valid);
    CHECK(rep.identity_holds);
    CHECK_FALSE(rep.rhs_zero);
}

TEST_CASE("instance validation rejects malformed data") {
    Triangulation t = interior_point(3);
    KxInstance good;
    good.cor_mode = true;
    good.elem = {{0, 0, 0, 1}};
    good.I = I_at(3, 4, {{0, 0}, {1, 3}, {2, 3}});
    good.J = J_at(4, 0);
    REQUIRE(verify_kx_identity(t, good).input_valid);

    SUBCASE("a row of I with two ones") {
        KxInstance inst = good;
        inst.I[0][1] = 1;
        KxReport rep = verify_kx_identity(t, inst);
        CHECK_FALSE(rep.input_valid);
        CHECK_FALSE(rep.issues.empty());
    }
    SUBCASE("a one outside the carrier of its column") {
        KxInstance inst = good;
        inst.I = I_at(3, 4, {{0, 1}, {1, 3}, {2, 3}});   // row 0 hits v2, carrier {2}
        KxReport rep = verify_kx_identity(t, inst);
        CHECK_FALSE(rep.input_valid);
    }
    SUBCASE("wrong J length") {
        KxInstance inst = good;
        inst.J = {1, 0, 0};
        CHECK_FALSE(verify_kx_identity(t, inst).input_valid);
    }
    SUBCASE("J degree does not match d - 2s") {
        KxInstance inst = good;
        inst.J = {1, 1, 0, 0};   // degree 2, but d - 2s = 1
        CHECK_FALSE(verify_kx_identity(t, inst).input_valid);
    }
    SUBCASE("class monomial is not interior in pairing mode") {
        KxInstance inst = good;
        inst.elem = {{1, 0, 0, 0}};   // x_v1 has carrier {1}, not interior
        CHECK_FALSE(verify_kx_identity(t, inst).input_valid);
    }
    SUBCASE("empty class") {
        KxInstance inst = good;
        inst.elem = {};
        CHECK_FALSE(verify_kx_identity(t, inst).input_valid);
    }
    SUBCASE("mixed degrees in the class") {
        KxInstance inst = good;
        inst.elem = {{0, 0, 0, 1}, {0, 0, 1, 1}};
        CHECK_FALSE(verify_kx_identity(t, inst).input_valid);
    }
}

TEST_CASE("the symbolic check refuses oversized triangulations") {
    CHECK_THROWS_AS(verify_kx_identity(gamma_t(2), KxInstance{}), input_error);
    // figure1 fits: d = 3 with 5 vertices
    KxInstance inst;
    inst.cor_mode = true;
    Triangulation t = figure1();
    inst.elem = {{0, 0, 0, 0, 1}};                   // the interior vertex "5"
    inst.I = I_at(3, 5, {{0, 4}, {1, 4}, {2, 4}});
    inst.J = J_at(5, 4);
    KxReport rep = verify_kx_identity(t, inst);
    REQUIRE(rep.input_valid);
    CHECK(rep.identity_holds);
}
