#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "localh/intpoly.hpp"

using localh::IntPoly;

namespace {

std::int64_t eval(const IntPoly& p, std::int64_t x) {
    std::int64_t v = 0;
    for (int i = p.degree(); i >= 0; --i) v = v * x + p[i];
    return v;
}

std::int64_t ipow(std::int64_t x, int e) {
    std::int64_t v = 1;
    while (e-- > 0) v *= x;
    return v;
}

}  // namespace

TEST_CASE("shifted_power agrees with pointwise evaluation of t^a (1-t)^b") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            IntPoly p = IntPoly::shifted_power(a, b);
            CHECK(p.degree() == ((a + b == 0) ? 0 : a + b));
            for (std::int64_t x : {-2, -1, 0, 1, 2, 3, 5})
                CHECK(eval(p, x) == ipow(x, a) * ipow(1 - x, b));
        }
    CHECK(IntPoly::shifted_power(0, 0) == IntPoly::one());
    CHECK(IntPoly::shifted_power(3, 0) == IntPoly::monomial(3));
    CHECK(IntPoly::shifted_power(0, 1) == IntPoly({1, -1}));
}

TEST_CASE("arithmetic identities") {
    IntPoly p({1, 2, 1});   // (1+t)^2
    IntPoly q({1, -1});     // 1-t
    IntPoly one = IntPoly::one();

    CHECK(IntPoly({1, 1}) * IntPoly({1, 1}) == p);
    CHECK(p * one == p);
    CHECK(p - p == IntPoly::zero());
    CHECK((p + q) * q == p * q + q * q);
    CHECK(p * q == q * p);
    CHECK(p * 3 == p + p + p);

    // multiplication by zero annihilates
    CHECK(p * IntPoly::zero() == IntPoly::zero());
    CHECK((p * IntPoly::zero()).is_zero());
}

TEST_CASE("degree, trim, and zero conventions") {
    CHECK(IntPoly::zero().degree() == -1);
    CHECK(IntPoly({0, 0, 0}).is_zero());
    CHECK(IntPoly({5, 0, 0}).degree() == 0);
    CHECK((IntPoly({1, 1}) - IntPoly({1, 1})).degree() == -1);
    CHECK(IntPoly({1, 2, 3})[1] == 2);
    CHECK(IntPoly({1, 2, 3})[7] == 0);   // out of range reads as zero
    CHECK(IntPoly({1, 2, 3})[-1] == 0);
}

TEST_CASE("coeffs pads to the requested degree") {
    IntPoly p({0, 1, 1});
    CHECK(p.coeffs(4) == std::vector<std::int64_t>({0, 1, 1, 0, 0}));
    CHECK(p.coeffs() == std::vector<std::int64_t>({0, 1, 1}));
    CHECK(IntPoly::zero().coeffs(2) == std::vector<std::int64_t>({0, 0, 0}));
}

TEST_CASE("symmetry and nonnegativity predicates") {
    CHECK(IntPoly({0, 1, 1, 0}).is_symmetric(3));
    CHECK(IntPoly({0, 1, 1}).is_symmetric(3));      // trailing zero is implicit
    CHECK_FALSE(IntPoly({0, 1, 2, 0}).is_symmetric(3));
    CHECK(IntPoly::zero().is_symmetric(5));
    CHECK(IntPoly({1, 2, 1}).is_nonnegative());
    CHECK_FALSE(IntPoly({1, -1}).is_nonnegative());
}

TEST_CASE("to_string renders sparse form") {
    CHECK(IntPoly::zero().to_string() == "0");
    CHECK(IntPoly({0, 1, 1}).to_string() == "t + t^2");
    CHECK(IntPoly({2, 0, -3}).to_string() == "2 - 3*t^2");
}
