#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "localh/fields.hpp"
#include "localh/matrix.hpp"
#include "localh/ratfun2.hpp"

using namespace localh;

namespace {

// a^e by repeated squaring through the field object.
template <class F>
typename F::Element fpow(const F& f, typename F::Element a, std::uint64_t e) {
    typename F::Element r = f.one();
    while (e) {
        if (e & 1) r = f.mul(r, a);
        a = f.mul(a, a);
        e >>= 1;
    }
    return r;
}

template <class F>
void check_axioms(const F& f, Rng& rng, int rounds) {
    for (int i = 0; i < rounds; ++i) {
        auto a = f.sample(rng);
        auto b = f.sample(rng);
        auto c = f.sample(rng);
        CHECK(f.eq(f.add(a, b), f.add(b, a)));
        CHECK(f.eq(f.mul(a, b), f.mul(b, a)));
        CHECK(f.eq(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
        CHECK(f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
        CHECK(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
        CHECK(f.eq(f.add(a, f.neg(a)), f.zero()));
        CHECK(f.eq(f.sub(a, b), f.add(a, f.neg(b))));
        CHECK(f.eq(f.mul(a, f.one()), a));
        auto n = f.sample_nonzero(rng);
        CHECK(f.eq(f.mul(n, f.inv(n)), f.one()));
        CHECK(f.eq(f.div(f.mul(a, n), n), a));
    }
}

}  // namespace

TEST_CASE("rational field axioms and exactness") {
    RationalField Q;
    Rng rng(1);
    check_axioms(Q, rng, 50);
    // no floating error: (1/3) * 3 == 1 exactly
    CHECK(Q.eq(Q.mul(Q.div(Q.one(), Q.from_int(3)), Q.from_int(3)), Q.one()));
    CHECK(Q.to_string(Q.div(Q.from_int(-2), Q.from_int(6))) == "-1/3");
}

TEST_CASE("GF(2^m) axioms, Frobenius, and Fermat") {
    for (int m : {1, 2, 3, 8, 31}) {
        CAPTURE(m);
        GF2Ext f(m);
        Rng rng(m);
        check_axioms(f, rng, 30);
        for (int i = 0; i < 20; ++i) {
            auto a = f.sample(rng);
            auto b = f.sample(rng);
            // characteristic 2: x + x = 0 and squaring is additive
            CHECK(f.is_zero(f.add(a, a)));
            CHECK(f.eq(f.mul(f.add(a, b), f.add(a, b)), f.add(f.mul(a, a), f.mul(b, b))));
            // x^(2^m) == x
            if (m <= 31) CHECK(f.eq(fpow(f, a, 1ULL << m), a));
        }
    }
}

TEST_CASE("GF(p^m) axioms and Fermat for odd p") {
    struct Case { int p, m; };
    for (Case c : {Case{3, 1}, Case{3, 2}, Case{5, 3}, Case{7, 2}, Case{3, 20}}) {
        CAPTURE(c.p);
        CAPTURE(c.m);
        GFPrimeExt f(c.p, c.m);
        Rng rng(c.p * 100 + c.m);
        check_axioms(f, rng, 20);
        std::uint64_t q = 1;
        for (int i = 0; i < c.m; ++i) q *= c.p;
        for (int i = 0; i < 10; ++i) {
            auto a = f.sample(rng);
            CHECK(f.eq(fpow(f, a, q), a));                  // x^q == x
            auto s = f.add(a, a);
            for (int k = 2; k < c.p; ++k) s = f.add(s, a);  // p * x == 0
            CHECK(f.is_zero(s));
        }
        // from_int respects modular arithmetic including negatives
        CHECK(f.eq(f.from_int(-1), f.neg(f.one())));
        CHECK(f.is_zero(f.from_int(c.p)));
    }
}

TEST_CASE("least irreducible modulus is deterministic and correct") {
    // known smallest irreducibles in base-p numeral order
    CHECK(least_irreducible(2, 1) == std::vector<int>({0, 1}));       // x
    CHECK(least_irreducible(2, 2) == std::vector<int>({1, 1, 1}));    // x^2+x+1
    CHECK(least_irreducible(2, 3) == std::vector<int>({1, 1, 0, 1})); // x^3+x+1
    CHECK(least_irreducible(3, 2) == std::vector<int>({1, 0, 1}));    // x^2+1
    CHECK(least_irreducible(2, 4) == std::vector<int>({1, 1, 0, 0, 1}));

    // the spec carried by the field object matches the free function
    CHECK(GF2Ext(8).spec().modulus == least_irreducible(2, 8));
    CHECK(GFPrimeExt(5, 3).spec().modulus == least_irreducible(5, 3));

    // no root in the prime field (necessary condition sanity check)
    for (int p : {2, 3, 5}) {
        auto mod = least_irreducible(p, 4);
        for (int x = 0; x < p; ++x) {
            long v = 0;
            for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i) v = (v * x + mod[i]) % p;
            CHECK(v != 0);
        }
    }

    CHECK(is_prime(2));
    CHECK(is_prime(32749));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(32751));
}

TEST_CASE("rref, rank, kernel, and solve over the rationals") {
    RationalField Q;
    Mat<RationalField> m(3, 4);
    // rows: (1,2,3,4), (2,4,6,8), (0,1,1,0) - rank 2
    long vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = Q.from_int(vals[i][j]);

    CHECK(rank(Q, m) == 2);

    // rank equals the rank of the transpose
    Mat<RationalField> mt(4, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) mt.at(j, i) = m.at(i, j);
    CHECK(rank(Q, mt) == 2);

    auto ker = kernel_basis(Q, m);
    REQUIRE(ker.size() == 2);   // cols - rank
    for (const auto& v : ker) {
        auto img = mat_vec(Q, m, v);
        for (const auto& x : img) CHECK(Q.is_zero(x));
    }

    // A x = b consistent: b = 3 * column 0
    std::vector<mpq_class> b = {Q.from_int(3), Q.from_int(6), Q.from_int(0)};
    auto x = solve(Q, m, b);
    REQUIRE(x.has_value());
    auto bx = mat_vec(Q, m, *x);
    for (int i = 0; i < 3; ++i) CHECK(Q.eq(bx[i], b[i]));

    // inconsistent right-hand side
    std::vector<mpq_class> bad = {Q.from_int(1), Q.from_int(0), Q.from_int(0)};
    CHECK_FALSE(solve(Q, m, bad).has_value());
}

TEST_CASE("rank and determinant over finite fields") {
    GF2Ext f(8);
    Rng rng(7);
    // random square matrices: det != 0 iff full rank
    for (int trial = 0; trial < 20; ++trial) {
        Mat<GF2Ext> m(4, 4);
        for (auto& x : m.a) x = f.sample(rng);
        bool full = rank(f, m) == 4;
        CHECK(full == !f.is_zero(det(f, m)));
    }

    // Vandermonde over GF(3^2) with distinct nodes is invertible
    GFPrimeExt g(3, 2);
    std::vector<GFPrimeExt::Element> nodes = {g.zero(), g.one(), g.from_int(2)};
    Mat<GFPrimeExt> v(3, 3);
    for (int i = 0; i < 3; ++i) {
        auto pw = g.one();
        for (int j = 0; j < 3; ++j) {
            v.at(i, j) = pw;
            pw = g.mul(pw, nodes[i]);
        }
    }
    CHECK(rank(g, v) == 3);
    CHECK_FALSE(g.is_zero(det(g, v)));
}

TEST_CASE("rref is idempotent and pivot columns are unit") {
    GF2Ext f(5);
    Rng rng(11);
    Mat<GF2Ext> m(4, 6);
    for (auto& x : m.a) x = f.sample(rng);
    Mat<GF2Ext> r = m;
    auto pivots = field_rref(f, r);
    Mat<GF2Ext> r2 = r;
    auto pivots2 = field_rref(f, r2);
    CHECK(pivots == pivots2);
    for (int i = 0; i < r.rows && i < static_cast<int>(pivots.size()); ++i)
        for (int k = 0; k < r.rows; ++k)
            CHECK(f.eq(r.at(k, pivots[i]), k == i ? f.one() : f.zero()));
    CHECK(r.a == r2.a);
}

TEST_CASE("rational functions over GF(2): arithmetic and derivatives") {
    RatFun2Field K;
    auto a = K.from_poly(Poly2::variable(0));
    auto b = K.from_poly(Poly2::variable(1));

    // 1/a has derivative 1/a^2 (signs are trivial in characteristic 2)
    auto inv_a = K.inv(a);
    CHECK(K.eq(K.derivative(inv_a, 0), K.mul(inv_a, inv_a)));
    // d/da (a*b) = b, d/db (a*b) = a, d/da (a^2) = 0
    CHECK(K.eq(K.derivative(K.mul(a, b), 0), b));
    CHECK(K.eq(K.derivative(K.mul(a, b), 1), a));
    CHECK(K.is_zero(K.derivative(K.mul(a, a), 0)));
    // quotient rule on b/a
    auto q = K.div(b, a);
    CHECK(K.eq(K.derivative(q, 0), K.div(b, K.mul(a, a))));

    // eq works across unequal representations
    CHECK(K.eq(K.make(p2_mul(Poly2::variable(0), Poly2::variable(1)), Poly2::variable(1)), a));

    // symbolic rank: [[a, b], [a, b]] has rank 1, [[a, b], [b, a]] has rank 2
    Mat<RatFun2Field> m(2, 2);
    m.at(0, 0) = a; m.at(0, 1) = b;
    m.at(1, 0) = a; m.at(1, 1) = b;
    CHECK(rank(K, m) == 1);
    m.at(1, 0) = b; m.at(1, 1) = a;
    CHECK(rank(K, m) == 2);   // det = a^2 + b^2 = (a+b)^2 != 0

    // generic symbolic matrices have full rank
    Mat<RatFun2Field> g(3, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) g.at(i, j) = K.from_poly(Poly2::variable(4 * i + j));
    CHECK(rank(K, g) == 3);
    auto ker = kernel_basis(K, g);
    REQUIRE(ker.size() == 1);
    auto img = mat_vec(K, g, ker[0]);
    for (const auto& x : img) CHECK(K.is_zero(x));
}
