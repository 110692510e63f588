#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "localh/examples.hpp"
#include "localh/lefschetz.hpp"
#include "localh/pipeline.hpp"

using namespace localh;

namespace {

template <class F>
std::vector<typename F::Element> ones(const F& field, int n) {
    return std::vector<typename F::Element>(n, field.one());
}

}  // namespace

TEST_CASE("degree functional: facet consistency and pairing rank over Q") {
    RationalField Q;
    Triangulation t = gamma_t(2);
    auto bundle = build_bundle(Q, t, 21);
    REQUIRE(bundle.has_hat);

    // Stanley's pairing L^s x L^{d-s} is nondegenerate at every degree
    auto lh = local_h(t).coeffs(t.d);
    for (int s = 0; s <= t.d; ++s) {
        Mat<RationalField> G = gram_matrix(bundle.Ahat, bundle.degfn, bundle.L, s, t.d - s, 0,
                                           ones(Q, t.n()), t.d);
        CHECK(rank(Q, G) == lh[s]);
        CHECK(G.rows == lh[s]);
        CHECK(G.cols == lh[t.d - s]);
    }

    // the middle pairing of the double join is hyperbolic: zero diagonal
    Mat<RationalField> M =
        gram_matrix(bundle.Ahat, bundle.degfn, bundle.L, 3, 3, 0, ones(Q, t.n()), t.d);
    REQUIRE(M.rows == 2);
    CHECK(Q.is_zero(M.at(0, 0)));
    CHECK(Q.is_zero(M.at(1, 1)));
    CHECK_FALSE(Q.is_zero(M.at(0, 1)));
    CHECK(Q.eq(M.at(0, 1), M.at(1, 0)));   // symmetry of the pairing

    // an isotropic vector exists although the form is nondegenerate
    std::vector<mpq_class> v = {Q.one(), Q.zero()};
    CHECK(Q.is_zero(quadratic_value(Q, M, v)));
}

TEST_CASE("the pairing is invariant under moving a vertex across the two sides") {
    RationalField Q;
    Triangulation t = interior_point(3);
    auto bundle = build_bundle(Q, t, 23);
    // u in L^1, v in L^1, x_k u * v == u * x_k v as degree-3 evaluations
    const auto& e1 = bundle.L.expr[1];
    REQUIRE(e1.size() == 1);
    for (int k = 0; k < t.n(); ++k) {
        AMono xk(t.n(), 0);
        xk[k] = 1;
        MonoCombo<RationalField> left, right;
        for (const auto& [m, c] : e1[0]) {
            AMono m2 = m;
            m2[k] += 1;
            if (t.cx.is_face(mono_support(m2))) left.emplace_back(m2, c);
        }
        auto lhs = pair_combos(bundle.Ahat, bundle.degfn, left, e1[0], 1);
        auto rhs = pair_combos(bundle.Ahat, bundle.degfn, e1[0], left, 2);
        CHECK(Q.eq(lhs, rhs));
    }
}

TEST_CASE("strong Lefschetz holds generically in characteristic zero") {
    RationalField Q;
    for (int d : {3, 4}) {
        Triangulation t = interior_point(d);
        PipelineOptions opt;
        opt.need_hat = false;
        auto bundle = build_bundle(Q, t, 25, opt);
        auto rep = strong_lefschetz(Q, bundle.A, bundle.L, d, ones(Q, t.n()));
        CHECK(rep.holds);
        for (const auto& m : rep.maps) CHECK(m.full);
    }
}

TEST_CASE("strong Lefschetz holds for the single join factor when p exceeds t") {
    GFPrimeExt f(3, 20);
    Triangulation t = gamma_t(1);
    PipelineOptions opt;
    opt.need_hat = false;
    auto bundle = build_bundle(f, t, 27, opt);
    auto rep = strong_lefschetz(f, bundle.A, bundle.L, 3, ones(f, t.n()));
    CHECK(rep.holds);
}

TEST_CASE("characteristic 2 kills the double join: middle power map vanishes") {
    GF2Ext f(31);
    Triangulation t = gamma_t(2);
    PipelineOptions opt;
    opt.need_hat = false;
    auto bundle = build_bundle(f, t, 29, opt);

    auto rep = strong_lefschetz(f, bundle.A, bundle.L, 6, ones(f, t.n()));
    CHECK_FALSE(rep.holds);
    bool middle_zero = false;
    for (const auto& m : rep.maps)
        if (m.s == 2 && m.w == 2) {
            CHECK(m.rank == 0);    // u^2 == 0 on the whole of L^2
            CHECK(m.expected == 1);
            middle_zero = true;
            REQUIRE(m.kernel.has_value());
            // the reported kernel vector really dies under u^2
            auto img = mat_vec(f, power_map(bundle.A, bundle.L, 2, 2, ones(f, t.n())),
                               *m.kernel);
            for (const auto& x : img) CHECK(f.is_zero(x));
        }
    CHECK(middle_zero);

    // weak Lefschetz survives at t = 2: the single-step maps only need
    // 2p - 1 <= t to break, and 3 > 2, so all-ones stays full rank
    auto wrep = weak_lefschetz(f, bundle.A, bundle.L, 6, ones(f, t.n()));
    CHECK(wrep.holds);
}

TEST_CASE("characteristic 3 kills the triple join") {
    GFPrimeExt f(3, 20);
    Triangulation t = gamma_t(3);
    PipelineOptions opt;
    opt.need_hat = false;
    auto bundle = build_bundle(f, t, 31, opt);
    auto rep = strong_lefschetz(f, bundle.A, bundle.L, 9, ones(f, t.n()));
    CHECK_FALSE(rep.holds);
    for (const auto& m : rep.maps)
        if (m.s == 3) CHECK(m.rank == 0);   // u^3 annihilates x_1 x_2 x_3 patterns mod 3
}

TEST_CASE("weak Lefschetz failure in characteristic 2 on the triple join") {
    GF2Ext f(31);
    Triangulation t = gamma_t(3);
    PipelineOptions opt;
    opt.need_hat = false;
    auto bundle = build_bundle(f, t, 33, opt);

    auto rep = weak_lefschetz(f, bundle.A, bundle.L, 9, ones(f, t.n()));
    CHECK_FALSE(rep.holds);
    // L^4 -> L^5 has a kernel although dim L^4 = dim L^5 = 3
    for (const auto& m : rep.maps)
        if (m.s == 4) {
            CHECK(m.expected == 3);
            CHECK(m.rank <= 2);
        }
}

TEST_CASE("relative module over the link matches the relative local h-vector") {
    RationalField Q;
    Triangulation t = interior_point(3);

    Mask Ew = 1ULL << t.vertex_index("w");
    auto rb = build_relative_bundle(Q, t, Ew, 35);
    CHECK(rb.top == 2);
    CHECK(rb.L.hilbert == std::vector<int>({1, 1, 1, 0}));

    Mask Ev = 1ULL << t.vertex_index("v1");
    auto rv = build_relative_bundle(Q, t, Ev, 37);
    CHECK(rv.L.hilbert == std::vector<int>({0, 1, 0, 0}));

    // over GF(2) as well: the statement is characteristic-free
    GF2Ext f2(31);
    auto rf = build_relative_bundle(f2, t, Ew, 39);
    CHECK(rf.L.hilbert == std::vector<int>({1, 1, 1, 0}));
}

TEST_CASE("Hodge-Riemann form at the middle of the double join has rank 2 always") {
    for (const FieldSpec& fs : {FieldSpec::rational(), FieldSpec::gf(2, 31)}) {
        with_field(fs, [&](auto field) {
            using F = decltype(field);
            Triangulation t = gamma_t(2);
            auto bundle = build_bundle(field, t, 41);
            Mat<F> G = gram_matrix(bundle.Ahat, bundle.degfn, bundle.L, 3, 3, 0,
                                   ones(field, t.n()), t.d);
            CHECK(rank(field, G) == 2);
            return 0;
        });
    }
}
