#include "localh/kx.hpp"

#include <map>

#include "localh/algebra.hpp"
#include "localh/bilinear.hpp"
#include "localh/lsop.hpp"
#include "localh/orientation.hpp"
#include "localh/ratfun2.hpp"

namespace localh {

namespace {

AMono mono_from_exponents(const std::vector<int>& e, int nv) {
    AMono m(nv, 0);
    for (std::size_t j = 0; j < e.size(); ++j) m[j] = static_cast<std::uint16_t>(e[j]);
    return m;
}

}  // namespace

KxReport verify_kx_identity(const Triangulation& t, const KxInstance& inst) {
    if (t.d > 3 || t.n() > 6)
        throw input_error("symbolic identity checks are limited to d <= 3 and at most 6 vertices");
    const int d = t.d;
    const int n = t.n();
    KxReport rep;

    // Symbolic coefficient variables a(i,j), one per carrier incidence.
    std::map<std::pair<int, int>, int> var;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < d; ++i)
            if ((t.vsigma[j] >> i) & 1) {
                int idx = static_cast<int>(rep.var_names.size());
                var[{i, j}] = idx;
                rep.var_names.push_back("a(" + std::to_string(i + 1) + "," + t.ids[j] + ")");
            }

    // Validity of I: one 1 per row, inside the column vertex's carrier.
    if (static_cast<int>(inst.I.size()) != d) rep.issues.push_back("I must have d rows");
    for (std::size_t i = 0; i < inst.I.size(); ++i) {
        const auto& row = inst.I[i];
        if (static_cast<int>(row.size()) != n) {
            rep.issues.push_back("row " + std::to_string(i + 1) + " of I must have n entries");
            continue;
        }
        int sum = 0;
        for (int j = 0; j < n; ++j) {
            if (row[j] < 0) rep.issues.push_back("I has a negative entry");
            sum += row[j];
            if (row[j] > 0 && !((t.vsigma[j] >> i) & 1))
                rep.issues.push_back("I(" + std::to_string(i + 1) + "," + t.ids[j] +
                                     ") lies outside the vertex carrier");
        }
        if (sum != 1)
            rep.issues.push_back("row " + std::to_string(i + 1) + " of I has sum " +
                                 std::to_string(sum) + ", expected 1");
    }
    if (static_cast<int>(inst.J.size()) != n) rep.issues.push_back("J must have n entries");
    if (inst.elem.empty()) rep.issues.push_back("element has no monomials");
    int s = -1;
    for (const auto& e : inst.elem) {
        int maxlen = inst.cor_mode ? n : n + 1;
        if (static_cast<int>(e.size()) > maxlen) {
            rep.issues.push_back("element monomial has too many exponents");
            continue;
        }
        int deg = 0;
        for (int x : e) {
            if (x < 0) rep.issues.push_back("element monomial has a negative exponent");
            deg += x;
        }
        if (s < 0) s = deg;
        if (deg != s) rep.issues.push_back("element monomials are not equidegree");
    }
    int jsum = 0;
    for (int x : inst.J) {
        if (x < 0) rep.issues.push_back("J has a negative entry");
        jsum += x;
    }
    if (s >= 0 && 2 * s > d) rep.issues.push_back("element degree exceeds d/2");
    if (s >= 0 && jsum != d - 2 * s)
        rep.issues.push_back("J has row sum " + std::to_string(jsum) + ", expected " +
                             std::to_string(d - 2 * s));
    if (inst.cor_mode)
        for (const auto& e : inst.elem) {
            Mask supp = 0;
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] > 0) supp |= (1ULL << j);
            if (!t.cx.is_face(supp) || t.sigma_of(supp) != t.full())
                rep.issues.push_back("element monomial support is not an interior face");
        }
    if (!rep.issues.empty()) return rep;
    rep.input_valid = true;

    RatFun2Field K;
    Mat<RatFun2Field> theta(d, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < d; ++i)
            if ((t.vsigma[j] >> i) & 1)
                theta.at(i, j) = K.from_poly(Poly2::variable(var[{i, j}]));
    if (!lsop_certificate(K, t.cx, theta)) {
        rep.input_valid = false;
        rep.issues.push_back(
            "symbolic parameter matrix loses rank on a face "
            "(triangulation is not quasi-geometric)");
        return rep;
    }

    ConedSphere hat = cone_sphere(t);
    Mat<RatFun2Field> theta_hat = extend_to_cone(K, theta);
    if (!lsop_certificate(K, hat.cx, theta_hat))
        throw internal_error("coned parameter matrix loses rank on a face");
    GradedAlgebra<RatFun2Field> Ahat = build_graded_algebra(K, hat.cx, theta_hat, d + 1);
    std::vector<std::int64_t> expect = h_vector(hat.cx.faces, d).coeffs(d);
    if (Ahat.hilbert[d + 1] != 0) throw internal_error("coned algebra does not vanish past d");
    for (int k = 0; k <= d; ++k)
        if (Ahat.hilbert[k] != expect[k])
            throw internal_error("coned algebra has wrong Hilbert function");
    Orientation orr = orient(hat.cx);
    DegreeFn<RatFun2Field> degfn = build_degree_functional(Ahat, orr, theta_hat, d);

    const int nvh = hat.cx.nv;
    MonoCombo<RatFun2Field> elem;
    for (const auto& e : inst.elem) elem.emplace_back(mono_from_exponents(e, nvh), K.one());
    AMono xJ = mono_from_exponents(inst.J, nvh);

    // Left side before differentiation.
    RatFun2 base = K.zero();
    if (inst.cor_mode) {
        auto coords = Ahat.combo_coords(elem, s);
        auto v = Ahat.mul_by_monomial(coords, s, xJ);
        base = pair_combo_coords(Ahat, degfn, elem, v, s + jsum);
    } else {
        // deg(h^2 x^J), expanded over all monomial pairs; the characteristic-2
        // cross-term cancellation happens in the arithmetic itself.
        for (const auto& [m1, c1] : elem)
            for (const auto& [m2, c2] : elem) {
                AMono m = m1;
                for (int j = 0; j < nvh; ++j)
                    m[j] = static_cast<std::uint16_t>(m[j] + m2[j] + xJ[j]);
                const auto& w = Ahat.reduce_monomial(m);
                base = K.add(base, K.mul(K.mul(c1, c2), degfn.apply(w)));
            }
    }
    RatFun2 lhs = base;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j)
            if (inst.I[i][j] == 1) lhs = K.derivative(lhs, var[{i, j}]);

    // Right side: square root of x^I x^J over the base vertices.
    std::vector<int> exps(n, 0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < d; ++i) exps[j] += inst.I[i][j];
        exps[j] += inst.J[j];
    }
    bool odd = false;
    for (int x : exps) odd = odd || (x % 2 != 0);
    RatFun2 rhs = K.zero();
    if (odd) {
        rep.rhs_zero = true;
    } else {
        AMono root(nvh, 0);
        for (int j = 0; j < n; ++j) root[j] = static_cast<std::uint16_t>(exps[j] / 2);
        RatFun2 r0 = K.zero();
        if (inst.cor_mode) {
            auto v = Ahat.reduce_monomial(root);
            r0 = pair_combo_coords(Ahat, degfn, elem, v, mono_degree(root));
        } else {
            for (const auto& [m1, c1] : elem) {
                AMono m = m1;
                for (int j = 0; j < nvh; ++j) m[j] = static_cast<std::uint16_t>(m[j] + root[j]);
                const auto& w = Ahat.reduce_monomial(m);
                r0 = K.add(r0, K.mul(c1, degfn.apply(w)));
            }
        }
        rhs = K.mul(r0, r0);
        rep.rhs_zero = K.is_zero(rhs);
    }

    rep.identity_holds = K.eq(lhs, rhs);
    rep.lhs = K.to_string(lhs, rep.var_names);
    rep.rhs = K.to_string(rhs, rep.var_names);
    return rep;
}

}  // namespace localh
