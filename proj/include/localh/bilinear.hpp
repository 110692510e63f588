#ifndef LOCALH_BILINEAR_HPP
#define LOCALH_BILINEAR_HPP

#include <vector>

#include "localh/algebra.hpp"
#include "localh/matrix.hpp"
#include "localh/orientation.hpp"

namespace localh {

/*
 * The degree functional on the top graded piece of the coned-sphere algebra.
 * Its value on a facet monomial x^F is the facet's orientation sign divided
 * by the determinant of the parameter columns of F (vertices in ascending
 * order).  The top piece is one-dimensional, so the functional is a single
 * scalar against the surviving basis monomial; it is computed from the first
 * facet and then checked against every other facet, since agreement across
 * facets is exactly what makes the normalization well defined.
 */
template <class F>
struct DegreeFn {
    F field;
    typename F::Element scale;  // value on the surviving top-degree basis monomial

    typename F::Element apply(const std::vector<typename F::Element>& top_coords) const {
        if (top_coords.size() != 1) throw internal_error("degree functional needs 1-dim top");
        return field.mul(scale, top_coords[0]);
    }
};

template <class F>
DegreeFn<F> build_degree_functional(GradedAlgebra<F>& Ahat, const Orientation& orient,
                                    const Mat<F>& theta_hat, int d) {
    const F& field = Ahat.field;
    if (Ahat.dim(d) != 1) throw internal_error("top graded piece is not one-dimensional");
    DegreeFn<F> out;
    out.field = field;
    bool have = false;
    for (Mask fct : orient.facets) {
        Mat<F> sub(theta_hat.rows, popcount64(fct));
        int c = 0;
        for (int v = 0; v < Ahat.cx.nv; ++v)
            if ((fct >> v) & 1) {
                for (int r = 0; r < theta_hat.rows; ++r) sub.at(r, c) = theta_hat.at(r, v);
                ++c;
            }
        typename F::Element dt = det(field, std::move(sub));
        if (field.is_zero(dt)) throw internal_error("parameter matrix degenerate on a facet");
        typename F::Element target = field.inv(dt);
        if (orient.sign_of(fct) < 0) target = field.neg(target);

        const auto& coords = Ahat.reduce_monomial(mono_of_face(fct, Ahat.cx.nv));
        if (field.is_zero(coords[0]))
            throw internal_error("facet monomial vanishes in the top piece");
        typename F::Element scale = field.mul(target, field.inv(coords[0]));
        if (!have) {
            out.scale = scale;
            have = true;
        } else if (!field.is_zero(field.sub(out.scale, scale))) {
            throw internal_error("degree functional is inconsistent across facets");
        }
    }
    if (!have) throw internal_error("no facets for degree functional");
    return out;
}

// deg(p * q) for an interior combination p (monomials over the coned
// algebra's vertices) and an element q given by coordinates at degree sq.
template <class F>
typename F::Element pair_combo_coords(GradedAlgebra<F>& Ahat, const DegreeFn<F>& degfn,
                                      const MonoCombo<F>& p,
                                      const std::vector<typename F::Element>& q, int sq) {
    const F& field = Ahat.field;
    typename F::Element total = field.zero();
    for (const auto& [m, c] : p) {
        auto w = Ahat.mul_by_monomial(q, sq, m);
        total = field.add(total, field.mul(c, degfn.apply(w)));
    }
    return total;
}

// Pad a monomial over the base complex's vertices to the coned complex.
inline AMono pad_mono(const AMono& m, int nv) {
    AMono out = m;
    out.resize(nv, 0);
    return out;
}

template <class F>
MonoCombo<F> pad_combo(const MonoCombo<F>& e, int nv) {
    MonoCombo<F> out;
    out.reserve(e.size());
    for (const auto& [m, c] : e) out.emplace_back(pad_mono(m, nv), c);
    return out;
}

/*
 * Lift of the local module basis at one degree into the coned-sphere
 * algebra: the interior-monomial expressions are evaluated in A-hat.  The
 * lifted elements are annihilated by x_c, which is what detaches the pairing
 * from the choice of lift.
 */
template <class F>
struct LiftedBasis {
    int s = 0;
    std::vector<MonoCombo<F>> expr;  // padded to the coned vertex set
    Mat<F> coords;                   // A-hat^s coordinates, one column per element
};

template <class F>
LiftedBasis<F> lift_basis(GradedAlgebra<F>& Ahat, const LocalModule<F>& L, int s) {
    const F& field = Ahat.field;
    LiftedBasis<F> out;
    out.s = s;
    out.coords = Mat<F>(Ahat.dim(s), L.dim(s));
    for (int b = 0; b < L.dim(s); ++b) {
        MonoCombo<F> e = pad_combo<F>(L.expr[s][b], Ahat.cx.nv);
        auto v = Ahat.combo_coords(e, s);
        for (int r = 0; r < out.coords.rows; ++r) out.coords.at(r, b) = v[r];
        out.expr.push_back(std::move(e));
    }
    return out;
}

/*
 * Gram matrix of the pairing L^s1 x L^s2 -> k, (u, v) -> deg(u * m^w * v),
 * where m is a degree-1 multiplier with the given coefficients over the base
 * vertices and s1 + w + s2 = d.  w = 0 gives Stanley's pairing itself;
 * s1 = s2 = s with w = d - 2s gives the Hodge-Riemann form at degree s.
 */
template <class F>
Mat<F> gram_matrix(GradedAlgebra<F>& Ahat, const DegreeFn<F>& degfn, const LocalModule<F>& L,
                   int s1, int s2, int w, const std::vector<typename F::Element>& u, int d) {
    const F& field = Ahat.field;
    if (s1 + s2 + w != d) throw internal_error("gram degrees do not sum to top degree");
    LiftedBasis<F> left = lift_basis(Ahat, L, s1);
    LiftedBasis<F> right = lift_basis(Ahat, L, s2);
    std::vector<typename F::Element> uhat(Ahat.cx.nv, field.zero());
    for (std::size_t j = 0; j < u.size(); ++j) uhat[j] = u[j];

    Mat<F> G(L.dim(s1), L.dim(s2));
    for (int j = 0; j < L.dim(s2); ++j) {
        std::vector<typename F::Element> v(right.coords.rows, field.zero());
        for (int r = 0; r < right.coords.rows; ++r) v[r] = right.coords.at(r, j);
        int cur = s2;
        for (int k = 0; k < w; ++k) {
            v = Ahat.mul_by_linear(v, cur, uhat);
            ++cur;
        }
        for (int i = 0; i < L.dim(s1); ++i)
            G.at(i, j) = pair_combo_coords(Ahat, degfn, left.expr[i], v, cur);
    }
    return G;
}

// v^T G v for a vector in local-module coordinates.
template <class F>
typename F::Element quadratic_value(const F& field, const Mat<F>& G,
                                    const std::vector<typename F::Element>& v) {
    typename F::Element total = field.zero();
    for (int i = 0; i < G.rows; ++i) {
        if (field.is_zero(v[i])) continue;
        for (int j = 0; j < G.cols; ++j)
            total = field.add(total, field.mul(v[i], field.mul(G.at(i, j), v[j])));
    }
    return total;
}

// deg(p * q) for two interior combinations with degrees summing to d.
template <class F>
typename F::Element pair_combos(GradedAlgebra<F>& Ahat, const DegreeFn<F>& degfn,
                                const MonoCombo<F>& p, const MonoCombo<F>& q, int sq) {
    auto v = Ahat.combo_coords(pad_combo<F>(q, Ahat.cx.nv), sq);
    return pair_combo_coords(Ahat, degfn, pad_combo<F>(p, Ahat.cx.nv), v, sq);
}

}  // namespace localh

#endif
