#ifndef LOCALH_LSOP_HPP
#define LOCALH_LSOP_HPP

#include "localh/algebra.hpp"
#include "localh/complex.hpp"
#include "localh/fields.hpp"
#include "localh/matrix.hpp"

namespace localh {

/*
 * Special linear system of parameters: theta_i is supported on the vertices
 * whose carrier contains coordinate i, with coefficients sampled nonzero.
 * Row i corresponds to coordinate i of the ambient simplex.
 */
template <class F>
Mat<F> sample_special_lsop(const F& field, const Triangulation& t, Rng& rng) {
    Mat<F> th(t.d, t.n());
    for (int j = 0; j < t.n(); ++j)
        for (int i = 0; i < t.d; ++i)
            if ((t.vsigma[j] >> i) & 1) th.at(i, j) = field.sample_nonzero(rng);
    return th;
}

// The defining property of a special l.s.o.p.: restricted to the columns of
// any face, the parameter matrix has full column rank.
template <class F>
bool lsop_certificate(const F& field, const Complex& cx, const Mat<F>& th) {
    for (Mask f : cx.faces) {
        int k = popcount64(f);
        if (k == 0) continue;
        Mat<F> sub(th.rows, k);
        int c = 0;
        for (int v = 0; v < cx.nv; ++v)
            if ((f >> v) & 1) {
                for (int r = 0; r < th.rows; ++r) sub.at(r, c) = th.at(r, v);
                ++c;
            }
        if (rank(field, std::move(sub)) != k) return false;
    }
    return true;
}

// Parameters for the coned boundary sphere: each theta_i picks up -x_c.
template <class F>
Mat<F> extend_to_cone(const F& field, const Mat<F>& th) {
    Mat<F> out(th.rows, th.cols + 1);
    for (int r = 0; r < th.rows; ++r) {
        for (int c = 0; c < th.cols; ++c) out.at(r, c) = th.at(r, c);
        out.at(r, th.cols) = field.neg(field.one());
    }
    return out;
}

/*
 * Parameters for the link of a face E, acting on the link's vertex set.  The
 * coordinates outside sigma(E), in increasing order, each contribute a
 * special row supported on the link vertices whose carrier contains that
 * coordinate; the remaining rows are fully generic.  Altogether d - |E| rows.
 */
template <class F>
Mat<F> sample_relative_lsop(const F& field, const Triangulation& t, const LinkComplex& lk,
                            Rng& rng) {
    Mask sE = t.sigma_of(lk.E);
    const int rows = t.d - popcount64(lk.E);
    const int nv = lk.cx.nv;
    std::vector<Mask> vcarrier(nv, 0);
    for (std::size_t fi = 0; fi < lk.cx.faces.size(); ++fi) {
        Mask f = lk.cx.faces[fi];
        if (popcount64(f) != 1) continue;
        int j = 0;
        while (!((f >> j) & 1)) ++j;
        vcarrier[j] = lk.sigma[fi];
    }
    Mat<F> th(rows, nv);
    int r = 0;
    for (int i = 0; i < t.d; ++i) {
        if ((sE >> i) & 1) continue;
        for (int j = 0; j < nv; ++j)
            if ((vcarrier[j] >> i) & 1) th.at(r, j) = field.sample_nonzero(rng);
        ++r;
    }
    for (; r < rows; ++r)
        for (int j = 0; j < nv; ++j) th.at(r, j) = field.sample_nonzero(rng);
    return th;
}

}  // namespace localh

#endif
