#ifndef LOCALH_ALGEBRA_HPP
#define LOCALH_ALGEBRA_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "localh/complex.hpp"
#include "localh/matrix.hpp"
#include "localh/util.hpp"

namespace localh {

// Monomial in the face ring: dense exponent vector over the complex's
// vertices.
using AMono = std::vector<std::uint16_t>;

inline Mask mono_support(const AMono& m) {
    Mask s = 0;
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v]) s |= (1ULL << v);
    return s;
}

inline int mono_degree(const AMono& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

inline AMono mono_of_face(Mask f, int nv) {
    AMono m(nv, 0);
    for (int v = 0; v < nv; ++v)
        if ((f >> v) & 1) m[v] = 1;
    return m;
}

// Linear combination of monomials with field coefficients; the expression
// form used for local-module basis elements (supports of all monomials
// contain an interior face).
template <class F>
using MonoCombo = std::vector<std::pair<AMono, typename F::Element>>;

/*
 * Artinian reduction of the face ring of a complex by a linear system of
 * parameters.  The parameter rows are solved for their pivot variables, which
 * rewrites the quotient as k[free variables] / J with J generated by the
 * substituted minimal non-faces; each graded piece is then plain linear
 * algebra on the full monomial space of that degree, so no relation is ever
 * missed.  Monomial columns are ordered descending-lex, so elimination keeps
 * the lex-smallest standard monomials as the basis.
 */
template <class F>
struct GradedAlgebra {
    F field;
    Complex cx;
    Mat<F> theta;  // rows = parameters, cols = vertices
    int top = 0;

    std::vector<std::vector<AMono>> basis;                            // per degree
    std::vector<std::map<AMono, std::vector<typename F::Element>>> coords;  // monomial -> basis coords
    std::vector<std::vector<Mat<F>>> mult;  // mult[s][j] : A^s -> A^(s+1)
    std::vector<int> hilbert;

    int dim(int s) const { return (s >= 0 && s <= top) ? hilbert[s] : 0; }

    // Coordinates of an arbitrary monomial (zero vector if its support is
    // not a face); memoized.
    const std::vector<typename F::Element>& reduce_monomial(const AMono& m);

    // coords at degree s multiplied by the monomial m.
    std::vector<typename F::Element> mul_by_monomial(std::vector<typename F::Element> v, int s,
                                                     const AMono& m) const;

    // coords at degree s multiplied by a degree-1 element with the given
    // vertex coefficients.
    std::vector<typename F::Element> mul_by_linear(
        const std::vector<typename F::Element>& v, int s,
        const std::vector<typename F::Element>& u) const;

    std::vector<typename F::Element> combo_coords(const MonoCombo<F>& combo, int s);
};

namespace detail {

// Exponent vectors of total degree s over r variables, descending lex.
inline std::vector<AMono> monomials_of_degree(int r, int s) {
    std::vector<AMono> out;
    if (r == 0) {
        if (s == 0) out.push_back(AMono{});
        return out;
    }
    AMono cur(r, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == r - 1) {
            cur[pos] = static_cast<std::uint16_t>(rem);
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = static_cast<std::uint16_t>(e);
            self(self, pos + 1, rem - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, s);
    return out;
}

// Every minimal non-face is a face plus one vertex, so scanning the face
// list finds them all.
inline std::vector<Mask> minimal_nonfaces(const Complex& cx) {
    std::unordered_set<Mask> seen;
    std::vector<Mask> out;
    for (Mask f : cx.faces)
        for (int v = 0; v < cx.nv; ++v) {
            if ((f >> v) & 1) continue;
            Mask n = f | (1ULL << v);
            if (cx.is_face(n) || !seen.insert(n).second) continue;
            bool minimal = true;
            for (int w = 0; w < cx.nv && minimal; ++w)
                if ((n >> w) & 1) minimal = cx.is_face(n & ~(1ULL << w));
            if (minimal) out.push_back(n);
        }
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

}  // namespace detail

template <class F>
GradedAlgebra<F> build_graded_algebra(const F& field, const Complex& cx, const Mat<F>& theta,
                                      int top) {
    using E = typename F::Element;
    GradedAlgebra<F> A;
    A.field = field;
    A.cx = cx;
    A.theta = theta;
    A.top = top;
    A.basis.resize(top + 1);
    A.coords.resize(top + 1);
    A.mult.resize(top + 1);
    A.hilbert.assign(top + 1, 0);

    const int nv = cx.nv;
    const int npar = theta.rows;

    // Solve the parameter rows for their pivot variables: x_piv = linear
    // form in the free variables.  subst[j] holds that form for every j.
    Mat<F> R = theta;
    std::vector<int> piv = field_rref(field, R);
    if (static_cast<int>(piv.size()) != npar) throw internal_error("parameter rows are dependent");
    std::vector<bool> is_piv(nv, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> freev;
    for (int j = 0; j < nv; ++j)
        if (!is_piv[j]) freev.push_back(j);
    const int r = static_cast<int>(freev.size());
    std::vector<std::vector<E>> subst(nv, std::vector<E>(r, field.zero()));
    for (int k = 0; k < r; ++k) subst[freev[k]][k] = field.one();
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (int k = 0; k < r; ++k)
            subst[piv[i]][k] = field.neg(R.at(static_cast<int>(i), freev[k]));

    // Generators of J: each minimal non-face expanded as a polynomial in the
    // free variables.
    struct Gen {
        int deg;
        std::vector<std::pair<AMono, E>> terms;
    };
    std::vector<Gen> gens;
    for (Mask nf : detail::minimal_nonfaces(cx)) {
        std::map<AMono, E> poly;
        poly.emplace(AMono(r, 0), field.one());
        for (int v = 0; v < nv && !poly.empty(); ++v) {
            if (!((nf >> v) & 1)) continue;
            std::map<AMono, E> next;
            for (const auto& [m, c] : poly)
                for (int k = 0; k < r; ++k) {
                    if (field.is_zero(subst[v][k])) continue;
                    AMono m2 = m;
                    m2[k]++;
                    E term = field.mul(c, subst[v][k]);
                    auto [it, fresh] = next.emplace(std::move(m2), term);
                    if (!fresh) it->second = field.add(it->second, term);
                }
            poly = std::move(next);
        }
        Gen g;
        g.deg = popcount64(nf);
        for (auto& [m, c] : poly)
            if (!field.is_zero(c)) g.terms.emplace_back(m, c);
        if (!g.terms.empty() && g.deg <= top) gens.push_back(std::move(g));
    }

    A.basis[0] = {AMono(r, 0)};
    A.coords[0][AMono(r, 0)] = {field.one()};
    A.coords[0][AMono(nv, 0)] = {field.one()};  // the unit in vertex exponents
    A.hilbert[0] = 1;

    std::vector<std::vector<AMono>> monos(top + 1);
    monos[0] = {AMono(r, 0)};
    for (int s = 1; s <= top; ++s) {
        monos[s] = detail::monomials_of_degree(r, s);
        const auto& ms = monos[s];
        std::map<AMono, int> col;
        for (std::size_t k = 0; k < ms.size(); ++k) col[ms[k]] = static_cast<int>(k);

        int nrows = 0;
        for (const Gen& g : gens)
            if (g.deg <= s) nrows += static_cast<int>(monos[s - g.deg].size());
        Mat<F> rel(nrows, static_cast<int>(ms.size()));
        int row = 0;
        for (const Gen& g : gens) {
            if (g.deg > s) continue;
            for (const AMono& m : monos[s - g.deg]) {
                for (const auto& [gm, c] : g.terms) {
                    AMono prod = m;
                    for (int k = 0; k < r; ++k) prod[k] = static_cast<std::uint16_t>(prod[k] + gm[k]);
                    rel.at(row, col.at(prod)) = c;
                }
                ++row;
            }
        }
        std::vector<int> pivots = field_rref(field, rel);
        std::vector<bool> is_pivot(ms.size(), false);
        for (int c : pivots) is_pivot[c] = true;

        std::vector<int> basis_pos(ms.size(), -1);
        for (std::size_t k = 0; k < ms.size(); ++k)
            if (!is_pivot[k]) {
                basis_pos[k] = static_cast<int>(A.basis[s].size());
                A.basis[s].push_back(ms[k]);
            }
        int dim = static_cast<int>(A.basis[s].size());
        A.hilbert[s] = dim;
        for (std::size_t k = 0; k < ms.size(); ++k)
            if (!is_pivot[k]) {
                std::vector<E> e(dim, field.zero());
                e[basis_pos[k]] = field.one();
                A.coords[s][ms[k]] = std::move(e);
            }
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
            std::vector<E> e(dim, field.zero());
            for (std::size_t k = 0; k < ms.size(); ++k)
                if (!is_pivot[k] &&
                    !field.is_zero(rel.at(static_cast<int>(pr), static_cast<int>(k))))
                    e[basis_pos[k]] = field.neg(rel.at(static_cast<int>(pr), static_cast<int>(k)));
            A.coords[s][ms[pivots[pr]]] = std::move(e);
        }

        // Multiplication by x_j from degree s-1: substitute and multiply by
        // one free variable at a time.
        const auto& prev = A.basis[s - 1];
        auto& maps = A.mult[s - 1];
        maps.assign(nv, Mat<F>(dim, static_cast<int>(prev.size())));
        for (std::size_t bidx = 0; bidx < prev.size(); ++bidx)
            for (int k = 0; k < r; ++k) {
                AMono m = prev[bidx];
                m[k]++;
                const auto& cv = A.coords[s].at(m);
                for (int j = 0; j < nv; ++j) {
                    if (field.is_zero(subst[j][k])) continue;
                    for (int r2 = 0; r2 < dim; ++r2)
                        if (!field.is_zero(cv[r2]))
                            maps[j].at(r2, static_cast<int>(bidx)) =
                                field.add(maps[j].at(r2, static_cast<int>(bidx)),
                                          field.mul(subst[j][k], cv[r2]));
                }
            }
    }
    return A;
}

template <class F>
const std::vector<typename F::Element>& GradedAlgebra<F>::reduce_monomial(const AMono& m) {
    int s = mono_degree(m);
    if (s > top) throw internal_error("monomial degree exceeds algebra cap");
    auto it = coords[s].find(m);
    if (it != coords[s].end()) return it->second;
    std::vector<typename F::Element> v;
    if (!cx.is_face(mono_support(m))) {
        v.assign(hilbert[s], field.zero());
    } else {
        int j = 0;
        while (m[j] == 0) ++j;
        AMono prev = m;
        prev[j]--;
        const auto& pv = reduce_monomial(prev);
        v = mat_vec(field, mult[s - 1][j], pv);
    }
    auto [pos, inserted] = coords[s].emplace(m, std::move(v));
    return pos->second;
}

template <class F>
std::vector<typename F::Element> GradedAlgebra<F>::mul_by_monomial(
    std::vector<typename F::Element> v, int s, const AMono& m) const {
    for (std::size_t j = 0; j < m.size(); ++j)
        for (int rep = 0; rep < m[j]; ++rep) {
            v = mat_vec(field, mult[s][j], v);
            ++s;
        }
    return v;
}

template <class F>
std::vector<typename F::Element> GradedAlgebra<F>::mul_by_linear(
    const std::vector<typename F::Element>& v, int s,
    const std::vector<typename F::Element>& u) const {
    std::vector<typename F::Element> out(dim(s + 1), field.zero());
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (field.is_zero(u[j])) continue;
        auto w = mat_vec(field, mult[s][j], v);
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = field.add(out[k], field.mul(u[j], w[k]));
    }
    return out;
}

template <class F>
std::vector<typename F::Element> GradedAlgebra<F>::combo_coords(const MonoCombo<F>& combo, int s) {
    std::vector<typename F::Element> out(dim(s), field.zero());
    for (const auto& [m, c] : combo) {
        if (mono_degree(m) != s) throw internal_error("inhomogeneous monomial combination");
        const auto& v = reduce_monomial(m);
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = field.add(out[k], field.mul(c, v[k]));
    }
    return out;
}

/*
 * The graded submodule generated by the interior faces: degree s is spanned
 * by squarefree interior monomials of size s together with x_j times the
 * previous degree.  Each basis element keeps an explicit expression as a
 * combination of monomials whose support contains an interior face, so
 * elements can be lifted into the coned-sphere algebra later.
 */
template <class F>
struct LocalModule {
    int top = 0;
    std::vector<std::vector<MonoCombo<F>>> expr;  // per degree, per basis element
    std::vector<Mat<F>> basisA;                   // A^s coords, cols = basis elements
    std::vector<int> hilbert;

    int dim(int s) const { return (s >= 0 && s <= top) ? hilbert[s] : 0; }
};

template <class F>
LocalModule<F> build_local_module(GradedAlgebra<F>& A, const std::vector<Mask>& interior) {
    const F& field = A.field;
    LocalModule<F> L;
    L.top = A.top;
    L.expr.resize(A.top + 1);
    L.basisA.resize(A.top + 1);
    L.hilbert.assign(A.top + 1, 0);

    const int nv = A.cx.nv;
    std::vector<std::vector<Mask>> interior_by_size(A.top + 1);
    for (Mask g : interior)
        if (popcount64(g) <= A.top) interior_by_size[popcount64(g)].push_back(g);
    for (auto& v : interior_by_size) std::sort(v.begin(), v.end(), face_less);

    for (int s = 0; s <= A.top; ++s) {
        // Generators in a fixed order: squarefree interior monomials first,
        // then x_j times the previous basis.
        std::vector<std::pair<MonoCombo<F>, std::vector<typename F::Element>>> gens;
        for (Mask g : interior_by_size[s]) {
            AMono m = mono_of_face(g, nv);
            MonoCombo<F> e{{m, field.one()}};
            gens.emplace_back(std::move(e), A.reduce_monomial(m));
        }
        if (s >= 1)
            for (int j = 0; j < nv; ++j)
                for (std::size_t b = 0; b < L.expr[s - 1].size(); ++b) {
                    MonoCombo<F> e;
                    bool face_ok = false;
                    for (const auto& [m, c] : L.expr[s - 1][b]) {
                        AMono m2 = m;
                        m2[j]++;
                        if (!A.cx.is_face(mono_support(m2))) continue;
                        e.emplace_back(std::move(m2), c);
                    }
                    if (e.empty()) continue;
                    std::vector<typename F::Element> col(L.basisA[s - 1].rows, field.zero());
                    for (int r = 0; r < L.basisA[s - 1].rows; ++r)
                        col[r] = L.basisA[s - 1].at(r, static_cast<int>(b));
                    auto v = mat_vec(field, A.mult[s - 1][j], col);
                    for (const auto& x : v)
                        if (!field.is_zero(x)) face_ok = true;
                    if (face_ok) gens.emplace_back(std::move(e), std::move(v));
                }

        // Greedy independent subset via incremental elimination.
        int adim = A.dim(s);
        std::vector<std::vector<typename F::Element>> rows;  // reduced pivot rows
        std::vector<int> pivot_of_row;
        std::vector<int> kept;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            std::vector<typename F::Element> v = gens[g].second;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const auto& factor = v[pivot_of_row[r]];
                if (field.is_zero(factor)) continue;
                auto fcopy = factor;
                for (int k = 0; k < adim; ++k)
                    v[k] = field.sub(v[k], field.mul(fcopy, rows[r][k]));
            }
            int p = -1;
            for (int k = 0; k < adim; ++k)
                if (!field.is_zero(v[k])) { p = k; break; }
            if (p < 0) continue;
            auto pin = field.inv(v[p]);
            for (int k = 0; k < adim; ++k) v[k] = field.mul(v[k], pin);
            rows.push_back(std::move(v));
            pivot_of_row.push_back(p);
            kept.push_back(static_cast<int>(g));
        }
        L.hilbert[s] = static_cast<int>(kept.size());
        L.basisA[s] = Mat<F>(adim, L.hilbert[s]);
        for (std::size_t k = 0; k < kept.size(); ++k) {
            L.expr[s].push_back(gens[kept[k]].first);
            for (int r = 0; r < adim; ++r)
                L.basisA[s].at(r, static_cast<int>(k)) = gens[kept[k]].second[r];
        }
    }
    return L;
}

// Coordinates of an A^s vector in the local-module basis; nullopt when the
// vector lies outside the submodule.
template <class F>
std::optional<std::vector<typename F::Element>> module_coords(
    const F& field, const LocalModule<F>& L, int s,
    const std::vector<typename F::Element>& acoords) {
    return solve(field, L.basisA[s], acoords);
}

// Socle of degree s: kernel of the stacked multiplications into degree s+1.
template <class F>
std::vector<std::vector<typename F::Element>> socle(const F& field, const GradedAlgebra<F>& A,
                                                    const LocalModule<F>& L, int s) {
    if (s >= L.top) {
        // Top degree: everything is socle.
        std::vector<std::vector<typename F::Element>> r;
        for (int k = 0; k < L.dim(s); ++k) {
            std::vector<typename F::Element> v(L.dim(s), field.zero());
            v[k] = field.one();
            r.push_back(std::move(v));
        }
        return r;
    }
    const int nv = A.cx.nv;
    Mat<F> stacked(nv * A.dim(s + 1), L.dim(s));
    for (int j = 0; j < nv; ++j) {
        Mat<F> img = mat_mul(field, A.mult[s][j], L.basisA[s]);
        for (int r = 0; r < img.rows; ++r)
            for (int c = 0; c < img.cols; ++c) stacked.at(j * A.dim(s + 1) + r, c) = img.at(r, c);
    }
    return kernel_basis(field, std::move(stacked));
}

// Dimensions of L^s / K^1 L^(s-1) per degree: the module's generator
// degrees.  By duality the cokernel dimension at degree d-s must match the
// socle dimension at degree s, which callers can assert.
template <class F>
std::vector<int> generator_degrees(const F& field, const GradedAlgebra<F>& A,
                                   const LocalModule<F>& L) {
    std::vector<int> out(L.top + 1, 0);
    for (int s = 0; s <= L.top; ++s) {
        if (L.dim(s) == 0) continue;
        if (s == 0) {
            out[0] = L.dim(0);
            continue;
        }
        const int nv = A.cx.nv;
        Mat<F> images(A.dim(s), nv * L.dim(s - 1));
        for (int j = 0; j < nv; ++j) {
            Mat<F> img = mat_mul(field, A.mult[s - 1][j], L.basisA[s - 1]);
            for (int r = 0; r < img.rows; ++r)
                for (int c = 0; c < img.cols; ++c) images.at(r, j * L.dim(s - 1) + c) = img.at(r, c);
        }
        out[s] = L.dim(s) - rank(field, std::move(images));
    }
    return out;
}

}  // namespace localh

#endif
