#ifndef LOCALH_RATFUN2_HPP
#define LOCALH_RATFUN2_HPP

#include <string>
#include <vector>

#include "localh/bareiss.hpp"
#include "localh/matrix.hpp"
#include "localh/poly2.hpp"

namespace localh {

/*
 * Rational functions over F_2 in the generic l.s.o.p. coefficients.  No gcd
 * normalization is performed: equality is decided by cross-multiplication,
 * and linear algebra over this field goes through fraction-free elimination
 * (see field_rref below) so denominators never stack up multiplicatively.
 */
struct RatFun2 {
    Poly2 num = Poly2::zero();
    Poly2 den = Poly2::one();
    bool operator==(const RatFun2& o) const = delete;  // use field.eq
};

class RatFun2Field {
public:
    using Element = RatFun2;

    Element zero() const { return {}; }
    Element one() const { return {Poly2::one(), Poly2::one()}; }
    Element from_int(long v) const {
        return (((v % 2) + 2) % 2) ? one() : zero();
    }
    Element from_poly(Poly2 p) const { return {std::move(p), Poly2::one()}; }
    Element make(Poly2 n, Poly2 d) const {
        if (d.is_zero()) throw internal_error("RatFun2 with zero denominator");
        if (n.is_zero()) return {};
        return {std::move(n), std::move(d)};
    }
    Element add(const Element& a, const Element& b) const {
        if (a.num.is_zero()) return b;
        if (b.num.is_zero()) return a;
        return make(p2_add(p2_mul(a.num, b.den), p2_mul(b.num, a.den)), p2_mul(a.den, b.den));
    }
    Element sub(const Element& a, const Element& b) const { return add(a, b); }
    Element neg(const Element& a) const { return a; }
    Element mul(const Element& a, const Element& b) const {
        if (a.num.is_zero() || b.num.is_zero()) return {};
        return make(p2_mul(a.num, b.num), p2_mul(a.den, b.den));
    }
    Element inv(const Element& a) const {
        if (a.num.is_zero()) throw internal_error("division by zero rational function");
        return {a.den, a.num};
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    bool is_zero(const Element& a) const { return a.num.is_zero(); }
    bool eq(const Element& a, const Element& b) const {
        return p2_mul(a.num, b.den) == p2_mul(b.num, a.den);
    }
    // d/d a_v with the characteristic-2 quotient rule.
    Element derivative(const Element& a, int v) const {
        if (a.num.is_zero()) return {};
        Poly2 n = p2_add(p2_mul(p2_derivative(a.num, v), a.den),
                         p2_mul(a.num, p2_derivative(a.den, v)));
        return make(std::move(n), p2_mul(a.den, a.den));
    }
    std::string to_string(const Element& a, const std::vector<std::string>& names) const {
        if (a.num.is_zero()) return "0";
        if (a.den.is_one()) return p2_to_string(a.num, names);
        return "(" + p2_to_string(a.num, names) + ")/(" + p2_to_string(a.den, names) + ")";
    }
};

/*
 * Fraction-free RREF for matrices of rational functions: rows are cleared to
 * polynomial form, Bareiss elimination keeps entries polynomial with linear
 * size growth, and back-substitution reintroduces single fractions whose
 * denominators are products of at most rank-many pivots.
 */
inline std::vector<int> field_rref(const RatFun2Field& K, Mat<RatFun2Field>& m) {
    Poly2Ring R;
    RingMat<Poly2Ring> pm(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        // Row common denominator via prefix/suffix products of denominators.
        std::vector<const Poly2*> dens;
        for (int j = 0; j < m.cols; ++j) dens.push_back(&m.at(i, j).den);
        int n = m.cols;
        std::vector<Poly2> pre(n + 1, Poly2::one()), suf(n + 1, Poly2::one());
        for (int j = 0; j < n; ++j) pre[j + 1] = p2_mul(pre[j], *dens[j]);
        for (int j = n - 1; j >= 0; --j) suf[j] = p2_mul(suf[j + 1], *dens[j]);
        for (int j = 0; j < n; ++j)
            pm.at(i, j) = p2_mul(m.at(i, j).num, p2_mul(pre[j], suf[j + 1]));
    }
    BareissEchelon<Poly2Ring> ech = bareiss_echelon(R, std::move(pm));
    const std::vector<int>& piv = ech.pivot_cols;
    int r = ech.rank;

    // Back-substitute into genuine RREF rows over the fraction field.
    std::vector<std::vector<RatFun2>> rrows(r, std::vector<RatFun2>(m.cols));
    for (int i = r - 1; i >= 0; --i) {
        std::vector<RatFun2> row(m.cols);
        for (int j = 0; j < m.cols; ++j) row[j] = K.from_poly(ech.m.at(i, j));
        for (int s = i + 1; s < r; ++s) {
            const RatFun2 factor = row[piv[s]];
            if (K.is_zero(factor)) continue;
            for (int j = piv[s]; j < m.cols; ++j)
                row[j] = K.sub(row[j], K.mul(factor, rrows[s][j]));
        }
        const RatFun2 pivinv = K.inv(row[piv[i]]);
        for (int j = 0; j < m.cols; ++j) row[j] = K.mul(row[j], pivinv);
        rrows[i] = std::move(row);
    }
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = (i < r) ? rrows[i][j] : K.zero();
    return piv;
}

}  // namespace localh

#endif
