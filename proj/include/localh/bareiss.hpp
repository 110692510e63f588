#ifndef LOCALH_BAREISS_HPP
#define LOCALH_BAREISS_HPP

#include <vector>

#include "localh/util.hpp"

namespace localh {

/*
 * Fraction-free Gaussian elimination (Bareiss) over an integral domain R
 * providing zero/one/add/sub/mul/divexact/is_zero.  Intermediate entries stay
 * in the ring: every 2x2 cross-multiplication step is exactly divisible by
 * the previous pivot, so entry sizes grow linearly with the elimination
 * depth instead of exponentially.  Used with polynomial entries by the
 * symbolic characteristic-2 module.
 */
template <class R>
struct RingMat {
    using E = typename R::Element;
    int rows = 0, cols = 0;
    std::vector<E> a;
    RingMat() = default;
    RingMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    E& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const E& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

template <class R>
struct BareissEchelon {
    RingMat<R> m;                 // upper echelon, rows permuted in place
    std::vector<int> pivot_cols;  // ascending
    int rank = 0;
};

template <class R>
BareissEchelon<R> bareiss_echelon(const R& ring, RingMat<R> m) {
    using E = typename R::Element;
    BareissEchelon<R> out;
    E prev_pivot = ring.one();
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!ring.is_zero(m.at(i, c))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        const E pivot = m.at(r, c);
        for (int i = r + 1; i < m.rows; ++i) {
            const E head = m.at(i, c);
            for (int j = c; j < m.cols; ++j) {
                E t = ring.sub(ring.mul(pivot, m.at(i, j)), ring.mul(head, m.at(r, j)));
                m.at(i, j) = ring.divexact(t, prev_pivot);
            }
        }
        prev_pivot = pivot;
        pivots.push_back(c);
        ++r;
    }
    out.m = std::move(m);
    out.pivot_cols = std::move(pivots);
    out.rank = r;
    return out;
}

template <class R>
typename R::Element bareiss_det(const R& ring, RingMat<R> m) {
    if (m.rows != m.cols) throw internal_error("det of non-square matrix");
    int n = m.rows;
    bool negate = false;
    typename R::Element prev = ring.one();
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (!ring.is_zero(m.at(i, c))) { pr = i; break; }
        if (pr < 0) return ring.zero();
        if (pr != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(c, j));
            negate = !negate;
        }
        for (int i = c + 1; i < n; ++i)
            for (int j = c + 1; j < n; ++j) {
                auto t = ring.sub(ring.mul(m.at(c, c), m.at(i, j)), ring.mul(m.at(i, c), m.at(c, j)));
                m.at(i, j) = ring.divexact(t, prev);
            }
        prev = m.at(c, c);
    }
    return negate ? ring.neg(m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

}  // namespace localh

#endif
