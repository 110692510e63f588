#ifndef LOCALH_MATRIX_HPP
#define LOCALH_MATRIX_HPP

#include <optional>
#include <vector>

#include "localh/util.hpp"

namespace localh {

// Dense row-major matrix over a field object F (see fields.hpp for the
// interface).  Elements default-construct to zero for every supported field.
template <class F>
struct Mat {
    using E = typename F::Element;
    int rows = 0, cols = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    E& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const E& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/*
 * In-place reduced row echelon form with deterministic pivoting: columns are
 * scanned left to right and the first row with a nonzero entry becomes the
 * pivot.  Returns the pivot columns in ascending order.
 */
template <class F>
std::vector<int> field_rref(const F& f, Mat<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        typename F::Element piv_inv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), piv_inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            typename F::Element factor = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(const F& f, Mat<F> m) {
    return static_cast<int>(field_rref(f, m).size());
}

// Kernel basis, one vector per free column in ascending column order; the
// vector has 1 at its free column.
template <class F>
std::vector<std::vector<typename F::Element>> kernel_basis(const F& f, Mat<F> m) {
    std::vector<int> pivots = field_rref(f, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename F::Element>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename F::Element> v(m.cols, f.zero());
        v[c] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m.at(static_cast<int>(i), c));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Particular solution of A x = b with free variables set to zero, or nullopt
// if the system is inconsistent.
template <class F>
std::optional<std::vector<typename F::Element>> solve(const F& f, const Mat<F>& A,
                                                      const std::vector<typename F::Element>& b) {
    Mat<F> aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    std::vector<int> pivots = field_rref(f, aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    std::vector<typename F::Element> x(A.cols, f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), A.cols);
    return x;
}

template <class F>
std::vector<typename F::Element> mat_vec(const F& f, const Mat<F>& A,
                                         const std::vector<typename F::Element>& v) {
    std::vector<typename F::Element> r(A.rows, f.zero());
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (!f.is_zero(A.at(i, j))) r[i] = f.add(r[i], f.mul(A.at(i, j), v[j]));
    return r;
}

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& A, const Mat<F>& B) {
    Mat<F> r(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (f.is_zero(A.at(i, k))) continue;
            for (int j = 0; j < B.cols; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(A.at(i, k), B.at(k, j)));
        }
    return r;
}

// Determinant by fraction-producing elimination over the field.
template <class F>
typename F::Element det(const F& f, Mat<F> m) {
    if (m.rows != m.cols) throw internal_error("det of non-square matrix");
    typename F::Element d = f.one();
    for (int c = 0; c < m.cols; ++c) {
        int pr = -1;
        for (int i = c; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { pr = i; break; }
        if (pr < 0) return f.zero();
        if (pr != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(c, j));
            d = f.neg(d);
        }
        d = f.mul(d, m.at(c, c));
        typename F::Element piv_inv = f.inv(m.at(c, c));
        for (int i = c + 1; i < m.rows; ++i) {
            if (f.is_zero(m.at(i, c))) continue;
            typename F::Element factor = f.mul(m.at(i, c), piv_inv);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
        }
    }
    return d;
}

}  // namespace localh

#endif
