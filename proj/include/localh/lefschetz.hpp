#ifndef LOCALH_LEFSCHETZ_HPP
#define LOCALH_LEFSCHETZ_HPP

#include <optional>
#include <vector>

#include "localh/algebra.hpp"
#include "localh/matrix.hpp"

namespace localh {

template <class F>
Mat<F> linear_mult_matrix(const GradedAlgebra<F>& A, int s,
                          const std::vector<typename F::Element>& u) {
    const F& field = A.field;
    Mat<F> out(A.dim(s + 1), A.dim(s));
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (field.is_zero(u[j])) continue;
        const Mat<F>& mj = A.mult[s][j];
        for (int r = 0; r < out.rows; ++r)
            for (int c = 0; c < out.cols; ++c)
                out.at(r, c) = field.add(out.at(r, c), field.mul(u[j], mj.at(r, c)));
    }
    return out;
}

// Matrix of multiplication by u^w from L^s into A^(s+w), columns in the
// local-module basis.
template <class F>
Mat<F> power_map(const GradedAlgebra<F>& A, const LocalModule<F>& L, int s, int w,
                 const std::vector<typename F::Element>& u) {
    Mat<F> M = L.basisA[s];
    for (int k = 0; k < w; ++k) M = mat_mul(A.field, linear_mult_matrix(A, s + k, u), M);
    return M;
}

template <class F>
struct MapOutcome {
    int s = 0;
    int w = 0;
    int rank = 0;
    int expected = 0;  // min of the two module dimensions
    bool full = false;
    std::optional<std::vector<typename F::Element>> kernel;  // local-module coords
};

template <class F>
struct LefschetzReport {
    bool holds = true;
    std::vector<MapOutcome<F>> maps;
};

// Strong property for one multiplier: u^(d-2s) : L^s -> L^(d-s) has full
// rank for every s up to the middle.
template <class F>
LefschetzReport<F> strong_lefschetz(const F& field, const GradedAlgebra<F>& A,
                                    const LocalModule<F>& L, int d,
                                    const std::vector<typename F::Element>& u) {
    LefschetzReport<F> rep;
    for (int s = 0; 2 * s <= d; ++s) {
        MapOutcome<F> o;
        o.s = s;
        o.w = d - 2 * s;
        o.expected = std::min(L.dim(s), L.dim(d - s));
        Mat<F> M = power_map(A, L, s, o.w, u);
        o.rank = rank(field, M);
        o.full = (o.rank == o.expected);
        if (!o.full) {
            auto ker = kernel_basis(field, std::move(M));
            if (!ker.empty()) o.kernel = ker.front();
            rep.holds = false;
        }
        rep.maps.push_back(std::move(o));
    }
    return rep;
}

// Weak property for one multiplier: u : L^s -> L^(s+1) has full rank for
// every s below the top.
template <class F>
LefschetzReport<F> weak_lefschetz(const F& field, const GradedAlgebra<F>& A,
                                  const LocalModule<F>& L, int d,
                                  const std::vector<typename F::Element>& u) {
    LefschetzReport<F> rep;
    for (int s = 0; s < d; ++s) {
        MapOutcome<F> o;
        o.s = s;
        o.w = 1;
        o.expected = std::min(L.dim(s), L.dim(s + 1));
        Mat<F> M = power_map(A, L, s, 1, u);
        o.rank = rank(field, M);
        o.full = (o.rank == o.expected);
        if (!o.full) {
            auto ker = kernel_basis(field, std::move(M));
            if (!ker.empty()) o.kernel = ker.front();
            rep.holds = false;
        }
        rep.maps.push_back(std::move(o));
    }
    return rep;
}

// Expression of a local-module coordinate vector as an interior combination.
template <class F>
MonoCombo<F> combo_of_coords(const F& field, const LocalModule<F>& L, int s,
                             const std::vector<typename F::Element>& v) {
    MonoCombo<F> out;
    for (int b = 0; b < L.dim(s); ++b) {
        if (field.is_zero(v[b])) continue;
        for (const auto& [m, c] : L.expr[s][b]) out.emplace_back(m, field.mul(v[b], c));
    }
    return out;
}

}  // namespace localh

#endif
