#ifndef LOCALH_PIPELINE_HPP
#define LOCALH_PIPELINE_HPP

#include <cstdint>
#include <vector>

#include "localh/algebra.hpp"
#include "localh/bilinear.hpp"
#include "localh/complex.hpp"
#include "localh/fields.hpp"
#include "localh/lsop.hpp"
#include "localh/orientation.hpp"
#include "localh/util.hpp"

namespace localh {

/*
 * Everything needed to study the local face module of one triangulation over
 * one field: certified parameters, the artinian reduction of the face ring
 * (built one degree past the top so vanishing there is verified, not
 * assumed), the local module, and optionally the coned-sphere algebra with
 * its degree functional for the pairing.
 */
template <class F>
struct ModuleBundle {
    Triangulation t;
    F field;
    int attempts_used = 0;
    Mat<F> theta;
    GradedAlgebra<F> A;
    LocalModule<F> L;

    bool has_hat = false;
    ConedSphere hat;
    Mat<F> theta_hat;
    GradedAlgebra<F> Ahat;
    Orientation orientation;
    DegreeFn<F> degfn;
};

struct PipelineOptions {
    bool need_hat = true;
    int max_attempts = 8;
};

template <class F>
ModuleBundle<F> build_bundle(const F& field, const Triangulation& t, std::uint64_t seed,
                             PipelineOptions opt = {}) {
    const int d = t.d;
    std::vector<std::int64_t> expect_h = h_vector(t.cx.faces, d).coeffs(d);
    std::vector<std::int64_t> expect_l = local_h(t).coeffs(d);
    ConedSphere hat;
    Orientation orientation;
    std::vector<std::int64_t> expect_hat;
    if (opt.need_hat) {
        hat = cone_sphere(t);
        orientation = orient(hat.cx);
        expect_hat = h_vector(hat.cx.faces, d).coeffs(d);
    }
    std::vector<Mask> interior = interior_faces(t);

    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        Mat<F> theta = sample_special_lsop(field, t, rng);
        if (!lsop_certificate(field, t.cx, theta)) continue;

        GradedAlgebra<F> A = build_graded_algebra(field, t.cx, theta, d + 1);
        bool ok = (A.hilbert[d + 1] == 0);
        for (int s = 0; ok && s <= d; ++s) ok = (A.hilbert[s] == expect_h[s]);
        if (!ok) continue;

        LocalModule<F> L = build_local_module(A, interior);
        ok = (L.hilbert[d + 1] == 0);
        for (int s = 0; ok && s <= d; ++s) ok = (L.hilbert[s] == expect_l[s]);
        if (!ok) continue;

        ModuleBundle<F> bundle;
        bundle.t = t;
        bundle.field = field;
        bundle.attempts_used = attempt + 1;
        bundle.theta = theta;

        if (opt.need_hat) {
            Mat<F> theta_hat = extend_to_cone(field, theta);
            if (!lsop_certificate(field, hat.cx, theta_hat)) continue;
            GradedAlgebra<F> Ahat = build_graded_algebra(field, hat.cx, theta_hat, d + 1);
            ok = (Ahat.hilbert[d + 1] == 0);
            for (int s = 0; ok && s <= d; ++s) ok = (Ahat.hilbert[s] == expect_hat[s]);
            if (!ok) continue;
            bundle.has_hat = true;
            bundle.hat = hat;
            bundle.theta_hat = std::move(theta_hat);
            bundle.Ahat = std::move(Ahat);
            bundle.orientation = orientation;
            bundle.degfn = build_degree_functional(bundle.Ahat, orientation, bundle.theta_hat, d);
        }
        bundle.A = std::move(A);
        bundle.L = std::move(L);
        return bundle;
    }
    throw input_error(
        "could not certify a special parameter system over this field; "
        "try a larger extension or another seed");
}

/*
 * Relative variant: the link of a face E carries the quotient parameters and
 * the relative local module, graded up to d - |E|.
 */
template <class F>
struct RelativeBundle {
    Mask E = 0;
    LinkComplex lk;
    int top = 0;  // d - |E|
    int attempts_used = 0;
    Mat<F> theta;
    GradedAlgebra<F> A;
    LocalModule<F> L;
};

template <class F>
RelativeBundle<F> build_relative_bundle(const F& field, const Triangulation& t, Mask E,
                                        std::uint64_t seed, int max_attempts = 8) {
    LinkComplex lk = link(t, E);
    const int top = t.d - popcount64(E);
    std::vector<std::int64_t> expect_h = h_vector(lk.cx.faces, top).coeffs(top);
    std::vector<std::int64_t> expect_l = relative_local_h(t, E).coeffs(top);
    std::vector<Mask> interior;
    for (std::size_t fi = 0; fi < lk.cx.faces.size(); ++fi)
        if (lk.sigma[fi] == t.full()) interior.push_back(lk.cx.faces[fi]);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng(mix_seed(seed, 0x52454Cull ^ static_cast<std::uint64_t>(attempt)));
        Mat<F> theta = sample_relative_lsop(field, t, lk, rng);
        if (!lsop_certificate(field, lk.cx, theta)) continue;

        GradedAlgebra<F> A = build_graded_algebra(field, lk.cx, theta, top + 1);
        bool ok = (A.hilbert[top + 1] == 0);
        for (int s = 0; ok && s <= top; ++s) ok = (A.hilbert[s] == expect_h[s]);
        if (!ok) continue;

        LocalModule<F> L = build_local_module(A, interior);
        ok = (L.hilbert[top + 1] == 0);
        for (int s = 0; ok && s <= top; ++s) ok = (L.hilbert[s] == expect_l[s]);
        if (!ok) continue;

        RelativeBundle<F> bundle;
        bundle.E = E;
        bundle.lk = std::move(lk);
        bundle.top = top;
        bundle.attempts_used = attempt + 1;
        bundle.theta = std::move(theta);
        bundle.A = std::move(A);
        bundle.L = std::move(L);
        return bundle;
    }
    throw input_error(
        "could not certify relative parameters over this field; "
        "try a larger extension or another seed");
}

}  // namespace localh

#endif
