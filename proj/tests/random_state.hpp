#pragma once

#include <vpdlr/basis.hpp>
#include <vpdlr/lowrank.hpp>

#include <algorithm>
#include <numbers>
#include <random>

namespace testing_util {

using namespace vpdlr;

// Smooth random orthonormal state: X from low Fourier modes, free V columns
// from random low-degree polynomials, S Gaussian.
inline lowrank_state random_state(std::shared_ptr<const discretization> d, int r, std::mt19937& rng,
                                  int kmax = 5, int degree = 0) {
    degree = std::max(degree, r + 1);
    std::normal_distribution<double> nd;
    const int nx = d->xgrid.n, nv = d->vgrid.n, m = d->m();
    const VectorXd x = d->xgrid.points();
    MatrixXd Xr(nx, r);
    for (int c = 0; c < r; ++c) {
        VectorXd col = VectorXd::Constant(nx, nd(rng));
        for (int k = 1; k <= kmax; ++k) {
            const double kk = 2.0 * std::numbers::pi * k / d->xgrid.length;
            col += nd(rng) * (kk * x.array()).cos().matrix() + nd(rng) * (kk * x.array()).sin().matrix();
        }
        Xr.col(c) = col;
    }
    MatrixXd Vr(nv, r - m);
    for (int c = 0; c < r - m; ++c) {
        VectorXd col = VectorXd::Zero(nv);
        for (int p = 0; p <= degree; ++p) col += nd(rng) * d->v.array().pow(p).matrix() / std::pow(2.0, p);
        Vr.col(c) = col;
    }
    lowrank_state s;
    s.disc = d;
    s.X = orthonormalize_x(Xr, d->xgrid).Q;
    s.V.resize(nv, r);
    if (m > 0) s.V.leftCols(m) = d->fixed.U;
    if (r > m) s.V.rightCols(r - m) = weighted_orthonormalize(Vr, d->weight.w, d->fixed.U).Q;
    s.S.resize(r, r);
    for (int i = 0; i < s.S.size(); ++i) s.S.data()[i] = nd(rng);
    return s;
}

} // namespace testing_util
