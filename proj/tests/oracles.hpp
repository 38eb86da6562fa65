#pragma once

#include <vpdlr/grid.hpp>
#include <vpdlr/lowrank.hpp>

#include <cmath>

namespace testing_util {

using namespace vpdlr;

// Petrov-Galerkin projections of D[f] assembled on the full tensor grid.
struct brute_force {
    MatrixXd Kdot, Sdot, Ldot;
};

inline brute_force project_full(const lowrank_state& s, const VectorXd& E) {
    const discretization& d = *s.disc;
    const MatrixXd F = evaluate_full(s);
    const MatrixXd Fx = spectral_derivative_cols(d.xgrid, F);
    const MatrixXd Fv = velocity_derivative(d, F.transpose()).transpose();
    const MatrixXd Df = -Fx * d.v.asDiagonal() + E.asDiagonal() * Fv;
    const double hx = d.xgrid.spacing(), hv = d.vgrid.spacing();
    brute_force b;
    b.Kdot = hv * Df * s.V;
    b.Sdot = hx * hv * s.X.transpose() * Df * s.V;
    const MatrixXd P = hx * Df.transpose() * s.X;
    const MatrixXd full = (d.weight.f0v.cwiseInverse().asDiagonal() * P - s.V * b.Sdot.transpose()) * s.S;
    b.Ldot = full.rightCols(s.r() - s.m());
    return b;
}

// Largest column norm in the f0v-weighted v inner product; the 1/f0v of the
// test space makes pointwise comparison meaningless in the far tails.
inline double weighted_norm(const MatrixXd& A, const VectorXd& w) {
    return A.size() ? std::sqrt((w.asDiagonal() * A.cwiseProduct(A)).colwise().sum().maxCoeff()) : 0.0;
}

} // namespace testing_util
