#pragma once

#include <vpdlr/grid.hpp>

namespace vpdlr {

struct velocity_weight {
    periodic_grid vgrid;
    VectorXd f0v;      // exp(-v^2/2)
    VectorXd dlog_f0v; // -v, stored analytically
    VectorXd w;        // quadrature weights spacing*f0v
};

velocity_weight make_velocity_weight(const periodic_grid& vgrid);

double weighted_inner_v(const VectorXd& a, const VectorXd& b, const velocity_weight& w);

// A^T diag(w) B for quadrature weights w.
MatrixXd gram(const MatrixXd& A, const MatrixXd& B, const VectorXd& w);

struct weighted_norms {
    double norm_one = 0.0;  // |1|
    double norm_v = 0.0;    // |v|
    double norm_v2m1 = 0.0; // |v^2-1|
};

struct fixed_basis {
    int m = 0;
    MatrixXd U;  // nv x m, weighted orthonormal
    MatrixXd dU; // exact v-derivatives of the columns of U
    MatrixXd R;  // {1, v, v^2-1}[:m] = U * R
};

struct fixed_basis_result {
    fixed_basis basis;
    weighted_norms norms;
};

fixed_basis_result build_fixed_basis(int m, const velocity_weight& w);

// Q is orthonormal in diag(w) and orthogonal to `frozen`, with
// vectors = frozen*A + Q*R and R upper triangular. Modified Gram-Schmidt with
// one re-orthogonalization pass.
struct orthonormal_result {
    MatrixXd Q;
    MatrixXd A;
    MatrixXd R;
    // Stacked [A; R] so that vectors = [frozen, Q] * T.
    MatrixXd T() const;
};

orthonormal_result weighted_orthonormalize(const MatrixXd& vectors, const VectorXd& w, const MatrixXd& frozen);
orthonormal_result weighted_orthonormalize(const MatrixXd& vectors, const velocity_weight& w, const fixed_basis& frozen);
// Unit weight in x: w = spacing everywhere.
orthonormal_result orthonormalize_x(const MatrixXd& vectors, const periodic_grid& xgrid);

// Householder QR of [frozen, vectors] scaled by sqrt(w); returns the trailing
// columns. Never fails on rank-deficient input: missing directions are filled
// from the orthogonal complement. frozen must already be orthonormal.
MatrixXd orthonormal_completion(const MatrixXd& vectors, const VectorXd& w, const MatrixXd& frozen);

// Greedy Gram-Schmidt of `candidates` against `existing`: keeps a candidate
// when its remainder exceeds rel_tol times its norm, stops after max_count.
MatrixXd greedy_extend(const MatrixXd& existing, const MatrixXd& candidates, const VectorXd& w, int max_count,
                       double rel_tol);
// As greedy_extend but exactly `count` directions or degenerate-basis.
MatrixXd extend_basis(const MatrixXd& existing, const MatrixXd& candidates, const VectorXd& w, int count);

} // namespace vpdlr
