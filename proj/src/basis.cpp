#include <vpdlr/basis.hpp>
#include <vpdlr/errors.hpp>

#include <cmath>
#include <string>

namespace vpdlr {

velocity_weight make_velocity_weight(const periodic_grid& vgrid) {
    velocity_weight w;
    w.vgrid = vgrid;
    const VectorXd v = vgrid.points();
    w.f0v = (-0.5 * v.array().square()).exp().matrix();
    w.dlog_f0v = -v;
    w.w = vgrid.spacing() * w.f0v;
    return w;
}

double weighted_inner_v(const VectorXd& a, const VectorXd& b, const velocity_weight& w) {
    if (a.size() != w.vgrid.n || b.size() != w.vgrid.n)
        throw error(error_kind::invalid_input, "basis", "inner product arguments do not match the velocity grid");
    return (w.w.array() * a.array() * b.array()).sum();
}

MatrixXd gram(const MatrixXd& A, const MatrixXd& B, const VectorXd& w) {
    return A.transpose() * w.asDiagonal() * B;
}

MatrixXd orthonormal_result::T() const {
    MatrixXd t(A.rows() + R.rows(), R.cols());
    t << A, R;
    return t;
}

orthonormal_result weighted_orthonormalize(const MatrixXd& vectors, const VectorXd& w, const MatrixXd& frozen) {
    const Eigen::Index n = vectors.rows(), k = vectors.cols(), m = frozen.cols();
    if (w.size() != n || (m > 0 && frozen.rows() != n))
        throw error(error_kind::invalid_input, "basis", "orthonormalize: size mismatch");
    require_finite(vectors, "basis", "orthonormalize");

    orthonormal_result res;
    res.Q = MatrixXd::Zero(n, k);
    res.A = MatrixXd::Zero(m, k);
    res.R = MatrixXd::Zero(k, k);

    for (Eigen::Index i = 0; i < k; ++i) {
        VectorXd c = vectors.col(i);
        const double lead = std::sqrt((w.array() * c.array().square()).sum());
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index a = 0; a < m; ++a) {
                double p = (w.array() * frozen.col(a).array() * c.array()).sum();
                res.A(a, i) += p;
                c -= p * frozen.col(a);
            }
            for (Eigen::Index j = 0; j < i; ++j) {
                double p = (w.array() * res.Q.col(j).array() * c.array()).sum();
                res.R(j, i) += p;
                c -= p * res.Q.col(j);
            }
        }
        double nrm = std::sqrt((w.array() * c.array().square()).sum());
        if (!(nrm > 1e-12 * lead) || nrm == 0.0)
            throw error(error_kind::degenerate_basis, "basis",
                        "rank deficient input at column " + std::to_string(i), static_cast<int>(i));
        res.R(i, i) = nrm;
        res.Q.col(i) = c / nrm;
    }
    return res;
}

orthonormal_result weighted_orthonormalize(const MatrixXd& vectors, const velocity_weight& w, const fixed_basis& frozen) {
    return weighted_orthonormalize(vectors, w.w, frozen.U);
}

orthonormal_result orthonormalize_x(const MatrixXd& vectors, const periodic_grid& xgrid) {
    return weighted_orthonormalize(vectors, VectorXd::Constant(xgrid.n, xgrid.spacing()), MatrixXd(xgrid.n, 0));
}

MatrixXd orthonormal_completion(const MatrixXd& vectors, const VectorXd& w, const MatrixXd& frozen) {
    const Eigen::Index n = vectors.rows(), m = frozen.cols(), k = vectors.cols();
    require_finite(vectors, "basis", "orthonormal_completion");
    const VectorXd sw = w.array().sqrt();
    MatrixXd B(n, m + k);
    if (m > 0) B.leftCols(m) = frozen;
    B.rightCols(k) = vectors;
    B = sw.asDiagonal() * B;
    Eigen::HouseholderQR<MatrixXd> qr(B);
    MatrixXd Q = qr.householderQ() * MatrixXd::Identity(n, m + k);
    return sw.cwiseInverse().asDiagonal() * Q.rightCols(k);
}

MatrixXd greedy_extend(const MatrixXd& existing, const MatrixXd& candidates, const VectorXd& w, int max_count,
                       double rel_tol) {
    const Eigen::Index n = candidates.rows(), e = existing.cols();
    MatrixXd basis(n, e + max_count);
    if (e > 0) basis.leftCols(e) = existing;
    Eigen::Index have = e;
    for (Eigen::Index c = 0; c < candidates.cols() && have < e + max_count; ++c) {
        VectorXd r = candidates.col(c);
        const double n0 = std::sqrt((w.array() * r.array().square()).sum());
        if (!(n0 > 0.0)) continue;
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index j = 0; j < have; ++j)
                r -= (w.array() * basis.col(j).array() * r.array()).sum() * basis.col(j);
        const double nr = std::sqrt((w.array() * r.array().square()).sum());
        if (nr > rel_tol * n0) basis.col(have++) = r / nr;
    }
    return basis.middleCols(e, have - e);
}

MatrixXd extend_basis(const MatrixXd& existing, const MatrixXd& candidates, const VectorXd& w, int count) {
    MatrixXd q = greedy_extend(existing, candidates, w, count, 1e-8);
    if (q.cols() < count)
        throw error(error_kind::degenerate_basis, "basis", "not enough independent padding candidates",
                    static_cast<int>(existing.cols() + q.cols()));
    return q;
}

fixed_basis_result build_fixed_basis(int m, const velocity_weight& w) {
    if (m < 0 || m > 3)
        throw error(error_kind::invalid_input, "basis", "m must lie in 0..3, got " + std::to_string(m));
    const int nv = w.vgrid.n;
    const VectorXd v = w.vgrid.points();
    MatrixXd raw(nv, 3), draw(nv, 3);
    raw.col(0).setOnes();
    raw.col(1) = v;
    raw.col(2) = (v.array().square() - 1.0).matrix();
    draw.col(0).setZero();
    draw.col(1).setOnes();
    draw.col(2) = 2.0 * v;

    fixed_basis_result out;
    out.norms.norm_one = std::sqrt(weighted_inner_v(raw.col(0), raw.col(0), w));
    out.norms.norm_v = std::sqrt(weighted_inner_v(raw.col(1), raw.col(1), w));
    out.norms.norm_v2m1 = std::sqrt(weighted_inner_v(raw.col(2), raw.col(2), w));

    out.basis.m = m;
    out.basis.U = MatrixXd(nv, 0);
    out.basis.dU = MatrixXd(nv, 0);
    out.basis.R = MatrixXd(0, 0);
    if (m == 0) return out;

    orthonormal_result q = weighted_orthonormalize(raw.leftCols(m), w.w, MatrixXd(nv, 0));
    out.basis.U = q.Q;
    out.basis.R = q.R;
    // raw = U R, so U = raw R^{-1} and the same map applies to derivatives.
    MatrixXd Rinv = q.R.triangularView<Eigen::Upper>().solve(MatrixXd::Identity(m, m));
    out.basis.dU = draw.leftCols(m) * Rinv;
    return out;
}

} // namespace vpdlr
