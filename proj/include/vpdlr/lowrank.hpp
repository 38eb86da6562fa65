#pragma once

#include <vpdlr/basis.hpp>
#include <vpdlr/grid.hpp>

#include <memory>

namespace vpdlr {

// Everything a state needs that does not change in time.
struct discretization {
    periodic_grid xgrid, vgrid;
    velocity_weight weight;
    fixed_basis fixed;
    weighted_norms norms;
    VectorXd v;  // v-grid points
    VectorXd wx; // x quadrature weights (unit weight)
    int m() const { return fixed.m; }
};

std::shared_ptr<const discretization> make_discretization(const periodic_grid& xgrid, const periodic_grid& vgrid, int m);

// f = f0v(v) * sum_ij X_i(x) S_ij V_j(v); columns of X and V are the factors
// and the first m columns of V are the frozen U.
struct lowrank_state {
    std::shared_ptr<const discretization> disc;
    MatrixXd X, S, V;

    int r() const { return static_cast<int>(S.rows()); }
    int m() const { return disc->m(); }
    MatrixXd K() const { return X * S; }
};

// Throws invalid-input on shape mismatch, non-finite data or m > r.
void validate(const lowrank_state& s);

struct coefficient_set {
    MatrixXd c1, c2, d1, d2;
};

struct moment_set {
    VectorXd rho, j, e_kin, sigma; // sigma = int v^2 f dv
};

MatrixXd evaluate_full(const lowrank_state& s);

// Spectral v-derivative of the columns of G (functions f0v*y). The component
// along each frozen U_a is replaced by its exact integration-by-parts value
// -<U_a', y>_v, so the polynomial moments of the derivative are exact.
MatrixXd velocity_derivative(const discretization& d, const MatrixXd& G);

coefficient_set compute_coefficients(const lowrank_state& s, const VectorXd& E);
moment_set moments(const lowrank_state& s);

MatrixXd rhs_K(const lowrank_state& s, const coefficient_set& c, const VectorXd& E);
MatrixXd rhs_S(const lowrank_state& s, const coefficient_set& c);
MatrixXd rhs_L(const lowrank_state& s, const coefficient_set& c);
MatrixXd rhs_L(const lowrank_state& s, const coefficient_set& c, const MatrixXd& Sdot);

// sigma_max/sigma_min of S (infinite when singular).
double condition_number(const MatrixXd& S);

// Largest entry of the X and V Gram matrices minus identity.
double ortho_defect(const lowrank_state& s);
// max |<W_p, U_a>_v|.
double frozen_defect(const lowrank_state& s);
// Largest |V_a - U_a| over the frozen columns (0 when bitwise equal).
double frozen_drift(const lowrank_state& s);

} // namespace vpdlr
