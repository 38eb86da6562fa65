#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <random>

namespace testing_util {

// Composite Simpson rule with n (even) intervals; the independent quadrature
// oracle for truncated-domain integrals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 1000000) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

inline double max_abs(const Eigen::MatrixXd& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

} // namespace testing_util
