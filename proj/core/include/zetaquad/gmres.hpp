#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

namespace zetaquad {

using ApplyFn = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

struct GmresResult {
    Eigen::VectorXcd x;
    int iterations = 0;
    std::vector<double> residual_history; // relative residuals, nonincreasing
    bool converged = false;
};

/// Unrestarted GMRES with modified Gram-Schmidt. Stops when the relative
/// residual ||b - Ax|| / ||b|| drops below tol or maxit is reached.
GmresResult gmres(const ApplyFn& apply, const Eigen::VectorXcd& rhs, double tol, int maxit);

} // namespace zetaquad
