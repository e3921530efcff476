#include "zetaquad/gmres.hpp"

#include <cmath>
#include <stdexcept>

namespace zetaquad {

GmresResult gmres(const ApplyFn& apply, const Eigen::VectorXcd& rhs, double tol, int maxit) {
    if (!(tol > 0.0)) throw std::invalid_argument("gmres: tol must be positive");
    const Eigen::Index n = rhs.size();
    GmresResult out;

    const double bnorm = rhs.norm();
    if (bnorm == 0.0) {
        out.x = Eigen::VectorXcd::Zero(n);
        out.converged = true;
        out.residual_history = {0.0};
        return out;
    }

    // Arnoldi with modified Gram-Schmidt, x0 = 0
    std::vector<Eigen::VectorXcd> basis;
    basis.reserve(maxit + 1);
    basis.push_back(rhs / bnorm);

    Eigen::MatrixXcd hess = Eigen::MatrixXcd::Zero(maxit + 1, maxit);
    // Givens rotations for the running least-squares problem
    std::vector<std::complex<double>> cs(maxit), sn(maxit);
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(maxit + 1);
    g(0) = bnorm;

    double rel = 1.0;
    out.residual_history.push_back(rel);
    int k = 0;
    for (; k < maxit; ++k) {
        Eigen::VectorXcd w = apply(basis[k]);
        for (int j = 0; j <= k; ++j) {
            const std::complex<double> hjk = basis[j].dot(w); // conj(v_j) . w
            hess(j, k) = hjk;
            w -= hjk * basis[j];
        }
        const double hkk = w.norm();
        hess(k + 1, k) = hkk;

        // apply previous rotations to the new column
        for (int j = 0; j < k; ++j) {
            const std::complex<double> t = cs[j] * hess(j, k) + sn[j] * hess(j + 1, k);
            hess(j + 1, k) = -std::conj(sn[j]) * hess(j, k) + cs[j] * hess(j + 1, k);
            hess(j, k) = t;
        }
        // new rotation annihilating hess(k+1, k)
        {
            const std::complex<double> a = hess(k, k);
            const double b = hkk;
            const double denom = std::sqrt(std::norm(a) + b * b);
            if (denom == 0.0) { cs[k] = 1.0; sn[k] = 0.0; }
            else { cs[k] = std::abs(a) / denom;
                   sn[k] = (std::abs(a) == 0.0 ? std::complex<double>(b / denom)
                                               : (a / std::abs(a)) * (b / denom)); }
            hess(k, k) = cs[k] * a + sn[k] * b;
            hess(k + 1, k) = 0.0;
            const std::complex<double> t = cs[k] * g(k);
            g(k + 1) = -std::conj(sn[k]) * g(k);
            g(k) = t;
        }
        rel = std::min(rel, std::abs(g(k + 1)) / bnorm); // history stays nonincreasing
        out.residual_history.push_back(rel);

        if (std::abs(g(k + 1)) / bnorm <= tol) { ++k; out.converged = true; break; }
        if (hkk == 0.0) { ++k; out.converged = true; break; } // exact breakdown: solution found
        basis.push_back(w / hkk);
    }

    // back substitution on the k x k triangular system
    Eigen::VectorXcd ycoef = Eigen::VectorXcd::Zero(k);
    for (int i = k - 1; i >= 0; --i) {
        std::complex<double> s = g(i);
        for (int j = i + 1; j < k; ++j) s -= hess(i, j) * ycoef(j);
        ycoef(i) = s / hess(i, i);
    }
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
    for (int j = 0; j < k; ++j) x += ycoef(j) * basis[j];

    out.x = std::move(x);
    out.iterations = k;
    return out;
}

} // namespace zetaquad
