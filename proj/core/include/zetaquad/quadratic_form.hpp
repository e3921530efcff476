#pragma once

#include <cmath>
#include <stdexcept>

namespace zetaquad {

/// Positive definite binary quadratic form Q(u,v) = E u^2 + 2F uv + G v^2.
/// E, F, G are the first-fundamental-form coefficients of a surface node;
/// every lattice sum in this library is an evaluation over such a form.
class QuadraticForm {
public:
    QuadraticForm(double E, double F, double G) : E_(E), F_(F), G_(G) {
        if (!(E > 0.0) || !(G > 0.0))
            throw std::invalid_argument("QuadraticForm: E and G must be positive");
        if (!(E * G - F * F > 0.0))
            throw std::invalid_argument("QuadraticForm: EG - F^2 must be positive");
    }

    double E() const { return E_; }
    double F() const { return F_; }
    double G() const { return G_; }

    /// det [E F; F G]
    double det() const { return E_ * G_ - F_ * F_; }

    double operator()(double u, double v) const {
        return E_ * u * u + 2.0 * F_ * u * v + G_ * v * v;
    }

    /// Smaller eigenvalue of the unit-determinant rescale A/sqrt(det A).
    /// Controls how many lattice points the truncated theta sums need.
    double lambda_min() const {
        const double d = std::sqrt(det());
        return ((E_ + G_) / 2.0 - std::sqrt((E_ - G_) * (E_ - G_) + 4.0 * F_ * F_) / 2.0) / d;
    }

    /// The form scaled to unit determinant.
    QuadraticForm scaled() const {
        const double d = std::sqrt(det());
        return QuadraticForm(E_ / d, F_ / d, G_ / d);
    }

    /// c*A (all coefficients multiplied by c > 0).
    QuadraticForm times(double c) const { return QuadraticForm(c * E_, c * F_, c * G_); }

private:
    double E_, F_, G_;
};

/// Direction (L,M,N) of the scalar derivative operator
/// box = L d/dE + M d/dF + N d/dG acting on form-parameter space.
/// Also doubles as the coefficient triple of a companion form
/// Q_B(u,v) = L u^2 + 2M uv + N v^2 (e.g. a second fundamental form).
struct DerivDirection {
    double L = 0.0, M = 0.0, N = 0.0;
};

/// Direction-dependent curvature-like scalars of the Appendix E chains.
/// When (L,M,N) is the second fundamental form of a node, H_D is the mean
/// curvature and K_D the Gaussian curvature.
struct CurvatureScalars {
    double H_D;
    double K_D;
};

inline CurvatureScalars curvature_scalars(const QuadraticForm& q, const DerivDirection& b) {
    const double d = q.det();
    return CurvatureScalars{
        (q.G() * b.L + q.E() * b.N - 2.0 * q.F() * b.M) / (2.0 * d),
        (b.L * b.N - b.M * b.M) / d,
    };
}

} // namespace zetaquad
