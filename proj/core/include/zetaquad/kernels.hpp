#pragma once

#include "zetaquad/surface.hpp"

#include <complex>
#include <stdexcept>

namespace zetaquad {

using Complex = std::complex<double>;

enum class Equation { Laplace, Helmholtz };
enum class Layer { SingleLayer, DoubleLayer, SingleLayerNormalGrad };

/// Kernel selector. kappa is meaningful only for Helmholtz and must have a
/// nonnegative imaginary part.
struct KernelSpec {
    Equation equation = Equation::Laplace;
    Layer layer = Layer::SingleLayer;
    Complex kappa{0.0, 0.0};

    void validate() const {
        if (equation == Equation::Helmholtz) {
            if (!std::isfinite(kappa.real()) || !std::isfinite(kappa.imag()))
                throw std::invalid_argument("KernelSpec: kappa must be finite");
            if (kappa.imag() < 0.0)
                throw std::invalid_argument("KernelSpec: Im(kappa) must be nonnegative");
        }
    }

    bool helmholtz() const { return equation == Equation::Helmholtz; }
};

/// Kernel value between distinct nodes times the smooth trapezoidal weight
/// J_src * h1 * h2, i.e. the full off-diagonal Nystrom entry. Includes the
/// 1/(4pi) constant. The double layer differentiates at the source point,
/// the single-layer normal gradient at the target point.
Complex kernel_eval(const KernelSpec& spec, const SurfaceJet& target, const SurfaceJet& source,
                    double h1, double h2);

/// Free-space fundamental solution Phi(x,y) (Laplace for kappa = 0).
Complex fundamental_solution(const Vec3& x, const Vec3& y, Complex kappa);

/// grad_x Phi(x,y).
Eigen::Vector3cd fundamental_solution_grad_x(const Vec3& x, const Vec3& y, Complex kappa);

} // namespace zetaquad
