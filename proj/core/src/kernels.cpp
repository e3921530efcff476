#include "zetaquad/kernels.hpp"

#include <cmath>
#include <numbers>

namespace zetaquad {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex kernel_eval(const KernelSpec& spec, const SurfaceJet& target, const SurfaceJet& source,
                    double h1, double h2) {
    spec.validate();
    const Vec3 d = target.r - source.r; // x - y
    const double r = d.norm();
    if (!(r > 0.0)) throw std::domain_error("kernel_eval: coincident target and source");
    const double w = source.jac * h1 * h2;
    Complex phase{1.0, 0.0};
    if (spec.helmholtz()) phase = std::exp(Complex(0.0, 1.0) * spec.kappa * r);
    switch (spec.layer) {
    case Layer::SingleLayer:
        return phase * (w / (4.0 * kPi * r));
    case Layer::DoubleLayer: {
        const double dn = d.dot(source.n);
        Complex k = dn / (4.0 * kPi * r * r * r) * phase;
        if (spec.helmholtz()) k *= (1.0 - Complex(0.0, 1.0) * spec.kappa * r);
        return k * w;
    }
    case Layer::SingleLayerNormalGrad: {
        const double dn = -d.dot(target.n);
        Complex k = dn / (4.0 * kPi * r * r * r) * phase;
        if (spec.helmholtz()) k *= (1.0 - Complex(0.0, 1.0) * spec.kappa * r);
        return k * w;
    }
    }
    return {};
}

Complex fundamental_solution(const Vec3& x, const Vec3& y, Complex kappa) {
    const double r = (x - y).norm();
    if (kappa == Complex(0.0, 0.0)) return Complex(1.0 / (4.0 * kPi * r), 0.0);
    return std::exp(Complex(0.0, 1.0) * kappa * r) / (4.0 * kPi * r);
}

Eigen::Vector3cd fundamental_solution_grad_x(const Vec3& x, const Vec3& y, Complex kappa) {
    const Vec3 d = x - y;
    const double r = d.norm();
    if (kappa == Complex(0.0, 0.0))
        return (-d / (4.0 * kPi * r * r * r)).cast<Complex>();
    const Complex factor =
        std::exp(Complex(0.0, 1.0) * kappa * r) * (Complex(0.0, 1.0) * kappa * r - 1.0) /
        (4.0 * kPi * r * r * r);
    return d.cast<Complex>() * factor;
}

} // namespace zetaquad
