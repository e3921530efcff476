#include "zetaquad/patch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zetaquad {

namespace {
constexpr double kPi = std::numbers::pi;
}

double PatchDensity::operator()(double u, double v) const {
    const double s = u * u + v * v;
    const double s4 = s * s * s * s;
    return -(a * std::cos(a + u) + b * std::sin(b + v)) * std::exp(-c * s4);
}

Complex patch_quadrature(const QuarticPatch& patch, const KernelSpec& spec, int order,
                         int n_per_side, const PatchDensity& density, const ZetaOptions& opts) {
    spec.validate();
    if (order != 0 && order != 3 && order != 5)
        throw std::domain_error("patch_quadrature: order must be 0 (punctured), 3 or 5");
    if (n_per_side < 8 || n_per_side % 2 != 0)
        throw std::domain_error("patch_quadrature: n_per_side must be even and >= 8");
    const double h = 2.0 / n_per_side;
    const int half = n_per_side / 2;

    const SurfaceJet center = patch.jet(0.0, 0.0);
    const Vec3 x0 = center.r;
    const Vec3 n0 = center.n;
    const bool helm = spec.helmholtz();
    const Complex kap = spec.kappa;

    // punctured sum over the grid on [-1,1]^2; the density support keeps the
    // integrand compactly supported so no boundary treatment is needed
    Complex acc{0.0, 0.0};
    for (int i = -half; i <= half; ++i) {
        for (int j = -half; j <= half; ++j) {
            if (i == 0 && j == 0) continue;
            const double u = i * h, v = j * h;
            const double sig = density(u, v);
            if (sig == 0.0) continue;
            const SurfaceJet jet = patch.jet(u, v);
            const Vec3 d = x0 - jet.r;
            const double r = d.norm();
            Complex phase{1.0, 0.0};
            if (helm) phase = std::exp(Complex(0.0, 1.0) * kap * r);
            Complex k;
            switch (spec.layer) {
            case Layer::SingleLayer:
                k = phase / (4.0 * kPi * r) * jet.jac;
                break;
            case Layer::DoubleLayer: {
                const double dn = d.dot(jet.n);
                k = dn / (4.0 * kPi * r * r * r) * phase * jet.jac;
                if (helm) k *= (1.0 - Complex(0.0, 1.0) * kap * r);
                break;
            }
            default: {
                const double dn = -d.dot(n0);
                k = dn / (4.0 * kPi * r * r * r) * phase * jet.jac;
                if (helm) k *= (1.0 - Complex(0.0, 1.0) * kap * r);
                break;
            }
            }
            acc += k * sig;
        }
    }
    acc *= h * h;
    if (order == 0) return acc;

    const CorrectionStencil st = node_stencil(spec, center, h, h, order, opts);
    const bool dlp5 = (order == 5 && spec.layer == Layer::DoubleLayer);
    for (std::size_t k = 0; k < st.offsets.size(); ++k) {
        const auto [mu, nu] = st.offsets[k];
        const double u = mu * h, v = nu * h;
        const double sig = density(u, v);
        // double-layer order-5 weights multiply sigma alone; everything else
        // multiplies sigma * J at the offset node
        const double jc = dlp5 ? 1.0 : patch.jet(u, v).jac;
        acc += st.weights[k] * sig * jc / (4.0 * kPi);
    }
    return acc;
}

} // namespace zetaquad
