#include "zetaquad/surface.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zetaquad {

void SurfaceJet::finalize() {
    const Vec3 cross = ru.cross(rv);
    jac = cross.norm();
    n = cross / jac;
    E = ru.dot(ru);
    F = ru.dot(rv);
    G = rv.dot(rv);
    e2 = n.dot(ruu);
    f2 = n.dot(ruv);
    g2 = n.dot(rvv);
}

TorusSurface::TorusSurface(double major_radius, double minor_radius)
    : R_(major_radius), rho_(minor_radius) {
    if (!(major_radius > minor_radius) || !(minor_radius > 0.0))
        throw std::invalid_argument("TorusSurface: need R > rho > 0");
}

SurfaceJet TorusSurface::jet(double u, double v) const {
    // r = (f(v) cos u, f(v) sin u, rho sin v), f = R + rho cos v; partials
    // separate into f^(b)(v) * trig^(a)(u).
    constexpr double half_pi = std::numbers::pi / 2.0;
    const auto part = [&](int a, int b) -> Vec3 {
        const double fb = (b == 0) ? R_ + rho_ * std::cos(v) : rho_ * std::cos(v + b * half_pi);
        const double zc = (a == 0) ? rho_ * std::sin(v + b * half_pi) : 0.0;
        return Vec3(fb * std::cos(u + a * half_pi), fb * std::sin(u + a * half_pi), zc);
    };
    SurfaceJet j;
    j.r = part(0, 0);
    j.ru = part(1, 0); j.rv = part(0, 1);
    j.ruu = part(2, 0); j.ruv = part(1, 1); j.rvv = part(0, 2);
    j.ruuu = part(3, 0); j.ruuv = part(2, 1); j.ruvv = part(1, 2); j.rvvv = part(0, 3);
    j.ruuuu = part(4, 0); j.ruuuv = part(3, 1); j.ruuvv = part(2, 2);
    j.ruvvv = part(1, 3); j.rvvvv = part(0, 4);
    j.finalize();
    return j;
}

QuarticPatch::QuarticPatch(const std::array<double, 12>& coeffs) : c_(coeffs) {
    for (double c : coeffs)
        if (!std::isfinite(c)) throw std::invalid_argument("QuarticPatch: coefficients must be finite");
}

namespace {
// exponent table matching the documented coefficient order
constexpr std::array<std::pair<int, int>, 12> kPatchExponents = {{
    {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3},
    {4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4},
}};

double fall(int p, int d) {
    double f = 1.0;
    for (int q = 0; q < d; ++q) f *= (p - q);
    return f;
}
} // namespace

double QuarticPatch::z(double u, double v, int du, int dv) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < 12; ++k) {
        const auto [i, j] = kPatchExponents[k];
        if (i < du || j < dv) continue;
        acc += c_[k] * fall(i, du) * fall(j, dv) * std::pow(u, i - du) * std::pow(v, j - dv);
    }
    return acc;
}

SurfaceJet QuarticPatch::jet(double u, double v) const {
    const auto part = [&](int a, int b) -> Vec3 {
        return Vec3(a == 1 && b == 0 ? 1.0 : 0.0, a == 0 && b == 1 ? 1.0 : 0.0, z(u, v, a, b));
    };
    SurfaceJet j;
    j.r = Vec3(u, v, z(u, v, 0, 0));
    j.ru = part(1, 0); j.rv = part(0, 1);
    j.ruu = part(2, 0); j.ruv = part(1, 1); j.rvv = part(0, 2);
    j.ruuu = part(3, 0); j.ruuv = part(2, 1); j.ruvv = part(1, 2); j.rvvv = part(0, 3);
    j.ruuuu = part(4, 0); j.ruuuv = part(3, 1); j.ruuvv = part(2, 2);
    j.ruvvv = part(1, 3); j.rvvvv = part(0, 4);
    j.finalize();
    return j;
}

std::array<double, 12> default_quartic_coeffs() {
    // drawn once from mt19937(7), N(0, 0.5), frozen
    return {0.6232, -0.3350, -0.4640, 0.1707, 0.5485, 0.3652,
            -0.5757, 0.1051, -0.1203, 0.2308, -0.3543, 0.4973};
}

} // namespace zetaquad
