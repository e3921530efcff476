#include "zetaquad/incomplete_gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zetaquad {

namespace {

constexpr double kPi = std::numbers::pi;

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824926, 0.0622535239386477, 0.0271524594117540,
};

template <class F> double gl16(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    double acc = 0.0;
    for (int k = 0; k < 8; ++k) {
        const double dx = rad * kGlNodes[k];
        acc += kGlWeights[k] * (f(mid + dx) + f(mid - dx));
    }
    return acc * rad;
}

// g(s,x) = e^{-y}/y * int_0^inf (1 + w/y)^{s-1} e^{-w} dw with y = pi x,
// by geometric Gauss-Legendre panels. Robust for any real s and y > 0.
double g_quadrature(double s, double x) {
    const double y = kPi * x;
    const auto integrand = [&](double w) {
        return std::exp((s - 1.0) * std::log1p(w / y) - w);
    };
    double acc = 0.0;
    double a = 0.0, len = std::min(1.0, y);
    // march panels, doubling length, until contributions vanish
    for (int panel = 0; panel < 200; ++panel) {
        const double b = a + len;
        const double part = gl16(integrand, a, b);
        acc += part;
        a = b;
        len *= 2.0;
        if (a > 5.0 && std::abs(part) < 1e-19 * (std::abs(acc) + 1e-300)) break;
    }
    return std::exp(-y) / y * acc;
}

} // namespace

HalfIntegerLadder half_integer_ladder(double x) {
    if (!(x > 0.0)) throw std::domain_error("half_integer_ladder: x must be positive");
    const double y = kPi * x;
    const double e = std::exp(-y);
    HalfIntegerLadder lad;
    lad.exp_term = e;
    // g(1/2, x) through erfc, then one downward step and upward recurrence
    lad.g[1] = std::sqrt(kPi) * std::erfc(std::sqrt(y)) / std::sqrt(y);
    lad.g[0] = (lad.g[1] * y - e) / (-0.5);
    double s = 0.5;
    for (int k = 2; k < 7; ++k) {
        lad.g[k] = (s * lad.g[k - 1] + e) / y;
        s += 1.0;
    }
    return lad;
}

double HalfIntegerLadder::at(double s) const {
    const double idx = s + 0.5;
    const int k = static_cast<int>(std::lround(idx));
    if (k < 0 || k >= 7 || std::abs(idx - k) > 1e-12)
        throw std::domain_error("HalfIntegerLadder: s outside ladder");
    return g[k];
}

double g_scaled(double s, double x) {
    if (!(x > 0.0)) throw std::domain_error("g_scaled: x must be positive");
    const double idx = s + 0.5;
    const int k = static_cast<int>(std::lround(idx));
    if (k >= 0 && k < 7 && std::abs(idx - k) < 1e-12) return half_integer_ladder(x).g[k];
    return g_quadrature(s, x);
}

GammaChain gamma_chain(double s1, double x, int kmax) {
    if (!(x > 0.0)) throw std::domain_error("gamma_chain: x must be positive");
    if (kmax < 0 || kmax > 4) throw std::domain_error("gamma_chain: kmax must be in 0..4");
    if (s1 != 0.5 && s1 != -0.5)
        throw std::domain_error("gamma_chain: s1 must be +1/2 or -1/2");
    const HalfIntegerLadder lad = half_integer_ladder(x);
    GammaChain out;
    out.kmax = kmax;
    const double s2 = 1.0 - s1;
    for (int j = 0; j <= kmax; ++j) {
        out.g1[j] = lad.at(s1 + j);
        out.g2[j] = lad.at(s2 + j);
    }
    return out;
}

GammaChain gamma_chain_general(double s1, double x, int kmax) {
    if (!(x > 0.0)) throw std::domain_error("gamma_chain_general: x must be positive");
    if (kmax < 0 || kmax > 4) throw std::domain_error("gamma_chain_general: kmax must be in 0..4");
    const double s2 = 1.0 - s1;
    const double y = kPi * x;
    const double e = std::exp(-y);
    GammaChain out;
    out.kmax = kmax;
    out.g1[0] = g_scaled(s1, x);
    out.g2[0] = g_scaled(s2, x);
    for (int j = 1; j <= kmax; ++j) {
        out.g1[j] = ((s1 + j - 1) * out.g1[j - 1] + e) / y;
        out.g2[j] = ((s2 + j - 1) * out.g2[j - 1] + e) / y;
    }
    return out;
}

} // namespace zetaquad
