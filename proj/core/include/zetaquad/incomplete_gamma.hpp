#pragma once

#include <array>
#include <cstddef>

namespace zetaquad {

/// g(s,x) = Gamma(s, pi*x) * (pi*x)^(-s) = \int_1^inf t^(s-1) e^(-pi*x*t) dt.
///
/// The half-integer values are reached from a single erfc evaluation through
/// the recurrences
///   g(s+1,x) = (s g(s,x) + e^(-pi x)) / (pi x)
///   g(s,x)   = (g(s+1,x) pi x - e^(-pi x)) / s      (downward)
/// General real s falls back to panel Gauss-Legendre quadrature of the
/// defining integral.
double g_scaled(double s, double x);

/// All half-integer values g(-1/2 + k, x), k = 0..6, plus e^(-pi x),
/// obtained from exactly one erfc evaluation. This ladder covers every
/// gamma value needed by Z(+-1), Z_{A,B}(1) and the parametric derivative
/// chains with companions.
struct HalfIntegerLadder {
    std::array<double, 7> g; // g[k] = g(-1/2 + k, x)
    double exp_term;         // e^(-pi x)

    double at(double s) const; // s must be one of -1/2 + k
};

HalfIntegerLadder half_integer_ladder(double x);

/// Chains g(s1 + j, x), g(s2 + j, x) for j = 0..kmax with s2 = 1 - s1.
/// s1 is restricted to {1/2, -1/2}, the two bases needed for s = 1 and
/// s = -1; exactly one erfc evaluation is performed.
struct GammaChain {
    std::array<double, 5> g1; // g(s1 + j, x)
    std::array<double, 5> g2; // g(s2 + j, x)
    int kmax;
};

GammaChain gamma_chain(double s1, double x, int kmax);

/// Chains for arbitrary real s1 (quadrature-based bases, then upward
/// recurrence). Used by the general-s zeta evaluations.
GammaChain gamma_chain_general(double s1, double x, int kmax);

} // namespace zetaquad
