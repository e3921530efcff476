#pragma once

#include "zetaquad/surface.hpp"

#include <array>
#include <vector>

namespace zetaquad {

/// Coefficient sequences of the homogeneous polynomials that appear in the
/// kernel expansions at a node. A-family: metric terms 2 d1.d2 (L3),
/// 2 d1.d3 + d2.d2 (L4) and (2 d1.d2)^2 (L6 = L3*L3). B-family: expansion
/// of -r.(ru x rv) (double layer). C-family: expansion of r.n(0) (normal
/// gradient of the single layer). '*' is sequence convolution.
struct LCoeffs {
    std::array<double, 4> l3a;
    std::array<double, 5> l4a;
    std::array<double, 7> l6a; // l3a * l3a

    std::array<double, 3> l2b;
    std::array<double, 4> l3b;
    std::array<double, 5> l4b;
    std::array<double, 7> l6b; // l4a * l2b + l3a * l3b

    std::array<double, 3> l2c;
    std::array<double, 4> l3c;
    std::array<double, 5> l4c;
    std::array<double, 7> l6c; // l4a * l2c + l3a * l3c
};

LCoeffs l_coeffs(const SurfaceJet& jet);

/// Convolution of coefficient sequences (polynomial product).
std::vector<double> conv(const std::vector<double>& a, const std::vector<double>& b);

template <std::size_t P, std::size_t Q>
std::array<double, P + Q - 1> conv(const std::array<double, P>& a, const std::array<double, Q>& b) {
    std::array<double, P + Q - 1> out{};
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < Q; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace zetaquad
