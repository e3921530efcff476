#pragma once

#include "zetaquad/epstein_zeta.hpp"
#include "zetaquad/quadratic_form.hpp"

#include <array>
#include <vector>

namespace zetaquad {

/// Component vector of the vector-valued derivative operator box^(k):
///   k=1: (dE, dF/2, dG)
///   k=2: (dEE, dEF/2, dFF/4, dGF/2, dGG)
///   k=3: (dEEE, dEEF/2, dEFF/4, dFFF/8, dFFG/4, dFGG/2, dGGG)
///   k=4: (dEEEE, dEEEF/2, ..., dFFFF/16, ..., dGGGG)  (9 components)
struct ZetaDerivVector {
    int order = 0;
    std::vector<double> v; // length 2k+1
};

/// box^k Z(s) along (L,M,N); k = 1..4. Fast half-integer ladder path for
/// s in {-1, 1, 3}, generic gamma chains otherwise. s must avoid {0, 2}.
double deriv_scalar(const QuadraticForm& q, const DerivDirection& dir, int k, double s,
                    const ZetaOptions& opts = {});

/// As deriv_scalar but also returns the companion box^k Z(s+2), k <= 1,
/// per the shared-gamma-chain evaluation.
struct ScalarDerivPair {
    double boxk_z;
    double z_plus2;
    double box_z_plus2;
};
ScalarDerivPair deriv_scalar_pair(const QuadraticForm& q, const DerivDirection& dir, int k,
                                  double s, const ZetaOptions& opts = {});

/// box^(k) Z(s) assembled from scalar directional derivatives
/// (5 directions for k=2, 7 for k=3, 9 M^{-1}-combined for k=4).
ZetaDerivVector deriv_vector(const QuadraticForm& q, int k, double s,
                             const ZetaOptions& opts = {});

/// Everything the per-node correction weights need from the zeta module,
/// batched so the lattice/gamma workspace is built once per node:
/// Z(1), Z(-1), box^(1)Z at both, and box^(2..4)Z(-1).
struct NodeZetaTable {
    double z1 = 0.0;
    double zm1 = 0.0;
    std::array<double, 3> box1_z1{};  // (dE, dF/2, dG) of Z(1)
    std::array<double, 3> box1_zm1{}; // same at Z(-1)
    std::array<double, 5> box2_zm1{};
    std::array<double, 7> box3_zm1{};
    std::array<double, 9> box4_zm1{};
};

NodeZetaTable node_zeta_table(const QuadraticForm& q, const ZetaOptions& opts = {});

} // namespace zetaquad
