#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace zetaquad {

using Offset = std::pair<int, int>;

/// Stencil U_K for the O(h^{2K+1}) rule on a curved surface:
///   U_K = {(mu,nu) : |mu|+|nu| <= K, max(|mu|,|nu|) < K},   |U_K| = 2K(K+1)-3
/// and the flat-space analogue
///   U_K^flat = {(mu,nu) : |mu|+|nu| <= K-1},                |U_K^flat| = 2K(K-1)+1.
struct StencilSets {
    std::vector<Offset> curved;
    std::vector<Offset> flat;
};

StencilSets stencil_sets(int K);

/// Correction weights tau_{mu,nu} on U_K (paper convention: the weight the
/// moment system produces, before any operator-level Jacobian or 1/(4pi)
/// factors). Complex-valued for Helmholtz kernels.
struct CorrectionStencil {
    int order_k = 2; // K; quadrature order is 2K+1
    std::vector<Offset> offsets;
    std::vector<std::complex<double>> weights;

    std::complex<double> weight_at(int mu, int nu) const;
};

} // namespace zetaquad
