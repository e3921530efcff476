#pragma once

#include "zetaquad/kernels.hpp"
#include "zetaquad/l_coeffs.hpp"
#include "zetaquad/stencil.hpp"
#include "zetaquad/surface.hpp"
#include "zetaquad/zeta_derivs.hpp"

namespace zetaquad {

/// The six limiting error components fitted by the 9-point moment system.
/// Real for Laplace kernels; the Helmholtz wavenumber shifts enter D0 only.
struct DQuantities {
    std::array<Complex, 6> d{}; // D0..D5
    int order = 5;              // 3 or 5
    KernelSpec kernel;

    Complex operator[](std::size_t i) const { return d[i]; }
};

/// O(h^3) diagonal correction weight. Supports anisotropic spacings via the
/// rescaled form A~ = [E h1/h2, F; F, G h2/h1] (and the same rescale of the
/// companion form). The emitted weight multiplies sigma * J / (4 pi) at the
/// singular node, for every kernel.
Complex tau_oh3(const KernelSpec& spec, const SurfaceJet& jet, double h1, double h2,
                const ZetaOptions& opts = {});

/// D0..D5 for the O(h^5) nine-point rule (isotropic grid required).
/// Follows the kernel-expansion conventions: single layer and its normal
/// gradient expand the smooth part P = sigma*J; the double layer folds the
/// Jacobian into the kernel so its weights multiply sigma alone.
DQuantities d_quantities(const KernelSpec& spec, const SurfaceJet& jet, double h,
                         const ZetaOptions& opts = {});

/// As above but with a precomputed zeta table (weight batching path).
DQuantities d_quantities(const KernelSpec& spec, const LCoeffs& lc, const NodeZetaTable& tbl,
                         double h);

/// Closed-form solve of the nine-point moment system:
///   tau_00 = D0 - D3 - D4,  tau_{+-1,0} = (D3 +- D1)/2,
///   tau_{0,+-1} = (D4 +- D2)/2,
///   tau_{1,1} = tau_{-1,-1} = -tau_{1,-1} = -tau_{-1,1} = D5/4.
CorrectionStencil solve_stencil(const DQuantities& d);

/// Dense numeric solve of the printed 9x9 moment system; cross-validation
/// oracle for solve_stencil.
CorrectionStencil solve_stencil_numeric(const DQuantities& d);

/// Per-node stencil for either order. Order 3 yields the single diagonal
/// weight U_1 = {(0,0)}; order 5 the nine-point U_2 stencil. Paper weight
/// convention (see d_quantities); operator assembly applies the Jacobian
/// and 1/(4 pi) placement.
CorrectionStencil node_stencil(const KernelSpec& spec, const SurfaceJet& jet, double h1,
                               double h2, int order, const ZetaOptions& opts = {});

} // namespace zetaquad
