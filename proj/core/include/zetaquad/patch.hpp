#pragma once

#include "zetaquad/kernels.hpp"
#include "zetaquad/surface.hpp"
#include "zetaquad/weights.hpp"

namespace zetaquad {

/// The compactly supported test density
///   sigma(u,v) = -(a cos(a+u) + b sin(b+v)) exp(-c (u^2+v^2)^4);
/// with c = 640 the support fits well inside [-1,1]^2.
struct PatchDensity {
    double a = 0.809;
    double b = -0.221;
    double c = 640.0;

    double operator()(double u, double v) const;
};

/// Corrected-rule value of the layer potential at the patch center node
/// over the [-1,1]^2 patch with n_per_side intervals per direction
/// (n_per_side even so (0,0) is a node). order: 0 disables corrections
/// (punctured baseline), 3 and 5 select the corrected rules.
Complex patch_quadrature(const QuarticPatch& patch, const KernelSpec& spec, int order,
                         int n_per_side, const PatchDensity& density = {},
                         const ZetaOptions& opts = {});

} // namespace zetaquad
