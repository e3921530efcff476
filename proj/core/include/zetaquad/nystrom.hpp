#pragma once

#include "zetaquad/grid.hpp"
#include "zetaquad/kernels.hpp"
#include "zetaquad/stencil.hpp"
#include "zetaquad/weights.hpp"

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace zetaquad {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// One summand of a (possibly combined-field) boundary integral operator:
/// coefficient * layer potential.
struct KernelComponent {
    Complex coefficient{1.0, 0.0};
    KernelSpec spec;
};

/// Nystrom discretization of a weighted sum of layer potentials on a
/// periodic grid: punctured trapezoidal rule plus local corrections.
/// Off-diagonal action is K(i,j) = sum_c coeff_c * Kernel_c(x_i, x_j) J_j h^2;
/// near the diagonal the precomputed stencil weights (converted so they
/// multiply sigma_j J_j, with the 1/(4 pi) constant folded in) are added.
class NystromOperator {
public:
    /// order: 3 or 5 (5 requires an isotropic grid); corrections can be
    /// disabled to expose the punctured-rule baseline.
    NystromOperator(std::shared_ptr<const TorusGrid> grid,
                    std::vector<KernelComponent> components, int order,
                    bool corrections = true, const ZetaOptions& opts = {});

    const TorusGrid& grid() const { return *grid_; }
    int order() const { return order_; }
    int size() const { return grid_->size(); }
    const std::vector<KernelComponent>& components() const { return components_; }

    /// Matrix-free action on a density vector (parallel over rows).
    CVector apply(const CVector& density) const;

    /// Dense assembly (guarded: N <= dense_limit, default 4096).
    CMatrix dense(int dense_limit = 4096) const;

    /// Stencil weight table, matrix-entry convention (multiplies sigma_j).
    const std::vector<std::vector<Complex>>& stencil_table() const { return stencil_entries_; }
    const std::vector<Offset>& stencil_offsets() const { return offsets_; }

    double weight_build_seconds() const { return weight_seconds_; }

private:
    void build_stencils(const ZetaOptions& opts);
    void apply_row_range(int begin, int end, const Complex* density, Complex* out) const;

    std::shared_ptr<const TorusGrid> grid_;
    std::vector<KernelComponent> components_;
    int order_;
    bool corrections_;
    std::vector<Offset> offsets_;
    // stencil_entries_[node][k] multiplies sigma at node+offsets_[k]
    // (Jacobian of the neighbor and 1/(4 pi) already applied).
    std::vector<std::vector<Complex>> stencil_entries_;
    double weight_seconds_ = 0.0;
};

/// Plain trapezoidal evaluation of the same operator combination at an
/// off-surface point (no corrections needed; spectrally accurate for
/// smooth periodic integrands). Flags targets closer than 5h.
struct OffSurfaceEval {
    Complex value;
    bool near_surface_warning = false;
};
OffSurfaceEval eval_offsurface(const TorusGrid& grid, const std::vector<KernelComponent>& comps,
                               const CVector& density, const Vec3& target);

} // namespace zetaquad
