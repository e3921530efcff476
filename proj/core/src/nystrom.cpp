#include "zetaquad/nystrom.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zetaquad {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Mode { LapSLP, LapDLP, LapSLPn, HelmSLP, HelmDLP, HelmSLPn, HelmDLPplusSLP, Generic };

Mode classify(const std::vector<KernelComponent>& comps) {
    if (comps.size() == 1) {
        const auto& c = comps[0];
        if (c.spec.equation == Equation::Laplace) {
            switch (c.spec.layer) {
            case Layer::SingleLayer: return Mode::LapSLP;
            case Layer::DoubleLayer: return Mode::LapDLP;
            case Layer::SingleLayerNormalGrad: return Mode::LapSLPn;
            }
        }
        switch (c.spec.layer) {
        case Layer::SingleLayer: return Mode::HelmSLP;
        case Layer::DoubleLayer: return Mode::HelmDLP;
        case Layer::SingleLayerNormalGrad: return Mode::HelmSLPn;
        }
    }
    if (comps.size() == 2 && comps[0].spec.equation == Equation::Helmholtz &&
        comps[1].spec.equation == Equation::Helmholtz &&
        comps[0].spec.kappa == comps[1].spec.kappa &&
        comps[0].spec.layer == Layer::DoubleLayer && comps[1].spec.layer == Layer::SingleLayer &&
        comps[0].coefficient == Complex(1.0, 0.0))
        return Mode::HelmDLPplusSLP;
    return Mode::Generic;
}

} // namespace

NystromOperator::NystromOperator(std::shared_ptr<const TorusGrid> grid,
                                 std::vector<KernelComponent> components, int order,
                                 bool corrections, const ZetaOptions& opts)
    : grid_(std::move(grid)), components_(std::move(components)), order_(order),
      corrections_(corrections) {
    if (components_.empty()) throw std::invalid_argument("NystromOperator: no kernel components");
    for (auto& c : components_) c.spec.validate();
    if (order_ != 3 && order_ != 5) throw std::invalid_argument("NystromOperator: order must be 3 or 5");
    if (order_ == 5 && !grid_->isotropic())
        throw std::invalid_argument("NystromOperator: order 5 requires an isotropic grid");
    const int k = (order_ == 5) ? 2 : 1;
    if (grid_->nu() < 2 * k + 1 || grid_->nv() < 2 * k + 1)
        throw std::invalid_argument("NystromOperator: grid too coarse for the stencil");
    if (corrections_) build_stencils(opts);
}

void NystromOperator::build_stencils(const ZetaOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = grid_->size();
    if (order_ == 5)
        offsets_ = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    else
        offsets_ = {{0, 0}};
    stencil_entries_.assign(n, {});
    const double h1 = grid_->h1(), h2 = grid_->h2();

#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
        const SurfaceJet& jet = grid_->jet(i);
        std::vector<Complex> entries(offsets_.size(), Complex(0.0, 0.0));
        if (order_ == 5) {
            const LCoeffs lc = l_coeffs(jet);
            const NodeZetaTable tbl = node_zeta_table(jet.first_form(), opts);
            for (const KernelComponent& comp : components_) {
                const CorrectionStencil st = solve_stencil(d_quantities(comp.spec, lc, tbl, h1));
                const bool dlp = comp.spec.layer == Layer::DoubleLayer;
                for (std::size_t k = 0; k < offsets_.size(); ++k) {
                    // double-layer weights multiply sigma alone; the others
                    // multiply sigma * J of the neighbor node
                    Complex e = comp.coefficient * st.weights[k] / (4.0 * kPi);
                    if (!dlp) {
                        const int iu = i / grid_->nv(), iv = i % grid_->nv();
                        const int nbr = grid_->index(iu + offsets_[k].first, iv + offsets_[k].second);
                        e *= grid_->jacobian()[nbr];
                    }
                    entries[k] += e;
                }
            }
        } else {
            for (const KernelComponent& comp : components_) {
                const Complex tau = tau_oh3(comp.spec, jet, h1, h2, opts);
                entries[0] += comp.coefficient * tau * jet.jac / (4.0 * kPi);
            }
        }
        stencil_entries_[i] = std::move(entries);
    }
    weight_seconds_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void NystromOperator::apply_row_range(int begin, int end, const Complex* density,
                                      Complex* out) const {
    const int n = grid_->size();
    const double* X = grid_->x().data();
    const double* Y = grid_->y().data();
    const double* Z = grid_->z().data();
    const double* NX = grid_->nx().data();
    const double* NY = grid_->ny().data();
    const double* NZ = grid_->nz().data();
    const double* J = grid_->jacobian().data();
    const double scale = grid_->h1() * grid_->h2() / (4.0 * kPi);
    const Mode mode = classify(components_);
    const Complex coeff0 = components_[0].coefficient;
    const Complex kappa = components_[0].spec.kappa;
    const double kr = kappa.real(), ki = kappa.imag();

    for (int i = begin; i < end; ++i) {
        const double xi = X[i], yi = Y[i], zi = Z[i];
        double acc_re = 0.0, acc_im = 0.0;
        switch (mode) {
        case Mode::LapSLP: {
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double dx = xi - X[j], dy = yi - Y[j], dz = zi - Z[j];
                const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
                const double k = J[j] / r;
                acc_re += k * density[j].real();
                acc_im += k * density[j].imag();
            }
            break;
        }
        case Mode::LapDLP: {
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double dx = xi - X[j], dy = yi - Y[j], dz = zi - Z[j];
                const double r2 = dx * dx + dy * dy + dz * dz;
                const double r = std::sqrt(r2);
                const double dn = dx * NX[j] + dy * NY[j] + dz * NZ[j];
                const double k = dn * J[j] / (r2 * r);
                acc_re += k * density[j].real();
                acc_im += k * density[j].imag();
            }
            break;
        }
        case Mode::LapSLPn: {
            const double nxi = NX[i], nyi = NY[i], nzi = NZ[i];
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double dx = xi - X[j], dy = yi - Y[j], dz = zi - Z[j];
                const double r2 = dx * dx + dy * dy + dz * dz;
                const double r = std::sqrt(r2);
                const double dn = -(dx * nxi + dy * nyi + dz * nzi);
                const double k = dn * J[j] / (r2 * r);
                acc_re += k * density[j].real();
                acc_im += k * density[j].imag();
            }
            break;
        }
        case Mode::HelmSLP: {
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double dx = xi - X[j], dy = yi - Y[j], dz = zi - Z[j];
                const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
                const double damp = std::exp(-ki * r) * J[j] / r;
                const double pr = damp * std::cos(kr * r), pi_ = damp * std::sin(kr * r);
                const double sr = density[j].real(), si = density[j].imag();
                acc_re += pr * sr - pi_ * si;
                acc_im += pr * si + pi_ * sr;
            }
            break;
        }
        case Mode::HelmDLP:
        case Mode::HelmSLPn: {
            const bool slpn = (mode == Mode::HelmSLPn);
            const double nxi = NX[i], nyi = NY[i], nzi = NZ[i];
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double dx = xi - X[j], dy = yi - Y[j], dz = zi - Z[j];
                const double r2 = dx * dx + dy * dy + dz * dz;
                const double r = std::sqrt(r2);
                const double dn = slpn ? -(dx * nxi + dy * nyi + dz * nzi)
                                       : (dx * NX[j] + dy * NY[j] + dz * NZ[j]);
                // e^{i kappa r} (1 - i kappa r) dn J / r^3
                const double damp = std::exp(-ki * r) * dn * J[j] / (r2 * r);
                const double c = std::cos(kr * r), s = std::sin(kr * r);
                // (1 - i kappa r) = (1 + ki r) - i kr r
                const double ar = 1.0 + ki * r, ai = -kr * r;
                const double pr = damp * (c * ar - s * ai), pi_ = damp * (c * ai + s * ar);
                const double sr = density[j].real(), si = density[j].imag();
                acc_re += pr * sr - pi_ * si;
                acc_im += pr * si + pi_ * sr;
            }
            break;
        }
        case Mode::HelmDLPplusSLP: {
            const Complex c1 = components_[1].coefficient; // SLP coefficient
            const double c1r = c1.real(), c1i = c1.imag();
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double dx = xi - X[j], dy = yi - Y[j], dz = zi - Z[j];
                const double r2 = dx * dx + dy * dy + dz * dz;
                const double r = std::sqrt(r2);
                const double dn = dx * NX[j] + dy * NY[j] + dz * NZ[j];
                const double damp = std::exp(-ki * r) * J[j] / r;
                const double c = std::cos(kr * r), s = std::sin(kr * r);
                // phase/r * [ (1 - i kappa r) dn / r^2 + c1 ]
                const double q = dn / r2;
                const double ar = (1.0 + ki * r) * q + c1r, ai = -kr * r * q + c1i;
                const double pr = damp * (c * ar - s * ai), pi_ = damp * (c * ai + s * ar);
                const double sr = density[j].real(), si = density[j].imag();
                acc_re += pr * sr - pi_ * si;
                acc_im += pr * si + pi_ * sr;
            }
            break;
        }
        case Mode::Generic: {
            Complex acc{0.0, 0.0};
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex k{0.0, 0.0};
                for (const auto& comp : components_)
                    k += comp.coefficient * kernel_eval(comp.spec, grid_->jet(i), grid_->jet(j),
                                                        1.0, 1.0);
                acc += k * density[j];
            }
            // kernel_eval already includes 1/(4 pi); undo the shared scale
            acc_re = acc.real() * 4.0 * kPi;
            acc_im = acc.imag() * 4.0 * kPi;
            break;
        }
        }
        Complex total{acc_re * scale, acc_im * scale};
        if (mode == Mode::LapDLP || mode == Mode::LapSLP || mode == Mode::LapSLPn)
            total *= coeff0;
        else if (mode == Mode::HelmSLP || mode == Mode::HelmDLP || mode == Mode::HelmSLPn)
            total *= coeff0;
        if (corrections_) {
            const auto& entries = stencil_entries_[i];
            const int iu = i / grid_->nv(), iv = i % grid_->nv();
            for (std::size_t k = 0; k < offsets_.size(); ++k) {
                const int nbr = grid_->index(iu + offsets_[k].first, iv + offsets_[k].second);
                total += entries[k] * density[nbr];
            }
        }
        out[i] = total;
    }
}

CVector NystromOperator::apply(const CVector& density) const {
    if (density.size() != grid_->size())
        throw std::invalid_argument("NystromOperator::apply: density length mismatch");
    CVector out(density.size());
    const int n = grid_->size();
#ifdef _OPENMP
#pragma omp parallel
    {
        const int nt = omp_get_num_threads();
        const int tid = omp_get_thread_num();
        const int chunk = (n + nt - 1) / nt;
        const int b = std::min(n, tid * chunk), e = std::min(n, b + chunk);
        if (b < e) apply_row_range(b, e, density.data(), out.data());
    }
#else
    apply_row_range(0, n, density.data(), out.data());
#endif
    return out;
}

CMatrix NystromOperator::dense(int dense_limit) const {
    const int n = grid_->size();
    if (n > dense_limit)
        throw std::invalid_argument("NystromOperator::dense: grid exceeds dense assembly limit");
    CMatrix K = CMatrix::Zero(n, n);
    const double h1 = grid_->h1(), h2 = grid_->h2();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Complex k{0.0, 0.0};
            for (const auto& comp : components_)
                k += comp.coefficient * kernel_eval(comp.spec, grid_->jet(i), grid_->jet(j), h1, h2);
            K(i, j) = k;
        }
        if (corrections_) {
            const auto& entries = stencil_entries_[i];
            const int iu = i / grid_->nv(), iv = i % grid_->nv();
            for (std::size_t k = 0; k < offsets_.size(); ++k) {
                const int nbr = grid_->index(iu + offsets_[k].first, iv + offsets_[k].second);
                K(i, nbr) += entries[k];
            }
        }
    }
    return K;
}

OffSurfaceEval eval_offsurface(const TorusGrid& grid, const std::vector<KernelComponent>& comps,
                               const CVector& density, const Vec3& target) {
    if (density.size() != grid.size())
        throw std::invalid_argument("eval_offsurface: density length mismatch");
    const int n = grid.size();
    const double h1 = grid.h1(), h2 = grid.h2();
    Complex acc{0.0, 0.0};
    double min_r2 = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        const SurfaceJet& src = grid.jet(j);
        const Vec3 d = target - src.r;
        const double r2 = d.squaredNorm();
        min_r2 = std::min(min_r2, r2);
        Complex k{0.0, 0.0};
        for (const auto& comp : comps) {
            switch (comp.spec.layer) {
            case Layer::SingleLayer:
                k += comp.coefficient * fundamental_solution(target, src.r, comp.spec.helmholtz()
                                                                                ? comp.spec.kappa
                                                                                : Complex(0, 0));
                break;
            case Layer::DoubleLayer: {
                // d/dn_y Phi(x, y) = -n_y . grad_x Phi
                const Eigen::Vector3cd g = fundamental_solution_grad_x(
                    target, src.r, comp.spec.helmholtz() ? comp.spec.kappa : Complex(0, 0));
                const Complex gn = g(0) * src.n(0) + g(1) * src.n(1) + g(2) * src.n(2);
                k += comp.coefficient * (-gn);
                break;
            }
            case Layer::SingleLayerNormalGrad:
                throw std::invalid_argument(
                    "eval_offsurface: target-normal kernels are surface-bound");
            }
        }
        acc += k * density[j] * src.jac * h1 * h2;
    }
    OffSurfaceEval out;
    out.value = acc;
    const double hmax = std::max(h1, h2);
    out.near_surface_warning = std::sqrt(min_r2) < 5.0 * hmax;
    return out;
}

} // namespace zetaquad
