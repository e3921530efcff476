// Batch front end: zeta evaluation, patch convergence studies and BVP
// convergence studies, all emitting CSV with a '#'-prefixed schema header.
//
// Exit codes: 0 success, 2 validation error, 3 order/iteration assertion
// failure, 4 GMRES non-convergence.

#include "zetaquad/bvp.hpp"
#include "zetaquad/convergence.hpp"
#include "zetaquad/epstein_zeta.hpp"
#include "zetaquad/patch.hpp"
#include "zetaquad/zeta_derivs.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace zetaquad;

constexpr int kExitValidation = 2;
constexpr int kExitAssertion = 3;
constexpr int kExitSolver = 4;

std::string fmt(double v, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string fmt(Complex v, int digits = 17) {
    if (v.imag() == 0.0) return fmt(v.real(), digits);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.*g%+.*gi", digits, v.real(), digits, v.imag());
    return buf;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
        os = &file;
    }
    template <class T> Output& operator<<(const T& v) {
        *os << v;
        return *this;
    }
};

Complex parse_kappa(const std::string& s) {
    double re = 0.0, im = 0.0;
    char extra;
    const int got = std::sscanf(s.c_str(), "%lf,%lf%c", &re, &im, &extra);
    if (got == 2) return {re, im};
    if (std::sscanf(s.c_str(), "%lf%c", &re, &extra) == 1) return {re, 0.0};
    throw CLI::ValidationError("--kappa", "expected re or re,im");
}

KernelSpec make_spec(const std::string& equation, const std::string& layer, Complex kappa) {
    KernelSpec spec;
    spec.equation = (equation == "helmholtz") ? Equation::Helmholtz : Equation::Laplace;
    if (layer == "slp") spec.layer = Layer::SingleLayer;
    else if (layer == "dlp") spec.layer = Layer::DoubleLayer;
    else spec.layer = Layer::SingleLayerNormalGrad;
    if (spec.equation == Equation::Helmholtz) spec.kappa = kappa;
    return spec;
}

void set_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

// ---------------------------------------------------------------- zeta ----
struct ZetaArgs {
    double E = 1.0, F = 0.0, G = 1.0, s = 1.0;
    int deriv_order = 0;
    std::vector<double> dir{1.0, 0.0, 0.0};
    bool sweep = false;
    double alpha_min = 0.2, alpha_max = 3.0, beta_min = -1.2, beta_max = 1.2;
    int alpha_n = 21, beta_n = 21;
    std::string out;
    int threads = 0;
};

int run_zeta(const ZetaArgs& a) {
    set_threads(a.threads);
    Output out;
    out.open(a.out);
    if (a.sweep) {
        // landscape data sqrt(E) Z(1) over alpha = G/E, beta = F/E
        out << "# zetaquad zeta-sweep v1\n";
        out << "# columns: alpha,beta,scaled_z1,status\n";
        for (int ia = 0; ia < a.alpha_n; ++ia) {
            const double alpha =
                a.alpha_min + (a.alpha_n > 1 ? ia * (a.alpha_max - a.alpha_min) / (a.alpha_n - 1) : 0.0);
            for (int ib = 0; ib < a.beta_n; ++ib) {
                const double beta =
                    a.beta_min + (a.beta_n > 1 ? ib * (a.beta_max - a.beta_min) / (a.beta_n - 1) : 0.0);
                std::string status = "ok";
                std::string value = "";
                if (alpha - beta * beta <= 1e-12) {
                    status = "singular";
                } else {
                    try {
                        const QuadraticForm q(1.0, beta, alpha);
                        value = fmt(zeta_s1(q), 16);
                    } catch (const std::exception&) {
                        status = "near-singular";
                    }
                }
                out << fmt(alpha, 16) << "," << fmt(beta, 16) << "," << value << "," << status
                    << "\n";
            }
        }
        return 0;
    }
    if (a.s == 2.0) {
        std::cerr << "zeta: pole at s = 2\n";
        return kExitValidation;
    }
    QuadraticForm q(a.E, a.F, a.G);
    out << "# zetaquad zeta v1\n";
    out << "# columns: quantity,value\n";
    const ZetaPair zp = zeta_general(q, a.s);
    out << "Z(" << fmt(a.s, 6) << ")," << fmt(zp.z, 16) << "\n";
    if (zp.z_plus2) out << "Z(" << fmt(a.s + 2.0, 6) << ")," << fmt(*zp.z_plus2, 16) << "\n";
    if (a.deriv_order > 0) {
        if (a.s == 0.0) {
            std::cerr << "zeta: derivatives need s != 0\n";
            return kExitValidation;
        }
        const DerivDirection d{a.dir[0], a.dir[1], a.dir[2]};
        const double bz = deriv_scalar(q, d, a.deriv_order, a.s);
        out << "box^" << a.deriv_order << "Z(" << fmt(a.s, 6) << ")," << fmt(bz, 16) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------- patch-conv ----
struct PatchArgs {
    std::string kernel = "slp", equation = "laplace", kappa_str;
    int order = 5;
    std::vector<int> grids{40, 80, 160, 320};
    double a = 0.809, b = -0.221, c = 640.0;
    unsigned seed = 0; // 0: use the explicit a,b constants
    std::string out;
    int threads = 0;
    double assert_order = -1.0;
};

int run_patch(const PatchArgs& pa) {
    set_threads(pa.threads);
    Complex kappa{0.0, 0.0};
    if (pa.equation == "helmholtz") {
        if (pa.kappa_str.empty()) throw CLI::ValidationError("--kappa", "required for helmholtz");
        kappa = parse_kappa(pa.kappa_str);
    }
    for (std::size_t i = 1; i < pa.grids.size(); ++i)
        if (pa.grids[i] <= pa.grids[i - 1])
            throw CLI::ValidationError("--grids", "grid list must be strictly increasing");
    PatchDensity density{pa.a, pa.b, pa.c};
    if (pa.seed != 0) {
        std::mt19937 rng(pa.seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        density.a = normal(rng);
        density.b = normal(rng);
    }
    const KernelSpec spec = make_spec(pa.equation, pa.kernel, kappa);
    const QuarticPatch patch(default_quartic_coeffs());

    Output out;
    out.open(pa.out);
    out << "# zetaquad patch-conv v1\n";
    out << "# kernel=" << pa.equation << "-" << pa.kernel << " order=" << pa.order
        << " a=" << fmt(density.a) << " b=" << fmt(density.b) << " c=" << fmt(density.c)
        << " seed=" << pa.seed << "\n";
    out << "# columns: N,h,value,error_vs_reference,fitted_running_order\n";

    const Complex ref = patch_quadrature(patch, spec, pa.order, 2 * pa.grids.back(), density);
    std::vector<double> hs, errs;
    std::vector<Complex> vals;
    for (int n : pa.grids) {
        const Complex v = patch_quadrature(patch, spec, pa.order, n, density);
        vals.push_back(v);
        hs.push_back(2.0 / n);
        errs.push_back(std::abs(v - ref));
    }
    const std::vector<double> orders = running_orders(hs, errs);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        out << pa.grids[i] << "," << fmt(hs[i]) << "," << fmt(vals[i]) << "," << fmt(errs[i])
            << "," << fmt(orders[i], 6) << "\n";
    }
    if (pa.assert_order > 0.0) {
        const double slope = fit_slope_tail(hs, errs);
        if (!(slope >= pa.assert_order)) {
            std::cerr << "patch-conv: fitted order " << slope << " below required "
                      << pa.assert_order << "\n";
            return kExitAssertion;
        }
    }
    return 0;
}

// ------------------------------------------------------------- bvp-conv ----
struct BvpArgs {
    std::string equation = "laplace", bc = "dirichlet", kappa_str;
    double R = 1.0, rho = 0.5;
    std::vector<int> grids{16, 32, 64};
    int order = 5;
    double gmres_tol = 0.0; // 0: auto
    int gmres_maxit = 200;
    double eta = -1.0;
    std::string dirichlet_rep = "corrected";
    std::string out;
    int threads = 0;
    double assert_order = -1.0;
    int assert_max_iters = 0;
};

int run_bvp(const BvpArgs& ba) {
    set_threads(ba.threads);
    Complex kappa{0.0, 0.0};
    if (ba.equation == "helmholtz") {
        if (ba.kappa_str.empty()) throw CLI::ValidationError("--kappa", "required for helmholtz");
        kappa = parse_kappa(ba.kappa_str);
    }
    for (std::size_t i = 1; i < ba.grids.size(); ++i)
        if (ba.grids[i] <= ba.grids[i - 1])
            throw CLI::ValidationError("--grids", "grid list must be strictly increasing");

    BVPProblem prob;
    prob.equation = (ba.equation == "helmholtz") ? Equation::Helmholtz : Equation::Laplace;
    prob.bc = (ba.bc == "neumann") ? BoundaryCondition::Neumann : BoundaryCondition::Dirichlet;
    prob.kappa = kappa;
    prob.surface = std::make_shared<TorusSurface>(ba.R, ba.rho);
    prob.sources = default_torus_sources(ba.R, ba.rho);
    prob.monopole_point = Vec3(ba.R, 0.0, 0.0);
    prob.order = ba.order;
    prob.combined_field_eta = ba.eta;
    prob.dirichlet_rep = (ba.dirichlet_rep == "plain") ? DirichletRepresentation::Plain
                                                       : DirichletRepresentation::MonopoleCorrected;
    prob.gmres_tol = ba.gmres_tol > 0.0
                         ? ba.gmres_tol
                         : ((prob.equation == Equation::Laplace || std::abs(kappa.real()) <= 5.0)
                                ? 1e-12
                                : 1e-9);
    prob.gmres_maxit = ba.gmres_maxit;

    Output out;
    out.open(ba.out);
    out << "# zetaquad bvp-conv v1\n";
    out << "# equation=" << ba.equation << " bc=" << ba.bc << " kappa=" << fmt(kappa)
        << " torus R=" << fmt(ba.R) << " rho=" << fmt(ba.rho) << " order=" << ba.order
        << " gmres_tol=" << fmt(prob.gmres_tol) << "\n";
    out << "# columns: N,h,error_at_test_point,gmres_iterations,wall_time_weights,"
           "wall_time_per_iteration\n";

    bool any_unconverged = false;
    std::vector<double> hs, errs;
    std::vector<int> iters;
    for (int n : ba.grids) {
        prob.n_per_side = n;
        const BVPSolution sol = solve_bvp(prob);
        if (!sol.converged) {
            any_unconverged = true;
            std::cerr << "bvp-conv: GMRES did not converge at n=" << n
                      << " (residual " << sol.residual << ")\n";
        }
        hs.push_back(2.0 * EIGEN_PI / n);
        errs.push_back(sol.rel_error);
        iters.push_back(sol.iterations);
        out << n * n << "," << fmt(2.0 * EIGEN_PI / n) << "," << fmt(sol.rel_error) << ","
            << sol.iterations << "," << fmt(sol.weight_seconds, 6) << ","
            << fmt(sol.seconds_per_iteration, 6) << "\n";
    }
    if (ba.assert_max_iters > 0)
        for (int it : iters)
            if (it > ba.assert_max_iters) {
                std::cerr << "bvp-conv: iteration count " << it << " exceeds bound "
                          << ba.assert_max_iters << "\n";
                return kExitAssertion;
            }
    if (ba.assert_order > 0.0) {
        const double slope = fit_slope_tail(hs, errs);
        if (!(slope >= ba.assert_order)) {
            std::cerr << "bvp-conv: fitted order " << slope << " below required "
                      << ba.assert_order << "\n";
            return kExitAssertion;
        }
    }
    return any_unconverged ? kExitSolver : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally corrected trapezoidal quadrature for Laplace/Helmholtz layer potentials"};
    app.require_subcommand(1);

    ZetaArgs za;
    CLI::App* zeta = app.add_subcommand("zeta", "Evaluate Z(s) and its parametric derivatives");
    zeta->add_option("--E", za.E);
    zeta->add_option("--F", za.F);
    zeta->add_option("--G", za.G);
    zeta->add_option("--s", za.s);
    zeta->add_option("--deriv-order", za.deriv_order)->check(CLI::Range(0, 4));
    zeta->add_option("--dir", za.dir)->expected(3);
    zeta->add_flag("--sweep", za.sweep, "emit (alpha, beta, sqrt(E) Z(1)) landscape data");
    zeta->add_option("--alpha-min", za.alpha_min);
    zeta->add_option("--alpha-max", za.alpha_max);
    zeta->add_option("--alpha-n", za.alpha_n)->check(CLI::PositiveNumber);
    zeta->add_option("--beta-min", za.beta_min);
    zeta->add_option("--beta-max", za.beta_max);
    zeta->add_option("--beta-n", za.beta_n)->check(CLI::PositiveNumber);
    zeta->add_option("--out", za.out);
    zeta->add_option("--threads", za.threads);

    PatchArgs pa;
    CLI::App* patch = app.add_subcommand("patch-conv", "Quartic-patch convergence study");
    patch->add_option("--kernel", pa.kernel)->check(CLI::IsMember({"slp", "dlp", "slpn"}));
    patch->add_option("--equation", pa.equation)->check(CLI::IsMember({"laplace", "helmholtz"}));
    patch->add_option("--kappa", pa.kappa_str);
    patch->add_option("--order", pa.order)->check(CLI::IsMember({0, 3, 5}));
    patch->add_option("--grids", pa.grids);
    patch->add_option("--a", pa.a);
    patch->add_option("--b", pa.b);
    patch->add_option("--c-decay", pa.c);
    patch->add_option("--seed", pa.seed, "draw a,b from N(0,1) when nonzero");
    patch->add_option("--out", pa.out);
    patch->add_option("--threads", pa.threads);
    patch->add_option("--assert-order", pa.assert_order);

    BvpArgs ba;
    CLI::App* bvp = app.add_subcommand("bvp-conv", "Torus boundary value problem convergence study");
    bvp->add_option("--equation", ba.equation)->check(CLI::IsMember({"laplace", "helmholtz"}));
    bvp->add_option("--bc", ba.bc)->check(CLI::IsMember({"dirichlet", "neumann"}));
    bvp->add_option("--kappa", ba.kappa_str);
    bvp->add_option("--R", ba.R);
    bvp->add_option("--rho", ba.rho);
    bvp->add_option("--grids", ba.grids, "nodes per side");
    bvp->add_option("--order", ba.order)->check(CLI::IsMember({3, 5}));
    bvp->add_option("--gmres-tol", ba.gmres_tol);
    bvp->add_option("--gmres-maxit", ba.gmres_maxit);
    bvp->add_option("--eta", ba.eta, "combined-field coupling (default Re kappa)");
    bvp->add_option("--dirichlet-rep", ba.dirichlet_rep)->check(CLI::IsMember({"corrected", "plain"}));
    bvp->add_option("--out", ba.out);
    bvp->add_option("--threads", ba.threads);
    bvp->add_option("--assert-order", ba.assert_order);
    bvp->add_option("--assert-max-iters", ba.assert_max_iters);

    try {
        app.parse(argc, argv);
        if (zeta->parsed()) return run_zeta(za);
        if (patch->parsed()) return run_patch(pa);
        if (bvp->parsed()) return run_bvp(ba);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
