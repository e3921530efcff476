#include "zetaquad/bvp.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zetaquad {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<PointSource> default_torus_sources(double R, double rho) {
    std::vector<PointSource> out;
    for (int k = 0; k < 3; ++k) {
        const double th = 2.0 * kPi * k / 3.0;
        const double ph = 2.0 * kPi * k / 3.0;
        const double ring = R + 0.5 * rho * std::cos(ph);
        out.push_back({Vec3(ring * std::cos(th), ring * std::sin(th), 0.5 * rho * std::sin(ph)),
                       Complex(1.0, 0.0)});
    }
    return out;
}

BVPSolution solve_bvp(const BVPProblem& problem) {
    std::shared_ptr<const Surface> surface = problem.surface;
    if (!surface) surface = std::make_shared<TorusSurface>(1.0, 0.5);
    std::vector<PointSource> sources = problem.sources;
    if (sources.empty()) sources = default_torus_sources(1.0, 0.5);

    const Complex kappa = (problem.equation == Equation::Helmholtz) ? problem.kappa : Complex(0, 0);
    const bool helm = problem.equation == Equation::Helmholtz;

    auto grid = std::make_shared<TorusGrid>(surface, problem.n_per_side, problem.n_per_side);
    const int n = grid->size();

    // operator components for the representation
    std::vector<KernelComponent> comps;
    const Equation eq = problem.equation;
    double eta = problem.combined_field_eta;
    if (eta < 0.0) eta = kappa.real();
    if (problem.bc == BoundaryCondition::Dirichlet) {
        comps.push_back({Complex(1.0, 0.0), KernelSpec{eq, Layer::DoubleLayer, kappa}});
        if (helm && eta != 0.0)
            comps.push_back({Complex(0.0, -eta), KernelSpec{eq, Layer::SingleLayer, kappa}});
    } else {
        comps.push_back({Complex(1.0, 0.0), KernelSpec{eq, Layer::SingleLayerNormalGrad, kappa}});
    }

    NystromOperator op(grid, comps, problem.order);

    // boundary data from the interior sources
    CVector rhs(n);
    for (int i = 0; i < n; ++i) {
        const SurfaceJet& jet = grid->jet(i);
        Complex v{0.0, 0.0};
        for (const auto& s : sources) {
            if (problem.bc == BoundaryCondition::Dirichlet) {
                v += s.strength * fundamental_solution(jet.r, s.location, kappa);
            } else {
                const Eigen::Vector3cd g = fundamental_solution_grad_x(jet.r, s.location, kappa);
                v += s.strength * (g(0) * jet.n(0) + g(1) * jet.n(1) + g(2) * jet.n(2));
            }
        }
        rhs[i] = v;
    }

    // exterior jump relations with outward normals: Dirichlet (I/2 + D),
    // Neumann (-I/2 + K'); the Laplace Dirichlet double layer additionally
    // carries the interior monopole term unless the plain form is requested
    const double jump = (problem.bc == BoundaryCondition::Dirichlet) ? 0.5 : -0.5;
    // a pure double-layer Dirichlet representation (Laplace, or Helmholtz with
    // eta = 0) is rank-deficient; that is when the monopole term is needed
    const bool monopole = problem.bc == BoundaryCondition::Dirichlet && comps.size() == 1 &&
                          problem.dirichlet_rep == DirichletRepresentation::MonopoleCorrected;
    CVector phi0;
    const double area_w = grid->h1() * grid->h2();
    if (monopole) {
        phi0.resize(n);
        for (int i = 0; i < n; ++i)
            phi0[i] = fundamental_solution(grid->jet(i).r, problem.monopole_point, Complex(0, 0));
    }

    const bool dense_path = n <= problem.dense_limit;
    CMatrix K;
    if (dense_path) {
        K = op.dense(problem.dense_limit);
        for (int i = 0; i < n; ++i) K(i, i) += jump;
        if (monopole)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) K(i, j) += phi0[i] * grid->jacobian()[j] * area_w;
    }

    const ApplyFn apply = [&](const CVector& sigma) -> CVector {
        if (dense_path) return K * sigma;
        CVector out = op.apply(sigma);
        out += jump * sigma;
        if (monopole) {
            Complex total{0.0, 0.0};
            for (int j = 0; j < n; ++j) total += sigma[j] * grid->jacobian()[j] * area_w;
            out += total * phi0;
        }
        return out;
    };

    const auto t0 = std::chrono::steady_clock::now();
    GmresResult res = gmres(apply, rhs, problem.gmres_tol, problem.gmres_maxit);
    const double solve_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    BVPSolution sol;
    sol.density = res.x;
    sol.iterations = res.iterations;
    sol.residual = res.residual_history.empty() ? 0.0 : res.residual_history.back();
    sol.converged = res.converged;
    sol.weight_seconds = op.weight_build_seconds();
    sol.seconds_per_iteration = res.iterations > 0 ? solve_seconds / res.iterations : 0.0;

    // verify the representation at the exterior test point
    const OffSurfaceEval ev = eval_offsurface(*grid, comps, res.x, problem.test_point);
    Complex u = ev.value;
    if (monopole) {
        Complex total{0.0, 0.0};
        for (int j = 0; j < n; ++j) total += res.x[j] * grid->jacobian()[j] * area_w;
        u += total * fundamental_solution(problem.test_point, problem.monopole_point, Complex(0, 0));
    }
    Complex ue{0.0, 0.0};
    for (const auto& s : sources) ue += s.strength * fundamental_solution(problem.test_point, s.location, kappa);
    sol.u_test = u;
    sol.u_exact = ue;
    sol.rel_error = std::abs(ue) > 0.0 ? std::abs(u - ue) / std::abs(ue) : std::abs(u - ue);
    sol.near_surface_warning = ev.near_surface_warning;
    return sol;
}

} // namespace zetaquad
