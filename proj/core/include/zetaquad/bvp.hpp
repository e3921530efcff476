#pragma once

#include "zetaquad/gmres.hpp"
#include "zetaquad/nystrom.hpp"

#include <memory>
#include <vector>

namespace zetaquad {

enum class BoundaryCondition { Dirichlet, Neumann };

/// Representation for the exterior Laplace Dirichlet problem. The plain
/// double-layer ansatz is rank-deficient on a closed surface (the constant
/// density lies in the null space of I/2 + D and the far field misses the
/// monopole moment); the corrected form adds an interior point-source term
/// Phi(x, x0) * integral(sigma), which restores unique solvability.
enum class DirichletRepresentation { MonopoleCorrected, Plain };

struct PointSource {
    Vec3 location;
    Complex strength{1.0, 0.0};
};

struct BVPProblem {
    Equation equation = Equation::Laplace;
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
    Complex kappa{0.0, 0.0};

    std::shared_ptr<const Surface> surface; // defaults to the R=1, rho=0.5 torus
    int n_per_side = 32;
    int order = 5;

    std::vector<PointSource> sources;      // defaults to the documented ring
    Vec3 test_point{2.5, 0.0, 0.7};
    Vec3 monopole_point{1.0, 0.0, 0.0};    // interior point of the corrected form
    DirichletRepresentation dirichlet_rep = DirichletRepresentation::MonopoleCorrected;

    double combined_field_eta = -1.0;      // < 0 means "use Re(kappa)"
    double gmres_tol = 1e-12;
    int gmres_maxit = 200;
    int dense_limit = 4096;                // dense assembly for N <= limit
};

struct BVPSolution {
    CVector density;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
    Complex u_test;        // potential of the representation at the test point
    Complex u_exact;       // source potential there
    double rel_error = 0.0;
    double weight_seconds = 0.0;
    double seconds_per_iteration = 0.0;
    bool near_surface_warning = false;
};

/// Default interior sources: 3 unit charges on the ring of minor radius
/// rho/2 inside the tube, at angles 0, 2pi/3, 4pi/3 in both directions.
std::vector<PointSource> default_torus_sources(double R, double rho);

/// Solve the exterior BVP with the corrected trapezoidal Nystrom method
/// and verify against the manufactured source potential at the test point.
BVPSolution solve_bvp(const BVPProblem& problem);

} // namespace zetaquad
