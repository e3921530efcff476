#include "zetaquad/gmres.hpp"

#include "zetaquad/nystrom.hpp"

#include <doctest.h>

#include <random>

using namespace zetaquad;

TEST_CASE("identity operator converges in one iteration") {
    const auto apply = [](const CVector& x) { return x; };
    CVector b(20);
    std::mt19937 rng(2);
    std::normal_distribution<double> normal;
    for (auto& v : b) v = Complex(normal(rng), normal(rng));
    const GmresResult r = gmres(apply, b, 1e-12, 50);
    CHECK(r.converged);
    CHECK(r.iterations == 1);
    CHECK((r.x - b).norm() <= 1e-12 * b.norm());
}

TEST_CASE("zero right-hand side") {
    const auto apply = [](const CVector& x) { return x; };
    const GmresResult r = gmres(apply, CVector::Zero(5), 1e-12, 10);
    CHECK(r.converged);
    CHECK(r.x.norm() == 0.0);
}

TEST_CASE("matches a dense direct solve on a well conditioned system") {
    std::mt19937 rng(7);
    std::normal_distribution<double> normal;
    const int n = 50;
    CMatrix a = CMatrix::Identity(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) += Complex(normal(rng), normal(rng)) * 0.05;
    CVector b(n);
    for (auto& v : b) v = Complex(normal(rng), normal(rng));
    const GmresResult r = gmres([&](const CVector& x) { return CVector(a * x); }, b, 1e-13, n);
    CHECK(r.converged);
    const CVector direct = a.fullPivLu().solve(b);
    CHECK((r.x - direct).norm() <= 1e-10 * direct.norm());
}

TEST_CASE("residual history is nonincreasing and matches the true residual") {
    std::mt19937 rng(9);
    std::normal_distribution<double> normal;
    const int n = 40;
    CMatrix a = 2.0 * CMatrix::Identity(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) += Complex(normal(rng), normal(rng)) * 0.1;
    CVector b(n);
    for (auto& v : b) v = Complex(normal(rng), normal(rng));
    const GmresResult r = gmres([&](const CVector& x) { return CVector(a * x); }, b, 1e-11, n);
    CHECK(r.converged);
    for (std::size_t k = 1; k < r.residual_history.size(); ++k)
        CHECK(r.residual_history[k] <= r.residual_history[k - 1] + 1e-15);
    const double true_rel = (b - a * r.x).norm() / b.norm();
    CHECK(true_rel <= 10.0 * 1e-11);
}

TEST_CASE("non-convergence is reported") {
    // rotation-like system that a tiny Krylov budget cannot resolve
    std::mt19937 rng(11);
    std::normal_distribution<double> normal;
    const int n = 30;
    CMatrix a = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) a(i, (i + 1) % n) = 1.0;
    CVector b(n);
    for (auto& v : b) v = Complex(normal(rng), normal(rng));
    const GmresResult r = gmres([&](const CVector& x) { return CVector(a * x); }, b, 1e-14, 5);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 5);
}

TEST_CASE("second-kind torus system: iterations stay flat under refinement") {
    int iters_coarse = 0, iters_fine = 0;
    for (int pass = 0; pass < 2; ++pass) {
        const int n = pass == 0 ? 12 : 20;
        const auto grid = std::make_shared<TorusGrid>(std::make_shared<TorusSurface>(1.0, 0.5), n, n);
        const NystromOperator op(
            grid, {{Complex(1, 0), KernelSpec{Equation::Laplace, Layer::DoubleLayer, {}}}}, 5);
        CVector b(grid->size());
        for (int i = 0; i < grid->size(); ++i) b[i] = std::cos(2.0 * i * EIGEN_PI / grid->size());
        const GmresResult r = gmres(
            [&](const CVector& x) { return CVector(0.5 * x + op.apply(x)); }, b, 1e-10, 150);
        CHECK(r.converged);
        (pass == 0 ? iters_coarse : iters_fine) = r.iterations;
    }
    CHECK(iters_fine <= iters_coarse + 5);
}
