#include "zetaquad/nystrom.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

using namespace zetaquad;

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

std::shared_ptr<TorusGrid> make_grid(int n) {
    return std::make_shared<TorusGrid>(std::make_shared<TorusSurface>(1.0, 0.5), n, n);
}

CVector random_density(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal;
    CVector v(n);
    for (int i = 0; i < n; ++i) v[i] = Complex(normal(rng), normal(rng));
    return v;
}
} // namespace

TEST_CASE("kernel_eval basics") {
    const TorusSurface torus(1.0, 0.5);
    const SurfaceJet a = torus.jet(0.3, 1.0);
    const SurfaceJet b = torus.jet(2.0, -0.5);
    const double h1 = 0.1, h2 = 0.2;
    SUBCASE("Laplace single layer value") {
        const double d = (a.r - b.r).norm();
        const Complex k = kernel_eval(KernelSpec{Equation::Laplace, Layer::SingleLayer, {}}, a, b, h1, h2);
        CHECK(k.real() == doctest::Approx(b.jac * h1 * h2 / (4.0 * std::numbers::pi * d)).epsilon(1e-14));
        CHECK(k.imag() == 0.0);
    }
    SUBCASE("Helmholtz at kappa = 0 equals Laplace") {
        for (Layer layer : {Layer::SingleLayer, Layer::DoubleLayer, Layer::SingleLayerNormalGrad}) {
            const Complex lap = kernel_eval(KernelSpec{Equation::Laplace, layer, {}}, a, b, h1, h2);
            const Complex helm =
                kernel_eval(KernelSpec{Equation::Helmholtz, layer, Complex(0, 0)}, a, b, h1, h2);
            CHECK(std::abs(lap - helm) < 1e-16);
        }
    }
    SUBCASE("planar double layer vanishes") {
        const QuarticPatch flat(std::array<double, 12>{});
        const SurfaceJet p = flat.jet(0.1, 0.2);
        const SurfaceJet q = flat.jet(-0.4, 0.3);
        CHECK(std::abs(kernel_eval(KernelSpec{Equation::Laplace, Layer::DoubleLayer, {}}, p, q, h1, h2)) <
              1e-16);
    }
    SUBCASE("coincident points rejected") {
        CHECK_THROWS_AS(kernel_eval(KernelSpec{}, a, a, h1, h2), std::domain_error);
    }
}

TEST_CASE("matrix-free apply equals dense assembly") {
    const auto grid = make_grid(16);
    const Complex kap{1.42, 1.11};
    const std::vector<std::vector<KernelComponent>> cases = {
        {{Complex(1, 0), KernelSpec{Equation::Laplace, Layer::SingleLayer, {}}}},
        {{Complex(1, 0), KernelSpec{Equation::Laplace, Layer::DoubleLayer, {}}}},
        {{Complex(1, 0), KernelSpec{Equation::Laplace, Layer::SingleLayerNormalGrad, {}}}},
        {{Complex(1, 0), KernelSpec{Equation::Helmholtz, Layer::SingleLayer, kap}}},
        {{Complex(1, 0), KernelSpec{Equation::Helmholtz, Layer::DoubleLayer, kap}}},
        {{Complex(1, 0), KernelSpec{Equation::Helmholtz, Layer::SingleLayerNormalGrad, kap}}},
        // combined field
        {{Complex(1, 0), KernelSpec{Equation::Helmholtz, Layer::DoubleLayer, kap}},
         {Complex(0, -1.42), KernelSpec{Equation::Helmholtz, Layer::SingleLayer, kap}}},
    };
    const CVector sigma = random_density(grid->size(), 5);
    for (const auto& comps : cases) {
        const NystromOperator op(grid, comps, 5);
        const CVector a = op.apply(sigma);
        const CVector b = op.dense() * sigma;
        CHECK((a - b).norm() <= 1e-12 * b.norm());
    }
}

TEST_CASE("apply is linear and annihilates zero") {
    const auto grid = make_grid(12);
    const NystromOperator op(
        grid, {{Complex(1, 0), KernelSpec{Equation::Laplace, Layer::SingleLayer, {}}}}, 5);
    CHECK(op.apply(CVector::Zero(grid->size())).norm() == 0.0);
    const CVector x = random_density(grid->size(), 1);
    const CVector y = random_density(grid->size(), 2);
    const Complex a{0.7, -0.3}, b{-1.1, 0.2};
    const CVector lhs = op.apply(a * x + b * y);
    const CVector rhs = a * op.apply(x) + b * op.apply(y);
    CHECK((lhs - rhs).norm() <= 1e-12 * rhs.norm());
}

TEST_CASE("length mismatch throws") {
    const auto grid = make_grid(8);
    const NystromOperator op(
        grid, {{Complex(1, 0), KernelSpec{Equation::Laplace, Layer::SingleLayer, {}}}}, 3);
    CHECK_THROWS_AS(op.apply(CVector::Zero(7)), std::invalid_argument);
}

TEST_CASE("orders 3 and 5 differ only on the stencil") {
    const auto grid = make_grid(10);
    const std::vector<KernelComponent> comps = {
        {Complex(1, 0), KernelSpec{Equation::Laplace, Layer::SingleLayer, {}}}};
    const CMatrix k3 = NystromOperator(grid, comps, 3).dense();
    const CMatrix k5 = NystromOperator(grid, comps, 5).dense();
    const int n = grid->size();
    for (int i = 0; i < n; ++i) {
        const int iu = i / grid->nv(), iv = i % grid->nv();
        for (int j = 0; j < n; ++j) {
            const int ju = j / grid->nv(), jv = j % grid->nv();
            int du = std::abs(iu - ju); du = std::min(du, grid->nu() - du);
            int dv = std::abs(iv - jv); dv = std::min(dv, grid->nv() - dv);
            if (du <= 1 && dv <= 1) continue; // stencil neighborhood
            CHECK(std::abs(k3(i, j) - k5(i, j)) <= 1e-16 * std::abs(k3(i, j)));
        }
    }
}

TEST_CASE("Gauss jump identity at increasing resolution") {
    double prev = 1e300;
    for (int n : {12, 16, 24, 32}) {
        const auto grid = make_grid(n);
        const NystromOperator op(
            grid, {{Complex(1, 0), KernelSpec{Equation::Laplace, Layer::DoubleLayer, {}}}}, 5);
        const CVector r = op.apply(CVector::Ones(grid->size()));
        double maxerr = 0.0;
        for (int i = 0; i < r.size(); ++i) maxerr = std::max(maxerr, std::abs(r[i] + 0.5));
        CHECK(maxerr < prev);
        prev = maxerr;
    }
    CHECK(prev < 3e-6);
}

TEST_CASE("single-layer row sums self-converge") {
    // S[1](x) at the fixed node (0,0) against a refined reference
    Complex ref;
    {
        const auto grid = make_grid(64);
        const NystromOperator op(
            grid, {{Complex(1, 0), KernelSpec{Equation::Laplace, Layer::SingleLayer, {}}}}, 5);
        ref = op.apply(CVector::Ones(grid->size()))[0];
    }
    double prev = 1e300;
    for (int n : {8, 16, 32}) {
        const auto grid = make_grid(n);
        const NystromOperator op(
            grid, {{Complex(1, 0), KernelSpec{Equation::Laplace, Layer::SingleLayer, {}}}}, 5);
        const double err = std::abs(op.apply(CVector::Ones(grid->size()))[0] - ref);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("operator commutes with the u-v grid relabel for the single layer") {
    // same surface described with swapped parameter roles: jets swap u/v
    class SwappedTorus final : public Surface {
    public:
        SwappedTorus(double R, double rho) : base_(R, rho) {}
        SurfaceJet jet(double u, double v) const override {
            SurfaceJet j = base_.jet(v, u);
            std::swap(j.ru, j.rv);
            std::swap(j.ruu, j.rvv);
            std::swap(j.ruuu, j.rvvv);
            std::swap(j.ruuv, j.ruvv);
            std::swap(j.ruuuu, j.rvvvv);
            std::swap(j.ruuuv, j.ruvvv);
            j.finalize();
            return j;
        }
        bool periodic_u() const override { return true; }
        bool periodic_v() const override { return true; }
        double period_u() const override { return kTau; }
        double period_v() const override { return kTau; }
    private:
        TorusSurface base_;
    };

    const int n = 10;
    const auto grid = make_grid(n);
    const auto swapped =
        std::make_shared<TorusGrid>(std::make_shared<SwappedTorus>(1.0, 0.5), n, n);
    const std::vector<KernelComponent> comps = {
        {Complex(1, 0), KernelSpec{Equation::Laplace, Layer::SingleLayer, {}}}};
    const CMatrix a = NystromOperator(grid, comps, 5).dense();
    const CMatrix b = NystromOperator(swapped, comps, 5).dense();
    const auto perm = [&](int idx) { // (iu, iv) -> (iv, iu)
        return (idx % n) * n + idx / n;
    };
    for (int i = 0; i < n * n; ++i)
        for (int j = 0; j < n * n; ++j)
            CHECK(std::abs(a(i, j) - b(perm(i), perm(j))) < 1e-12);
}

TEST_CASE("punctured single-layer matrix has the kernel symmetry") {
    const auto grid = make_grid(10);
    const Complex kap{1.42, 1.11};
    const NystromOperator op(
        grid, {{Complex(1, 0), KernelSpec{Equation::Helmholtz, Layer::SingleLayer, kap}}}, 5,
        /*corrections=*/false);
    const CMatrix k = op.dense();
    const auto& jac = grid->jacobian();
    for (int i = 0; i < grid->size(); i += 3)
        for (int j = 0; j < grid->size(); j += 3) {
            if (i == j) continue;
            CHECK(std::abs(k(i, j) / jac[j] - k(j, i) / jac[i]) < 1e-13);
        }
}

TEST_CASE("off-surface evaluation") {
    const auto grid = make_grid(24);
    const std::vector<KernelComponent> slp = {
        {Complex(1, 0), KernelSpec{Equation::Laplace, Layer::SingleLayer, {}}}};
    const std::vector<KernelComponent> dlp = {
        {Complex(1, 0), KernelSpec{Equation::Laplace, Layer::DoubleLayer, {}}}};
    const CVector ones = CVector::Ones(grid->size());

    SUBCASE("far-field monopole limit") {
        // S[1](x) ~ (total weighted charge) / (4 pi |x|)
        const Vec3 far(300.0, 0.0, 0.0); // 100x the torus diameter
        const OffSurfaceEval ev = eval_offsurface(*grid, slp, ones, far);
        double charge = 0.0;
        for (int j = 0; j < grid->size(); ++j) charge += grid->jacobian()[j];
        charge *= grid->h1() * grid->h2();
        const double expect = charge / (4.0 * std::numbers::pi * far.norm());
        CHECK(std::abs(ev.value.real() - expect) < 0.01 * expect);
        CHECK_FALSE(ev.near_surface_warning);
    }
    SUBCASE("exterior Gauss identity for the double layer") {
        double prev = 1e300;
        for (int n : {8, 16, 32}) {
            const auto g = make_grid(n);
            const OffSurfaceEval ev =
                eval_offsurface(*g, dlp, CVector::Ones(g->size()), Vec3(2.5, 0.0, 0.7));
            CHECK(std::abs(ev.value) < prev);
            prev = std::abs(ev.value);
        }
        CHECK(prev < 1e-8);
    }
    SUBCASE("self-convergence against a refined grid") {
        const Vec3 target(2.5, 0.0, 0.7);
        const auto fine = make_grid(48);
        const Complex ref = eval_offsurface(*fine, slp, CVector::Ones(fine->size()), target).value;
        const Complex v = eval_offsurface(*grid, slp, ones, target).value;
        CHECK(std::abs(v - ref) < 1e-9);
    }
    SUBCASE("near-surface targets are flagged") {
        const Vec3 close(1.501, 0.0, 0.01);
        CHECK(eval_offsurface(*grid, slp, ones, close).near_surface_warning);
    }
}
