#include "zetaquad/surface.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace zetaquad;

namespace {

// 4th-order central differences of the position map, test-only oracle
Vec3 fd_partial(const Surface& s, double u, double v, int du, int dv, double h = 2e-2) {
    if (du > 0) {
        return (fd_partial(s, u - 2 * h, v, du - 1, dv) - 8 * fd_partial(s, u - h, v, du - 1, dv) +
                8 * fd_partial(s, u + h, v, du - 1, dv) - fd_partial(s, u + 2 * h, v, du - 1, dv)) /
               (12 * h);
    }
    if (dv > 0) {
        return (fd_partial(s, u, v - 2 * h, 0, dv - 1) - 8 * fd_partial(s, u, v - h, 0, dv - 1) +
                8 * fd_partial(s, u, v + h, 0, dv - 1) - fd_partial(s, u, v + 2 * h, 0, dv - 1)) /
               (12 * h);
    }
    return s.jet(u, v).r;
}

void check_jet_invariants(const SurfaceJet& j) {
    CHECK(std::abs(j.n.norm() - 1.0) < 1e-14);
    CHECK(std::abs(j.n.dot(j.ru)) < 1e-12 * j.ru.norm());
    CHECK(std::abs(j.n.dot(j.rv)) < 1e-12 * j.rv.norm());
    CHECK(j.jac > 0.0);
    CHECK(j.jac * j.jac == doctest::Approx(j.E * j.G - j.F * j.F).epsilon(1e-12));
    CHECK(j.e2 == doctest::Approx(j.n.dot(j.ruu)).epsilon(1e-13));
    CHECK(j.f2 == doctest::Approx(j.n.dot(j.ruv)).epsilon(1e-13));
    CHECK(j.g2 == doctest::Approx(j.n.dot(j.rvv)).epsilon(1e-13));
}

} // namespace

TEST_CASE("torus jet at the symmetric point") {
    const TorusSurface torus(1.0, 0.5);
    const SurfaceJet j = torus.jet(0.0, 0.0);
    CHECK(j.r.isApprox(Vec3(1.5, 0, 0), 1e-15));
    CHECK(j.ru.isApprox(Vec3(0, 1.5, 0), 1e-15));
    CHECK(j.rv.isApprox(Vec3(0, 0, 0.5), 1e-15));
    CHECK(j.E == doctest::Approx(2.25));
    CHECK(j.F == doctest::Approx(0.0));
    CHECK(j.G == doctest::Approx(0.25));
    // outward normal at the outer equator points along +x
    CHECK(j.n.isApprox(Vec3(1, 0, 0), 1e-14));
}

TEST_CASE("torus rejects degenerate radii") {
    CHECK_THROWS_AS(TorusSurface(0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(TorusSurface(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("torus partials match finite differences of the closed form") {
    const TorusSurface torus(1.0, 0.5);
    const double u = 0.83, v = -1.21;
    const SurfaceJet j = torus.jet(u, v);
    const struct { const Vec3& val; int du, dv; } cases[] = {
        {j.ru, 1, 0},     {j.rv, 0, 1},     {j.ruu, 2, 0},   {j.ruv, 1, 1},   {j.rvv, 0, 2},
        {j.ruuu, 3, 0},   {j.ruuv, 2, 1},   {j.ruvv, 1, 2},  {j.rvvv, 0, 3},  {j.ruuuu, 4, 0},
        {j.ruuuv, 3, 1},  {j.ruuvv, 2, 2},  {j.ruvvv, 1, 3}, {j.rvvvv, 0, 4},
    };
    for (const auto& c : cases) {
        const Vec3 fd = fd_partial(torus, u, v, c.du, c.dv);
        CHECK((c.val - fd).norm() < 1e-6 * std::max(1.0, c.val.norm()));
    }
}

TEST_CASE("torus periodicity") {
    const TorusSurface torus(1.0, 0.5);
    const double tau = 2.0 * std::numbers::pi;
    const SurfaceJet a = torus.jet(0.37, 1.1);
    const SurfaceJet b = torus.jet(0.37 + tau, 1.1 - tau);
    CHECK((a.r - b.r).norm() < 1e-13);
    CHECK((a.ruuvv - b.ruuvv).norm() < 1e-13);
    CHECK((a.n - b.n).norm() < 1e-13);
}

TEST_CASE("flat patch") {
    const QuarticPatch flat(std::array<double, 12>{});
    for (double u : {-0.7, 0.0, 0.4}) {
        for (double v : {-0.3, 0.5}) {
            const SurfaceJet j = flat.jet(u, v);
            CHECK(j.E == doctest::Approx(1.0));
            CHECK(j.F == doctest::Approx(0.0));
            CHECK(j.G == doctest::Approx(1.0));
            CHECK(j.e2 == doctest::Approx(0.0));
            CHECK(j.f2 == doctest::Approx(0.0));
            CHECK(j.g2 == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("single c20 coefficient curves only the uu direction") {
    std::array<double, 12> c{};
    c[0] = 1.0; // u^2
    const QuarticPatch p(c);
    const SurfaceJet j = p.jet(0.0, 0.0);
    CHECK(j.e2 == doctest::Approx(2.0));
    CHECK(j.f2 == doctest::Approx(0.0));
    CHECK(j.g2 == doctest::Approx(0.0));
}

TEST_CASE("default quartic patch jets match finite differences") {
    const QuarticPatch patch(default_quartic_coeffs());
    for (const auto [u, v] : {std::pair{0.15, -0.22}, std::pair{-0.4, 0.31}}) {
        const SurfaceJet j = patch.jet(u, v);
        check_jet_invariants(j);
        CHECK((j.ruu - fd_partial(patch, u, v, 2, 0)).norm() < 1e-7);
        CHECK((j.ruvv - fd_partial(patch, u, v, 1, 2)).norm() < 1e-7);
        CHECK((j.rvvvv - fd_partial(patch, u, v, 0, 4)).norm() < 1e-6);
    }
}

TEST_CASE("jet invariants hold across a full torus grid") {
    const TorusSurface torus(1.0, 0.5);
    const double tau = 2.0 * std::numbers::pi;
    for (int iu = 0; iu < 32; ++iu)
        for (int iv = 0; iv < 32; ++iv)
            check_jet_invariants(torus.jet(iu * tau / 32, iv * tau / 32));
}
