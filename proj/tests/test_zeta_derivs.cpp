#include "zetaquad/zeta_derivs.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace zetaquad;
using zetaquad::testing::FormSampler;

namespace {

// high-order central finite differences of zeta_general along a direction
double fd_along(const QuadraticForm& q, const DerivDirection& d, int k, double s, double delta) {
    const auto f = [&](double t) {
        return zeta_general(QuadraticForm(q.E() + t * d.L, q.F() + t * d.M, q.G() + t * d.N), s).z;
    };
    switch (k) {
    case 1: // 4th order
        return (f(-2 * delta) - 8 * f(-delta) + 8 * f(delta) - f(2 * delta)) / (12 * delta);
    case 2: // 4th order
        return (-f(-2 * delta) + 16 * f(-delta) - 30 * f(0) + 16 * f(delta) - f(2 * delta)) /
               (12 * delta * delta);
    case 3: { // 2nd order + Richardson
        const auto d3 = [&](double h) {
            return (f(2 * h) - 2 * f(h) + 2 * f(-h) - f(-2 * h)) / (2 * h * h * h);
        };
        return (4.0 * d3(delta / 2) - d3(delta)) / 3.0;
    }
    default: { // k = 4, 2nd order + Richardson
        const auto d4 = [&](double h) {
            return (f(2 * h) - 4 * f(h) + 6 * f(0) - 4 * f(-h) + f(-2 * h)) / (h * h * h * h);
        };
        return (4.0 * d4(delta / 2) - d4(delta)) / 3.0;
    }
    }
}

} // namespace

TEST_CASE("first derivative is linear in the direction") {
    const QuadraticForm q(1.2, 0.3, 0.8);
    for (double s : {-1.0, 1.0}) {
        const double de = deriv_scalar(q, {1, 0, 0}, 1, s);
        const double dg = deriv_scalar(q, {0, 0, 1}, 1, s);
        const double both = deriv_scalar(q, {1, 0, 1}, 1, s);
        CHECK(both == doctest::Approx(de + dg).epsilon(1e-12));
    }
}

TEST_CASE("scalar derivatives match finite differences of zeta_general") {
    FormSampler sampler(17);
    for (int t = 0; t < 3; ++t) {
        const QuadraticForm q = sampler.next();
        const DerivDirection dir{1, 0, 0};
        const double s = -1.0;
        for (int k = 1; k <= 4; ++k) {
            const double exact = deriv_scalar(q, dir, k, s);
            const double delta = (k <= 2) ? 1e-3 : ((k == 3) ? 2e-3 : 6e-3);
            const double fd = fd_along(q, dir, k, s, delta);
            const double tol = (k <= 2) ? 1e-5 : 1e-3;
            CHECK(std::abs(exact - fd) <= tol * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("mixed-operator identity dEdG = (1/4) dFdF") {
    FormSampler sampler(29);
    for (int t = 0; t < 10; ++t) {
        const QuadraticForm q = sampler.next();
        double s = sampler.uniform(-2.5, 1.8);
        if (std::abs(s) < 0.1) s = 0.5; // avoid the s = 0 limit point
        const double mixed = 0.5 * (deriv_scalar(q, {1, 0, 1}, 2, s) -
                                    deriv_scalar(q, {1, 0, 0}, 2, s) -
                                    deriv_scalar(q, {0, 0, 1}, 2, s));
        const double ff4 = deriv_scalar(q, {0, 0.5, 0}, 2, s);
        CHECK(mixed == doctest::Approx(ff4).epsilon(1e-11));
    }
}

TEST_CASE("vector derivative reconstructs directional derivatives") {
    // box^2 along (L,M,N) = L^2 v1 + 4LM v2 + (4M^2 + 2LN) v3 + 4MN v4 + N^2 v5
    const QuadraticForm q(1.8, -0.4, 1.1);
    for (double s : {-1.0, 1.0}) {
        const ZetaDerivVector v = deriv_vector(q, 2, s);
        REQUIRE(v.v.size() == 5);
        for (const DerivDirection d : {DerivDirection{0.7, -0.3, 1.2}, DerivDirection{1, 1, 1}}) {
            const double recon = d.L * d.L * v.v[0] + 4 * d.L * d.M * v.v[1] +
                                 (4 * d.M * d.M + 2 * d.L * d.N) * v.v[2] + 4 * d.M * d.N * v.v[3] +
                                 d.N * d.N * v.v[4];
            CHECK(recon == doctest::Approx(deriv_scalar(q, d, 2, s)).epsilon(1e-11));
        }
    }
}

TEST_CASE("E-G relabel symmetry of the gradient") {
    const QuadraticForm q(1.5, 0.0, 1.5);
    const ZetaDerivVector v = deriv_vector(q, 1, -1.0);
    REQUIRE(v.v.size() == 3);
    CHECK(v.v[0] == doctest::Approx(v.v[2]).epsilon(1e-12));
}

TEST_CASE("order-4 components against finite differences of the order-3 vector") {
    const QuadraticForm q(1.6, 0.3, 1.2);
    const double s = -1.0;
    const ZetaDerivVector v4 = deriv_vector(q, 4, s);
    REQUIRE(v4.v.size() == 9);

    // each component is a single E/F/G-derivative of an order-3 component
    struct Map { int target; int src; int axis; double factor; };
    // axis 0: d/dE, 1: d/dF, 2: d/dG
    const Map maps[] = {
        {0, 0, 0, 1.0},  // dEEEE = dE (dEEE)
        {1, 0, 1, 0.5},  // dEEEF/2 = (1/2) dF (dEEE)
        {2, 2, 0, 1.0},  // dEEFF/4 = dE (dEFF/4)
        {3, 3, 0, 1.0},  // dEFFF/8 = dE (dFFF/8)
        {4, 3, 1, 0.5},  // dFFFF/16 = (1/2) dF (dFFF/8)
        {5, 3, 2, 1.0},  // dFFFG/8 = dG (dFFF/8)
        {6, 4, 2, 1.0},  // dFFGG/4 = dG (dFFG/4)
        {7, 5, 2, 1.0},  // dFGGG/2 = dG (dFGG/2)
        {8, 6, 2, 1.0},  // dGGGG = dG (dGGG)
    };
    const double delta = 2e-3;
    for (const Map& m : maps) {
        const auto v3at = [&](double t) {
            const double e = q.E() + (m.axis == 0 ? t : 0.0);
            const double f = q.F() + (m.axis == 1 ? t : 0.0);
            const double g = q.G() + (m.axis == 2 ? t : 0.0);
            return deriv_vector(QuadraticForm(e, f, g), 3, s).v[m.src];
        };
        const double fd =
            m.factor * (v3at(-2 * delta) - 8 * v3at(-delta) + 8 * v3at(delta) - v3at(2 * delta)) /
            (12 * delta);
        CHECK(std::abs(v4.v[m.target] - fd) <= 1e-3 * std::max(1.0, std::abs(v4.v[m.target])));
    }
}

TEST_CASE("node table agrees with the one-off entry points") {
    const QuadraticForm q(2.1, 0.45, 1.3);
    const NodeZetaTable t = node_zeta_table(q);
    CHECK(t.z1 == doctest::Approx(zeta_s1(q)).epsilon(1e-13));
    CHECK(t.zm1 == doctest::Approx(zeta_general(q, -1.0).z).epsilon(1e-13));
    const ZetaDerivVector b2 = deriv_vector(q, 2, -1.0);
    const ZetaDerivVector b3 = deriv_vector(q, 3, -1.0);
    const ZetaDerivVector b4 = deriv_vector(q, 4, -1.0);
    for (int i = 0; i < 5; ++i) CHECK(t.box2_zm1[i] == doctest::Approx(b2.v[i]).epsilon(1e-12));
    for (int i = 0; i < 7; ++i) CHECK(t.box3_zm1[i] == doctest::Approx(b3.v[i]).epsilon(1e-12));
    for (int i = 0; i < 9; ++i) CHECK(t.box4_zm1[i] == doctest::Approx(b4.v[i]).epsilon(1e-12));
    const ZetaDerivVector b1 = deriv_vector(q, 1, 1.0);
    for (int i = 0; i < 3; ++i) CHECK(t.box1_z1[i] == doctest::Approx(b1.v[i]).epsilon(1e-12));
}
