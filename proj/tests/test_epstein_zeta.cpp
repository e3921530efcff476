#include "zetaquad/epstein_zeta.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

using namespace zetaquad;
using zetaquad::testing::FormSampler;

TEST_CASE("closed-form special values at s = 1") {
    // 4 zeta(1/2) beta(1/2) and 6 zeta(1/2) L_{-3}(1/2)
    CHECK(zeta_s1(QuadraticForm(1, 0, 1)) ==
          doctest::Approx(-3.900264920001956).epsilon(1e-13));
    CHECK(zeta_s1(QuadraticForm(1, 0.5, 1)) ==
          doctest::Approx(-4.213422636136907).epsilon(1e-13));
    // homogeneity: Z_{4A}(1) = Z_A(1)/2
    CHECK(zeta_s1(QuadraticForm(4, 0, 4)) ==
          doctest::Approx(-3.900264920001956 / 2.0).epsilon(1e-13));
}

TEST_CASE("zeta_general limits and consistency") {
    FormSampler sampler(23);
    SUBCASE("s = 0 limit is -1") {
        for (int t = 0; t < 10; ++t) {
            CHECK(zeta_general(sampler.next(), 0.0).z == doctest::Approx(-1.0).epsilon(1e-12));
        }
    }
    SUBCASE("s = 1 matches the dedicated formula") {
        for (int t = 0; t < 10; ++t) {
            const QuadraticForm q = sampler.next();
            CHECK(zeta_general(q, 1.0).z == doctest::Approx(zeta_s1(q)).epsilon(1e-13));
        }
    }
    SUBCASE("companion Z(s+2) matches a direct evaluation") {
        const QuadraticForm q(1.3, 0.2, 0.9);
        const ZetaPair p = zeta_general(q, -1.0);
        REQUIRE(p.z_plus2.has_value());
        CHECK(*p.z_plus2 == doctest::Approx(zeta_s1(q)).epsilon(1e-13));
        CHECK_FALSE(zeta_general(q, 0.0).z_plus2.has_value()); // companion would be the pole
    }
    SUBCASE("pole at s = 2") {
        CHECK_THROWS_AS(zeta_general(QuadraticForm(1, 0, 1), 2.0), std::domain_error);
    }
}

TEST_CASE("s = 4 against the absolutely convergent lattice sum") {
    // direct summation with the exterior-box tail integral (pi/2 + 1)/a^2
    const int R = 1500;
    double sum = 0.0;
    for (int i = 0; i <= R; ++i) {
        const int jlo = (i == 0) ? 1 : -R;
        for (int j = jlo; j <= R; ++j) {
            const double q = double(i) * i + double(j) * j;
            sum += 1.0 / (q * q);
        }
    }
    sum *= 2.0;
    const double a = R + 0.5;
    sum += (std::numbers::pi / 2.0 + 1.0) / (a * a);
    CHECK(zeta_general(QuadraticForm(1, 0, 1), 4.0).z == doctest::Approx(sum).epsilon(1e-10));
}

TEST_CASE("homogeneity, relabel and F-sign symmetries") {
    FormSampler sampler(31);
    for (int t = 0; t < 8; ++t) {
        const QuadraticForm q = sampler.next();
        for (double s : {-1.0, 1.0, 3.0}) {
            const double z = zeta_general(q, s).z;
            for (double c : {0.5, 2.0, 7.0}) {
                const double zc = zeta_general(q.times(c), s).z;
                CHECK(zc == doctest::Approx(std::pow(c, -s / 2.0) * z).epsilon(1e-12));
            }
            const double zsw = zeta_general(QuadraticForm(q.G(), q.F(), q.E()), s).z;
            CHECK(zsw == doctest::Approx(z).epsilon(1e-13));
            const double zfn = zeta_general(QuadraticForm(q.E(), -q.F(), q.G()), s).z;
            CHECK(zfn == doctest::Approx(z).epsilon(1e-13));
        }
    }
}

TEST_CASE("pole behaviour near s = 2") {
    // (s-2) Z(s) approaches the residue 2 pi / sqrt(D); bounded and monotone
    const QuadraticForm q(1, 0, 1);
    double prev = std::numeric_limits<double>::infinity();
    for (double s : {1.9, 1.99, 1.999}) {
        const double v = std::abs((s - 2.0) * zeta_general(q, s).z);
        CHECK(v < 2.0 * std::numbers::pi + 1.0);
        CHECK(v < prev + 1e-12);
        prev = v;
    }
    CHECK(prev == doctest::Approx(2.0 * std::numbers::pi).epsilon(2e-3));
}

TEST_CASE("doubling the truncation threshold does not move zeta_s1") {
    FormSampler sampler(7);
    for (int t = 0; t < 100; ++t) {
        const QuadraticForm q = sampler.next();
        const double z33 = zeta_s1(q, ZetaOptions{33.0});
        const double z66 = zeta_s1(q, ZetaOptions{66.0});
        CHECK(std::abs(z33 - z66) < 1e-14);
    }
}

TEST_CASE("zeta_dlp") {
    const QuadraticForm q(1.7, 0.35, 0.9);
    SUBCASE("zero direction") {
        CHECK(zeta_dlp(q, DerivDirection{0, 0, 0}) == doctest::Approx(0.0));
    }
    SUBCASE("B = cA collapses to (c/2) Z_A(1)") {
        for (double c : {0.3, 1.0, -2.0}) {
            const DerivDirection b{c * q.E(), c * q.F(), c * q.G()};
            CHECK(zeta_dlp(q, b) == doctest::Approx(0.5 * c * zeta_s1(q)).epsilon(1e-13));
        }
    }
    SUBCASE("matches finite differences of zeta_general at s = 1") {
        FormSampler sampler(47);
        for (int t = 0; t < 5; ++t) {
            const QuadraticForm qr = sampler.next();
            const DerivDirection b{sampler.uniform(-1, 1), sampler.uniform(-1, 1),
                                   sampler.uniform(-1, 1)};
            const double delta = 1e-5;
            const auto zg = [&](double step) {
                return zeta_general(QuadraticForm(qr.E() + step * b.L, qr.F() + step * b.M,
                                                  qr.G() + step * b.N),
                                    1.0)
                    .z;
            };
            const double fd = (zg(delta) - zg(-delta)) / (2.0 * delta);
            CHECK(zeta_dlp(qr, b) == doctest::Approx(-fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("Euler homogeneity identity for the first derivatives") {
    // (E dE + F dF + G dG) Z(s) = -(s/2) Z(s)
    const QuadraticForm q(1.4, -0.25, 1.1);
    for (double s : {-1.0, 1.0}) {
        FormLattice lat(q);
        const double dE = lat.chain_m1(DerivDirection{1, 0, 0}, 1).boxk_zm1[1];
        (void)dE;
        const auto along = [&](double L, double M, double N) {
            return (s == -1.0) ? lat.chain_m1(DerivDirection{L, M, N}, 1).boxk_zm1[1]
                               : lat.chain_general(DerivDirection{L, M, N}, 1, s).boxk_z[1];
        };
        const double euler = along(q.E(), q.F(), q.G());
        const double z = (s == -1.0) ? lat.zeta_m1() : lat.zeta_s1();
        CHECK(euler == doctest::Approx(-(s / 2.0) * z).epsilon(1e-12));
    }
}
