#include "zetaquad/wigner.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zetaquad {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824926, 0.0622535239386477, 0.0271524594117540,
};

struct Gl16 {
    std::array<double, 16> x, w;
    Gl16(double a, double b) {
        const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
        for (int k = 0; k < 8; ++k) {
            x[2 * k] = mid + rad * kGlNodes[k];
            x[2 * k + 1] = mid - rad * kGlNodes[k];
            w[2 * k] = w[2 * k + 1] = rad * kGlWeights[k];
        }
    }
};

double ipow(double b, int e) {
    double r = 1.0;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

} // namespace

double wigner_oracle(const QuadraticForm& q, int alpha, int beta, int m, int n) {
    if (alpha < 0 || beta < 0 || n < 1)
        throw std::domain_error("wigner_oracle: need alpha, beta >= 0 and n >= 1");
    if (alpha + beta - 2 * m - 1 <= -2)
        throw std::domain_error("wigner_oracle: integrand not integrable at the origin");
    if ((alpha + beta) % 2 == 1) return 0.0; // odd symmetry kills sum and integral

    const double E = q.E(), F = q.F(), G = q.G();
    const double expo = -(m + 0.5);
    const auto f = [&](double u, double v) {
        return ipow(u, alpha) * ipow(v, beta) * std::pow(E * u * u + 2.0 * F * u * v + G * v * v, expo);
    };

    // lattice sum over the half plane, doubled
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const int jlo = (i == 0) ? 1 : -n;
        for (int j = jlo; j <= n; ++j) sum += f(i, j);
    }
    sum *= 2.0;

    // integral: polar panels on the origin square, graded cartesian outside
    const double a = n + 0.5;
    double integral = 0.0;
    for (int oct = 0; oct < 8; ++oct) {
        const double t0 = -kPi / 4.0 + oct * kPi / 4.0;
        const Gl16 tq(t0, t0 + kPi / 4.0);
        for (int it = 0; it < 16; ++it) {
            const double th = tq.x[it];
            const double rmax = 0.5 / std::max(std::abs(std::cos(th)), std::abs(std::sin(th)));
            const Gl16 rq(0.0, rmax);
            double acc = 0.0;
            for (int ir = 0; ir < 16; ++ir) {
                const double r = rq.x[ir];
                acc += rq.w[ir] * f(r * std::cos(th), r * std::sin(th)) * r;
            }
            integral += tq.w[it] * acc;
        }
    }
    std::vector<double> bp{0.5};
    while (bp.back() < a) bp.push_back(std::min(bp.back() * 2.0, a));
    std::vector<double> edges;
    for (auto it = bp.rbegin(); it != bp.rend(); ++it) edges.push_back(-*it);
    for (double b : bp) edges.push_back(b);
    const int nseg = static_cast<int>(edges.size()) - 1;
    const int midseg = nseg / 2;
    std::vector<Gl16> seg;
    seg.reserve(nseg);
    for (int sidx = 0; sidx < nseg; ++sidx) seg.emplace_back(edges[sidx], edges[sidx + 1]);
    for (int su = 0; su < nseg; ++su) {
        for (int sv = 0; sv < nseg; ++sv) {
            if (su == midseg && sv == midseg) continue;
            double acc = 0.0;
            for (int iu = 0; iu < 16; ++iu)
                for (int iv = 0; iv < 16; ++iv)
                    acc += seg[su].w[iu] * seg[sv].w[iv] * f(seg[su].x[iu], seg[sv].x[iv]);
            integral += acc;
        }
    }
    return sum - integral;
}

double wigner_linear_extrapolate(double w1, int n1, double w2, int n2) {
    const double slope = (w2 - w1) / (n2 - n1);
    return w2 - slope * (n2 + 0.5);
}

} // namespace zetaquad
