#include "zetaquad/weights.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace zetaquad {

StencilSets stencil_sets(int K) {
    if (K < 1) throw std::domain_error("stencil_sets: K must be >= 1");
    StencilSets out;
    for (int mu = -K; mu <= K; ++mu)
        for (int nu = -K; nu <= K; ++nu) {
            if (std::abs(mu) + std::abs(nu) <= K && std::max(std::abs(mu), std::abs(nu)) < K)
                out.curved.emplace_back(mu, nu);
            if (std::abs(mu) + std::abs(nu) <= K - 1) out.flat.emplace_back(mu, nu);
        }
    return out;
}

std::complex<double> CorrectionStencil::weight_at(int mu, int nu) const {
    for (std::size_t k = 0; k < offsets.size(); ++k)
        if (offsets[k].first == mu && offsets[k].second == nu) return weights[k];
    return {0.0, 0.0};
}

namespace {

constexpr double kPi = 3.14159265358979323846;

QuadraticForm anisotropic_rescale(double E, double F, double G, double h1, double h2) {
    return QuadraticForm(E * h1 / h2, F, G * h2 / h1);
}

template <std::size_t N>
double dot(const std::array<double, N>& a, const std::array<double, N>& b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < N; ++k) acc += a[k] * b[k];
    return acc;
}

// basis sequences for the convolution shifts (1,0)*seq etc.
constexpr std::array<double, 2> kE0{1.0, 0.0};
constexpr std::array<double, 2> kE1{0.0, 1.0};
constexpr std::array<double, 3> kB0{1.0, 0.0, 0.0};
constexpr std::array<double, 3> kB1{0.0, 1.0, 0.0};
constexpr std::array<double, 3> kB2{0.0, 0.0, 1.0};

} // namespace

Complex tau_oh3(const KernelSpec& spec, const SurfaceJet& jet, double h1, double h2,
                const ZetaOptions& opts) {
    spec.validate();
    if (!(h1 > 0.0) || !(h2 > 0.0)) throw std::domain_error("tau_oh3: spacings must be positive");
    const double hgeo = std::sqrt(h1 * h2);
    const QuadraticForm qa = anisotropic_rescale(jet.E, jet.F, jet.G, h1, h2);
    switch (spec.layer) {
    case Layer::SingleLayer: {
        const double z1 = zeta_s1(qa, opts);
        Complex tau{-z1 * hgeo, 0.0};
        if (spec.helmholtz()) tau += Complex(0.0, 1.0) * spec.kappa * hgeo * hgeo;
        return tau;
    }
    case Layer::DoubleLayer: {
        // same rescale applied to the second fundamental form
        const DerivDirection b{jet.e2 * h1 / h2, jet.f2, jet.g2 * h2 / h1};
        return Complex(-zeta_dlp(qa, b, opts) * hgeo, 0.0);
    }
    case Layer::SingleLayerNormalGrad: {
        // leading term of the nine-point D0: (L2C~ . box^(1)) Z~(1) * h
        FormLattice lat(qa, opts);
        const auto chE = lat.chain_m1(DerivDirection{1, 0, 0}, 1);
        const auto chF = lat.chain_m1(DerivDirection{0, 0.5, 0}, 1);
        const auto chG = lat.chain_m1(DerivDirection{0, 0, 1}, 1);
        const LCoeffs lc = l_coeffs(jet);
        const std::array<double, 3> l2c{lc.l2c[0] * h1 / h2, lc.l2c[1], lc.l2c[2] * h2 / h1};
        const double d0 = l2c[0] * chE.box_z1 + l2c[1] * chF.box_z1 + l2c[2] * chG.box_z1;
        return Complex(d0 * hgeo, 0.0);
    }
    }
    return {};
}

DQuantities d_quantities(const KernelSpec& spec, const LCoeffs& lc, const NodeZetaTable& t,
                         double h) {
    spec.validate();
    DQuantities out;
    out.order = 5;
    out.kernel = spec;
    const double h2 = h * h, h3 = h2 * h;
    const Complex kh = spec.kappa * h;
    Complex d0;
    double c01, c1, c2, d3, d4, d5;
    switch (spec.layer) {
    case Layer::SingleLayer: {
        c01 = -(2.0 * dot(lc.l4a, t.box2_zm1) + dot(lc.l6a, t.box3_zm1));
        c1 = -2.0 * dot(conv(kE0, lc.l3a), t.box2_zm1);
        c2 = -2.0 * dot(conv(kE1, lc.l3a), t.box2_zm1);
        d0 = -t.z1 * h + c01 * h3;
        d3 = -2.0 * t.box1_zm1[0] * h;
        d4 = -2.0 * t.box1_zm1[2] * h;
        d5 = -2.0 * t.box1_zm1[1] * h; // -dF Z(-1) h, box1[1] = dF/2
        if (spec.helmholtz()) d0 += (Complex(0.0, 1.0) * kh + kh * kh * 0.5 * t.zm1) * h;
        break;
    }
    case Layer::DoubleLayer: {
        c01 = dot(lc.l4b, t.box2_zm1) + 2.0 * dot(lc.l6b, t.box3_zm1) +
              dot(conv(lc.l6a, lc.l2b), t.box4_zm1);
        c1 = 2.0 * (dot(conv(kE0, lc.l3b), t.box2_zm1) + dot(conv(conv(kE0, lc.l3a), lc.l2b), t.box3_zm1));
        c2 = 2.0 * (dot(conv(kE1, lc.l3b), t.box2_zm1) + dot(conv(conv(kE1, lc.l3a), lc.l2b), t.box3_zm1));
        d0 = dot(lc.l2b, t.box1_z1) * h + c01 * h3;
        d3 = 2.0 * dot(conv(kB0, lc.l2b), t.box2_zm1) * h;
        d4 = 2.0 * dot(conv(kB2, lc.l2b), t.box2_zm1) * h;
        d5 = 2.0 * dot(conv(kB1, lc.l2b), t.box2_zm1) * h;
        if (spec.helmholtz()) d0 -= kh * kh * 0.5 * dot(lc.l2b, t.box1_zm1) * h;
        break;
    }
    default: {
        c01 = dot(lc.l4c, t.box2_zm1) + 2.0 * dot(lc.l6c, t.box3_zm1) +
              dot(conv(lc.l6a, lc.l2c), t.box4_zm1);
        c1 = 2.0 * (dot(conv(kE0, lc.l3c), t.box2_zm1) + dot(conv(conv(kE0, lc.l3a), lc.l2c), t.box3_zm1));
        c2 = 2.0 * (dot(conv(kE1, lc.l3c), t.box2_zm1) + dot(conv(conv(kE1, lc.l3a), lc.l2c), t.box3_zm1));
        d0 = dot(lc.l2c, t.box1_z1) * h + c01 * h3;
        d3 = 2.0 * dot(conv(kB0, lc.l2c), t.box2_zm1) * h;
        d4 = 2.0 * dot(conv(kB2, lc.l2c), t.box2_zm1) * h;
        d5 = 2.0 * dot(conv(kB1, lc.l2c), t.box2_zm1) * h;
        if (spec.helmholtz()) d0 -= kh * kh * 0.5 * dot(lc.l2c, t.box1_zm1) * h;
        break;
    }
    }
    out.d = {d0, Complex(c1 * h2), Complex(c2 * h2), Complex(d3), Complex(d4), Complex(d5)};
    return out;
}

DQuantities d_quantities(const KernelSpec& spec, const SurfaceJet& jet, double h,
                         const ZetaOptions& opts) {
    if (!(h > 0.0)) throw std::domain_error("d_quantities: h must be positive");
    const NodeZetaTable t = node_zeta_table(jet.first_form(), opts);
    return d_quantities(spec, l_coeffs(jet), t, h);
}

CorrectionStencil solve_stencil(const DQuantities& d) {
    if (d.order != 5) throw std::domain_error("solve_stencil: order-5 D-quantities required");
    CorrectionStencil st;
    st.order_k = 2;
    st.offsets = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    const Complex d0 = d[0], d1 = d[1], d2 = d[2], d3 = d[3], d4 = d[4], d5 = d[5];
    st.weights = {d0 - d3 - d4,
                  (d3 + d1) / 2.0, (d3 - d1) / 2.0,
                  (d4 + d2) / 2.0, (d4 - d2) / 2.0,
                  d5 / 4.0, d5 / 4.0, -d5 / 4.0, -d5 / 4.0};
    return st;
}

CorrectionStencil solve_stencil_numeric(const DQuantities& d) {
    // rows: moments 1, u, v, u^2, v^2, uv; then symmetry and normalization
    // columns: tau at (0,0),(1,0),(-1,0),(0,1),(0,-1),(1,1),(-1,-1),(1,-1),(-1,1)
    Eigen::Matrix<double, 9, 9> A;
    A << 1, 1, 1, 1, 1, 1, 1, 1, 1,
         0, 1, -1, 0, 0, 1, -1, 1, -1,
         0, 0, 0, 1, -1, 1, -1, -1, 1,
         0, 1, 1, 0, 0, 1, 1, 1, 1,
         0, 0, 0, 1, 1, 1, 1, 1, 1,
         0, 0, 0, 0, 0, 1, 1, -1, -1,
         0, 0, 0, 0, 0, 1, 1, 1, 1,
         0, 0, 0, 0, 0, 1, -1, 0, 0,
         0, 0, 0, 0, 0, 0, 0, 1, -1;
    Eigen::Matrix<std::complex<double>, 9, 1> rhs;
    rhs << d[0], d[1], d[2], d[3], d[4], d[5], 0.0, 0.0, 0.0;
    const Eigen::Matrix<std::complex<double>, 9, 1> tau =
        A.cast<std::complex<double>>().fullPivLu().solve(rhs);
    CorrectionStencil st;
    st.order_k = 2;
    st.offsets = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    st.weights.assign(tau.data(), tau.data() + 9);
    return st;
}

CorrectionStencil node_stencil(const KernelSpec& spec, const SurfaceJet& jet, double h1, double h2,
                               int order, const ZetaOptions& opts) {
    if (order == 3) {
        CorrectionStencil st;
        st.order_k = 1;
        st.offsets = {{0, 0}};
        st.weights = {tau_oh3(spec, jet, h1, h2, opts)};
        return st;
    }
    if (order != 5) throw std::domain_error("node_stencil: order must be 3 or 5");
    if (std::abs(h1 - h2) > 1e-12 * std::max(h1, h2))
        throw std::domain_error("node_stencil: order 5 requires an isotropic grid");
    return solve_stencil(d_quantities(spec, jet, h1, opts));
}

} // namespace zetaquad
