#include "zetaquad/epstein_zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zetaquad {

namespace {

constexpr double kPi = std::numbers::pi;

// C_s(D) = pi^s / (Gamma(s) sqrt(D)^s); zero at the Gamma poles
// (nonpositive integer s), which produces the trivial zeros of Z.
double c_factor(double s, double det) {
    if (s <= 0.0 && std::abs(s - std::round(s)) < 1e-13) return 0.0;
    return std::pow(kPi / std::sqrt(det), s) / std::tgamma(s);
}

} // namespace

FormLattice::FormLattice(const QuadraticForm& q, const ZetaOptions& opts)
    : form_(q), det_(q.det()), sqrt_det_(std::sqrt(q.det())), x_cut_(opts.x_cut) {
    const double et = q.E() / sqrt_det_, ft = q.F() / sqrt_det_, gt = q.G() / sqrt_det_;
    const double lam = q.lambda_min();
    radius_ = static_cast<int>(std::floor(std::sqrt(x_cut_ / (kPi * lam))));
    if (radius_ > 100000)
        throw std::domain_error("FormLattice: form too close to degenerate (truncation radius exceeds cap)");
    pts_.reserve(static_cast<std::size_t>(radius_) * (2 * radius_ + 1) + radius_);
    for (int i = 0; i <= radius_; ++i) {
        const int jlo = (i == 0) ? 1 : -radius_;
        for (int j = jlo; j <= radius_; ++j) {
            const double qa = et * i * i + 2.0 * ft * i * j + gt * j * j;
            pts_.push_back(Point{i, j, qa});
        }
    }
    ladders_.reserve(pts_.size());
    for (const Point& p : pts_) ladders_.push_back(half_integer_ladder(p.qa));
}

double FormLattice::zeta_s1() const {
    // Z(1) = D^{-1/4} (-4 + 2 sum' g(1/2, Qt)); stored half lattice counts twice.
    double acc = 0.0;
    for (std::size_t k = 0; k < pts_.size(); ++k) acc += ladders_[k].g[1];
    return std::pow(det_, -0.25) * (-4.0 + 4.0 * acc);
}

double FormLattice::zeta_m1() const {
    // s = -1: s1 = -1/2, s2 = 3/2, C_{-1/2}(D) = -D^{1/4} / (2 pi).
    double acc = 0.0;
    for (std::size_t k = 0; k < pts_.size(); ++k) acc += ladders_[k].g[0] + ladders_[k].g[2];
    const double c = -std::pow(det_, 0.25) / (2.0 * kPi);
    return c * (-2.0 / 3.0 + 2.0 + 2.0 * acc);
}

double FormLattice::zeta_dlp(const DerivDirection& b) const {
    const auto [hd, kd] = curvature_scalars(form_, b);
    (void)kd;
    double acc = 0.0;
    for (std::size_t k = 0; k < pts_.size(); ++k) {
        const Point& p = pts_[k];
        const double qb = (b.L * p.i * p.i + 2.0 * b.M * p.i * p.j + b.N * p.j * p.j) / sqrt_det_;
        const double ratio = qb / p.qa;
        acc += ratio * ladders_[k].g[1] + (2.0 * ratio - 2.0 * hd) * ladders_[k].exp_term;
    }
    return std::pow(det_, -0.25) * (-2.0 * hd + 2.0 * acc);
}

FormLattice::ChainResult FormLattice::chain_m1(const DerivDirection& dir, int kmax) const {
    if (kmax < 0 || kmax > 4) throw std::domain_error("chain_m1: kmax must be in 0..4");
    const auto [hd, kd] = curvature_scalars(form_, dir);
    const double dh1 = kd - 2.0 * hd * hd;
    const double dh2 = -2.0 * hd * kd - 4.0 * hd * dh1;
    const double dh3 = (4.0 * hd * hd - 2.0 * dh1) * kd - 4.0 * dh1 * dh1 - 4.0 * hd * dh2;

    const double s1 = -0.5;
    const double cm = -std::pow(det_, 0.25) / (2.0 * kPi); // C_{-1/2}(D)
    const double cp = cm * kPi / (s1 * sqrt_det_);         // C_{1/2}(D) = D^{-1/4}

    // ladder index for s = -1/2 + k; pair sums g(s1+j) + g(s2+j) = g[j] + g[j+2]
    double sum0 = 0.0, s1a = 0.0;
    double s2a = 0.0, s2b = 0.0;
    double s3a = 0.0, s3b = 0.0, s3c = 0.0;
    double s4a = 0.0, s4b = 0.0, s4c = 0.0, s4d = 0.0;
    double comp0 = 0.0, comp1 = 0.0;
    for (std::size_t k = 0; k < pts_.size(); ++k) {
        const Point& p = pts_[k];
        const auto& g = ladders_[k].g;
        const double qa = p.qa;
        const double qb = (dir.L * p.i * p.i + 2.0 * dir.M * p.i * p.j + dir.N * p.j * p.j) / sqrt_det_;
        const double dqb1 = -hd * qb;
        const double dqb2 = (-dh1 + hd * hd) * qb;
        const double dqb3 = (-dh2 + 3.0 * hd * dh1 - hd * hd * hd) * qb;
        const double dqa1 = qb - hd * qa;
        const double dqa2 = dqb1 - (dh1 * qa + hd * dqa1);
        const double dqa3 = dqb2 - (dh2 * qa + 2.0 * dh1 * dqa1 + hd * dqa2);
        const double dqa4 = dqb3 - (dh3 * qa + 3.0 * dh2 * dqa1 + 3.0 * dh1 * dqa2 + hd * dqa3);
        const double p1 = kPi * dqa1, p2 = kPi * dqa2, p3 = kPi * dqa3, p4 = kPi * dqa4;
        const double gk0 = g[0] + g[2], gk1 = g[1] + g[3], gk2 = g[2] + g[4];
        const double gk3 = g[3] + g[5], gk4 = g[4] + g[6];
        sum0 += gk0;
        s1a += gk1 * p1;
        if (kmax >= 2) { s2a += gk2 * p1 * p1; s2b += gk1 * p2; }
        if (kmax >= 3) {
            s3a += gk3 * p1 * p1 * p1;
            s3b += gk2 * 3.0 * p1 * p2;
            s3c += gk1 * p3;
        }
        if (kmax >= 4) {
            s4a += gk4 * p1 * p1 * p1 * p1;
            s4b += gk3 * 6.0 * p1 * p1 * p2;
            s4c += gk2 * (4.0 * p1 * p3 + 3.0 * p2 * p2);
            s4d += gk1 * p4;
        }
        comp0 += g[1];             // g(s1+1) = g(-s1) = g(1/2) twice in the companion bracket
        comp1 += g[2] * p1;        // companion first derivative uses g(s1+2) + g(s2) = 2 g(3/2)
    }
    // stored half lattice counts twice
    sum0 *= 2.0; s1a *= 2.0; s2a *= 2.0; s2b *= 2.0;
    s3a *= 2.0; s3b *= 2.0; s3c *= 2.0;
    s4a *= 2.0; s4b *= 2.0; s4c *= 2.0; s4d *= 2.0;
    comp0 *= 2.0; comp1 *= 2.0;

    ChainResult out;
    out.kmax = kmax;
    const double z = cm * (-2.0 / 3.0 + 2.0 + sum0);
    out.boxk_zm1[0] = z;
    const double sh = s1 * hd;
    const double bz1 = -sh * z - cm * s1a;
    if (kmax >= 1) out.boxk_zm1[1] = bz1;
    const double bz2 = -(s1 * dh1 + sh * sh) * z - 2.0 * sh * bz1 + cm * s2a - cm * s2b;
    if (kmax >= 2) out.boxk_zm1[2] = bz2;
    const double bz3 = -(s1 * dh2 + 3.0 * s1 * s1 * hd * dh1 + sh * sh * sh) * z
                       - (3.0 * s1 * dh1 + 3.0 * sh * sh) * bz1 - 3.0 * sh * bz2
                       - cm * s3a + cm * s3b - cm * s3c;
    if (kmax >= 3) out.boxk_zm1[3] = bz3;
    if (kmax >= 4) {
        out.boxk_zm1[4] =
            -(s1 * dh3 + 3.0 * s1 * s1 * dh1 * dh1 + 4.0 * s1 * s1 * hd * dh2 +
              6.0 * s1 * s1 * s1 * hd * hd * dh1 + sh * sh * sh * sh) * z
            - (4.0 * s1 * dh2 + 12.0 * s1 * s1 * hd * dh1 + 4.0 * sh * sh * sh) * bz1
            - (6.0 * s1 * dh1 + 6.0 * sh * sh) * bz2 - 4.0 * sh * bz3
            + cm * s4a - cm * s4b + cm * s4c - cm * s4d;
    }
    // companions Z(s+2) = Z(1) and box Z(1)
    out.z1 = cp * (1.0 / s1 - 1.0 / (s1 + 1.0) + 2.0 * comp0);
    out.box_z1 = -(s1 + 1.0) * hd * out.z1 - cp * 2.0 * comp1;
    return out;
}

double FormLattice::zeta_general(double s) const {
    if (s == 2.0) throw std::domain_error("zeta_general: pole at s = 2");
    if (s == 0.0) return -1.0;
    const double s1 = s / 2.0, s2 = 1.0 - s1;
    double acc = 0.0;
    for (const Point& p : pts_) {
        const GammaChain ch = gamma_chain_general(s1, p.qa, 0);
        acc += ch.g1[0] + ch.g2[0];
    }
    return c_factor(s1, det_) * (-1.0 / s2 - 1.0 / s1 + 2.0 * acc);
}

FormLattice::GeneralChainResult FormLattice::chain_general(const DerivDirection& dir, int kmax,
                                                           double s) const {
    if (s == 0.0 || s == 2.0)
        throw std::domain_error("chain_general: s must avoid {0, 2}");
    if (kmax < 0 || kmax > 4) throw std::domain_error("chain_general: kmax must be in 0..4");
    const auto [hd, kd] = curvature_scalars(form_, dir);
    const double dh1 = kd - 2.0 * hd * hd;
    const double dh2 = -2.0 * hd * kd - 4.0 * hd * dh1;
    const double dh3 = (4.0 * hd * hd - 2.0 * dh1) * kd - 4.0 * dh1 * dh1 - 4.0 * hd * dh2;

    const double s1 = s / 2.0, s2 = 1.0 - s1;
    const double c = c_factor(s1, det_);
    const double cp = c_factor(s1 + 1.0, det_);

    double sum0 = 0.0, s1a = 0.0, s2a = 0.0, s2b = 0.0;
    double s3a = 0.0, s3b = 0.0, s3c = 0.0;
    double s4a = 0.0, s4b = 0.0, s4c = 0.0, s4d = 0.0;
    double comp0 = 0.0, comp1 = 0.0;
    for (const Point& p : pts_) {
        // need g(s1 + j) for j <= kmax and g(s2 + j); one extra level of g1
        // covers the companion pair (g(s1+1), g(-s1) = g(s2)) and its
        // derivative (g(s1+2), g(s2+1)).
        const GammaChain c1 = gamma_chain_general(s1, p.qa, std::min(4, kmax + 2));
        const GammaChain c2 = gamma_chain_general(s2, p.qa, kmax);
        const double qa = p.qa;
        const double qb = (dir.L * p.i * p.i + 2.0 * dir.M * p.i * p.j + dir.N * p.j * p.j) / sqrt_det_;
        const double dqb1 = -hd * qb;
        const double dqb2 = (-dh1 + hd * hd) * qb;
        const double dqb3 = (-dh2 + 3.0 * hd * dh1 - hd * hd * hd) * qb;
        const double dqa1 = qb - hd * qa;
        const double dqa2 = dqb1 - (dh1 * qa + hd * dqa1);
        const double dqa3 = dqb2 - (dh2 * qa + 2.0 * dh1 * dqa1 + hd * dqa2);
        const double dqa4 = dqb3 - (dh3 * qa + 3.0 * dh2 * dqa1 + 3.0 * dh1 * dqa2 + hd * dqa3);
        const double p1 = kPi * dqa1, p2 = kPi * dqa2, p3 = kPi * dqa3, p4 = kPi * dqa4;
        const auto gk = [&](int j) { return c1.g1[j] + c2.g1[j]; };
        sum0 += gk(0);
        if (kmax >= 1) s1a += gk(1) * p1;
        if (kmax >= 2) { s2a += gk(2) * p1 * p1; s2b += gk(1) * p2; }
        if (kmax >= 3) {
            s3a += gk(3) * p1 * p1 * p1;
            s3b += gk(2) * 3.0 * p1 * p2;
            s3c += gk(1) * p3;
        }
        if (kmax >= 4) {
            s4a += gk(4) * p1 * p1 * p1 * p1;
            s4b += gk(3) * 6.0 * p1 * p1 * p2;
            s4c += gk(2) * (4.0 * p1 * p3 + 3.0 * p2 * p2);
            s4d += gk(1) * p4;
        }
        // g(-s1) by one downward step from g(s2)
        const double y = kPi * p.qa;
        comp0 += c1.g1[1] + (c2.g1[0] * y - std::exp(-y)) / (-s1);
        if (kmax >= 1) comp1 += (c1.g1[2] + c2.g1[0]) * p1;
    }
    sum0 *= 2.0; s1a *= 2.0; s2a *= 2.0; s2b *= 2.0;
    s3a *= 2.0; s3b *= 2.0; s3c *= 2.0;
    s4a *= 2.0; s4b *= 2.0; s4c *= 2.0; s4d *= 2.0;
    comp0 *= 2.0; comp1 *= 2.0;

    GeneralChainResult out;
    out.kmax = kmax;
    const double z = c * (-1.0 / s2 - 1.0 / s1 + sum0);
    out.boxk_z[0] = z;
    const double sh = s1 * hd;
    const double bz1 = -sh * z - c * s1a;
    if (kmax >= 1) out.boxk_z[1] = bz1;
    const double bz2 = -(s1 * dh1 + sh * sh) * z - 2.0 * sh * bz1 + c * s2a - c * s2b;
    if (kmax >= 2) out.boxk_z[2] = bz2;
    const double bz3 = -(s1 * dh2 + 3.0 * s1 * s1 * hd * dh1 + sh * sh * sh) * z
                       - (3.0 * s1 * dh1 + 3.0 * sh * sh) * bz1 - 3.0 * sh * bz2
                       - c * s3a + c * s3b - c * s3c;
    if (kmax >= 3) out.boxk_z[3] = bz3;
    if (kmax >= 4) {
        out.boxk_z[4] =
            -(s1 * dh3 + 3.0 * s1 * s1 * dh1 * dh1 + 4.0 * s1 * s1 * hd * dh2 +
              6.0 * s1 * s1 * s1 * hd * hd * dh1 + sh * sh * sh * sh) * z
            - (4.0 * s1 * dh2 + 12.0 * s1 * s1 * hd * dh1 + 4.0 * sh * sh * sh) * bz1
            - (6.0 * s1 * dh1 + 6.0 * sh * sh) * bz2 - 4.0 * sh * bz3
            + c * s4a - c * s4b + c * s4c - c * s4d;
    }
    if (s + 2.0 == 0.0) {
        out.z_plus2 = -1.0;
        out.box_z_plus2 = 0.0;
    } else {
        out.z_plus2 = cp * (1.0 / s1 - 1.0 / (s1 + 1.0) + comp0);
        out.box_z_plus2 = -(s1 + 1.0) * hd * out.z_plus2 - cp * comp1;
    }
    return out;
}

double zeta_s1(const QuadraticForm& q, const ZetaOptions& opts) {
    return FormLattice(q, opts).zeta_s1();
}

ZetaPair zeta_general(const QuadraticForm& q, double s, const ZetaOptions& opts) {
    if (s == 2.0) throw std::domain_error("zeta_general: pole at s = 2");
    FormLattice lat(q, opts);
    ZetaPair out;
    out.z = (s == 0.0) ? -1.0 : lat.zeta_general(s);
    if (s + 2.0 != 2.0) {
        out.z_plus2 = (s + 2.0 == 0.0) ? -1.0 : lat.zeta_general(s + 2.0);
    }
    return out;
}

double zeta_dlp(const QuadraticForm& q, const DerivDirection& b, const ZetaOptions& opts) {
    return FormLattice(q, opts).zeta_dlp(b);
}

} // namespace zetaquad
