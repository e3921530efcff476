#include "zetaquad/zeta_derivs.hpp"

#include <cmath>
#include <stdexcept>

namespace zetaquad {

namespace {

double chain_value(const FormLattice& lat, const DerivDirection& dir, int k, double s) {
    if (s == -1.0) return lat.chain_m1(dir, k).boxk_zm1[k];
    return lat.chain_general(dir, k, s).boxk_z[k];
}

} // namespace

double deriv_scalar(const QuadraticForm& q, const DerivDirection& dir, int k, double s,
                    const ZetaOptions& opts) {
    if (k < 1 || k > 4) throw std::domain_error("deriv_scalar: k must be in 1..4");
    if (s == 0.0 || s == 2.0) throw std::domain_error("deriv_scalar: s must avoid {0, 2}");
    FormLattice lat(q, opts);
    return chain_value(lat, dir, k, s);
}

ScalarDerivPair deriv_scalar_pair(const QuadraticForm& q, const DerivDirection& dir, int k,
                                  double s, const ZetaOptions& opts) {
    if (k < 0 || k > 4) throw std::domain_error("deriv_scalar_pair: k must be in 0..4");
    if (s == 0.0 || s == 2.0) throw std::domain_error("deriv_scalar_pair: s must avoid {0, 2}");
    FormLattice lat(q, opts);
    ScalarDerivPair out;
    if (s == -1.0) {
        const auto ch = lat.chain_m1(dir, k);
        out.boxk_z = ch.boxk_zm1[k];
        out.z_plus2 = ch.z1;
        out.box_z_plus2 = ch.box_z1;
    } else {
        const auto ch = lat.chain_general(dir, k, s);
        out.boxk_z = ch.boxk_z[k];
        out.z_plus2 = ch.z_plus2;
        out.box_z_plus2 = ch.box_z_plus2;
    }
    return out;
}

ZetaDerivVector deriv_vector(const QuadraticForm& q, int k, double s, const ZetaOptions& opts) {
    if (k < 1 || k > 4) throw std::domain_error("deriv_vector: k must be in 1..4");
    if (s == 0.0 || s == 2.0) throw std::domain_error("deriv_vector: s must avoid {0, 2}");
    FormLattice lat(q, opts);
    const auto ch = [&](double L, double M, double N, int kk) {
        return chain_value(lat, DerivDirection{L, M, N}, kk, s);
    };
    ZetaDerivVector out;
    out.order = k;
    switch (k) {
    case 1: {
        out.v = {ch(1, 0, 0, 1), 0.5 * ch(0, 1, 0, 1), ch(0, 0, 1, 1)};
        break;
    }
    case 2: {
        const double a = ch(1, 0, 0, 2), b = ch(0, 0.5, 0, 2), c = ch(0, 0, 1, 2);
        const double d = ch(1, 0.5, 0, 2), e = ch(0, 0.5, 1, 2);
        out.v = {a, (d - a - b) / 2.0, b, (e - b - c) / 2.0, c};
        break;
    }
    case 3: {
        const double a = ch(1, 0, 0, 3), b = ch(0, 0.5, 0, 3), c = ch(0, 0, 1, 3);
        const double d = ch(1, 0.5, 0, 3), e = ch(1, -0.5, 0, 3);
        const double f = ch(0, 0.5, 1, 3), g = ch(0, -0.5, 1, 3);
        out.v = {a, (d - e - 2.0 * b) / 6.0, (d + e - 2.0 * a) / 6.0, b,
                 (f + g - 2.0 * c) / 6.0, (f - g - 2.0 * b) / 6.0, c};
        break;
    }
    default: {
        // a_{p,q,r} = box^4 along (p, q/2, r); M^{-1} combines each axis block
        const double aEF[5] = {ch(1, 0, 0, 4), ch(1, 0.5, 0, 4), ch(1, 1, 0, 4),
                               ch(1, -0.5, 0, 4), ch(0, 0.5, 0, 4)};
        const double aGF[5] = {ch(0, 0, 1, 4), ch(0, 0.5, 1, 4), ch(0, 1, 1, 4),
                               ch(0, -0.5, 1, 4), ch(0, 0.5, 0, 4)};
        constexpr double minv[5][5] = {
            {1, 0, 0, 0, 0},
            {-1.0 / 8, 1.0 / 4, -1.0 / 24, -1.0 / 12, 1.0 / 2},
            {-1.0 / 6, 1.0 / 12, 0, 1.0 / 12, -1.0 / 6},
            {1.0 / 8, -1.0 / 8, 1.0 / 24, -1.0 / 24, -1.0 / 2},
            {0, 0, 0, 0, 1},
        };
        double vEF[5] = {}, vGF[5] = {};
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) {
                vEF[r] += minv[r][c] * aEF[c];
                vGF[r] += minv[r][c] * aGF[c];
            }
        out.v = {vEF[0], vEF[1], vEF[2], vEF[3], vEF[4], vGF[3], vGF[2], vGF[1], vGF[0]};
        break;
    }
    }
    return out;
}

NodeZetaTable node_zeta_table(const QuadraticForm& q, const ZetaOptions& opts) {
    FormLattice lat(q, opts);
    struct Dir { double L, M, N; };
    // union of directions needed by box^(2), box^(3) and box^(4)
    constexpr Dir dirs[9] = {{1, 0, 0},   {0, 0.5, 0}, {0, 0, 1},  {1, 0.5, 0}, {1, -0.5, 0},
                             {0, 0.5, 1}, {0, -0.5, 1}, {1, 1, 0}, {0, 1, 1}};
    FormLattice::ChainResult ch[9];
    for (int i = 0; i < 9; ++i)
        ch[i] = lat.chain_m1(DerivDirection{dirs[i].L, dirs[i].M, dirs[i].N}, 4);

    NodeZetaTable t;
    t.zm1 = ch[0].boxk_zm1[0];
    t.z1 = ch[0].z1;
    t.box1_zm1 = {ch[0].boxk_zm1[1], ch[1].boxk_zm1[1], ch[2].boxk_zm1[1]};
    t.box1_z1 = {ch[0].box_z1, ch[1].box_z1, ch[2].box_z1};
    // (dE, dF/2, dG): the (0,1/2,0) chain is already dF/2 at first order
    {
        const double a = ch[0].boxk_zm1[2], b = ch[1].boxk_zm1[2], c = ch[2].boxk_zm1[2];
        const double d = ch[3].boxk_zm1[2], e = ch[5].boxk_zm1[2];
        t.box2_zm1 = {a, (d - a - b) / 2.0, b, (e - b - c) / 2.0, c};
    }
    {
        const double a = ch[0].boxk_zm1[3], b = ch[1].boxk_zm1[3], c = ch[2].boxk_zm1[3];
        const double d = ch[3].boxk_zm1[3], e = ch[4].boxk_zm1[3];
        const double f = ch[5].boxk_zm1[3], g = ch[6].boxk_zm1[3];
        t.box3_zm1 = {a, (d - e - 2.0 * b) / 6.0, (d + e - 2.0 * a) / 6.0, b,
                      (f + g - 2.0 * c) / 6.0, (f - g - 2.0 * b) / 6.0, c};
    }
    {
        const double aEF[5] = {ch[0].boxk_zm1[4], ch[3].boxk_zm1[4], ch[7].boxk_zm1[4],
                               ch[4].boxk_zm1[4], ch[1].boxk_zm1[4]};
        const double aGF[5] = {ch[2].boxk_zm1[4], ch[5].boxk_zm1[4], ch[8].boxk_zm1[4],
                               ch[6].boxk_zm1[4], ch[1].boxk_zm1[4]};
        constexpr double minv[5][5] = {
            {1, 0, 0, 0, 0},
            {-1.0 / 8, 1.0 / 4, -1.0 / 24, -1.0 / 12, 1.0 / 2},
            {-1.0 / 6, 1.0 / 12, 0, 1.0 / 12, -1.0 / 6},
            {1.0 / 8, -1.0 / 8, 1.0 / 24, -1.0 / 24, -1.0 / 2},
            {0, 0, 0, 0, 1},
        };
        double vEF[5] = {}, vGF[5] = {};
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) {
                vEF[r] += minv[r][c] * aEF[c];
                vGF[r] += minv[r][c] * aGF[c];
            }
        t.box4_zm1 = {vEF[0], vEF[1], vEF[2], vEF[3], vEF[4], vGF[3], vGF[2], vGF[1], vGF[0]};
    }
    return t;
}

} // namespace zetaquad
