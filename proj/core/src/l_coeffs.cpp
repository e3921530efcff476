#include "zetaquad/l_coeffs.hpp"

namespace zetaquad {

std::vector<double> conv(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

LCoeffs l_coeffs(const SurfaceJet& j) {
    const Vec3 &ru = j.ru, &rv = j.rv;
    const Vec3 &ruu = j.ruu, &ruv = j.ruv, &rvv = j.rvv;
    const Vec3 &ruuu = j.ruuu, &ruuv = j.ruuv, &ruvv = j.ruvv, &rvvv = j.rvvv;
    const Vec3 cr = ru.cross(rv);
    const Vec3& n = j.n;

    LCoeffs lc;
    lc.l3a = {ru.dot(ruu),
              2.0 * ru.dot(ruv) + rv.dot(ruu),
              2.0 * ruv.dot(rv) + ru.dot(rvv),
              rv.dot(rvv)};
    lc.l4a = {ru.dot(ruuu) / 3.0 + ruu.dot(ruu) / 4.0,
              rv.dot(ruuu) / 3.0 + ru.dot(ruuv) + ruu.dot(ruv),
              rv.dot(ruuv) + ru.dot(ruvv) + ruu.dot(rvv) / 2.0 + ruv.dot(ruv),
              rv.dot(ruvv) + ru.dot(rvvv) / 3.0 + ruv.dot(rvv),
              rv.dot(rvvv) / 3.0 + rvv.dot(rvv) / 4.0};
    lc.l6a = conv(lc.l3a, lc.l3a);

    lc.l2b = {cr.dot(ruu), 2.0 * cr.dot(ruv), cr.dot(rvv)};
    lc.l3b = {(2.0 / 3.0) * cr.dot(ruuu) - ru.cross(ruu).dot(ruv),
              2.0 * cr.dot(ruuv) - ru.cross(ruu).dot(rvv) - rv.cross(ruu).dot(ruv),
              2.0 * cr.dot(ruvv) - ru.cross(ruv).dot(rvv) - rv.cross(ruu).dot(rvv),
              (2.0 / 3.0) * cr.dot(rvvv) - rv.cross(ruv).dot(rvv)};
    lc.l4b = {
        (-6.0 * ru.cross(ruu).dot(j.ruuv) + 8.0 * ru.cross(ruv).dot(ruuu) +
         3.0 * cr.dot(j.ruuuu) - 2.0 * rv.cross(ruu).dot(ruuu)) / 6.0,
        (2.0 / 3.0) * (-3.0 * ru.cross(ruu).dot(ruvv) + 2.0 * ru.cross(rvv).dot(ruuu) +
                       3.0 * cr.dot(j.ruuuv) + 3.0 * ru.cross(ruv).dot(ruuv) -
                       3.0 * rv.cross(ruu).dot(ruuv) + rv.cross(ruv).dot(ruuu)),
        (-ru.cross(ruu).dot(rvvv) + 3.0 * ru.cross(rvv).dot(ruuv) + 3.0 * cr.dot(j.ruuvv) -
         3.0 * rv.cross(ruu).dot(ruvv) + rv.cross(rvv).dot(ruuu)),
        (2.0 / 3.0) * (-ru.cross(ruv).dot(rvvv) + 3.0 * ru.cross(rvv).dot(ruvv) +
                       3.0 * cr.dot(j.ruvvv) - 2.0 * rv.cross(ruu).dot(rvvv) +
                       3.0 * rv.cross(rvv).dot(ruuv) - 3.0 * rv.cross(ruv).dot(ruvv)),
        (3.0 * cr.dot(j.rvvvv) + 2.0 * ru.cross(rvv).dot(rvvv) -
         8.0 * rv.cross(ruv).dot(rvvv) + 6.0 * rv.cross(rvv).dot(ruvv)) / 6.0};
    lc.l6b = conv(lc.l4a, lc.l2b);
    {
        const auto t = conv(lc.l3a, lc.l3b);
        for (std::size_t k = 0; k < 7; ++k) lc.l6b[k] += t[k];
    }

    lc.l2c = {n.dot(ruu), 2.0 * n.dot(ruv), n.dot(rvv)};
    lc.l3c = {n.dot(ruuu) / 3.0, n.dot(ruuv), n.dot(ruvv), n.dot(rvvv) / 3.0};
    lc.l4c = {n.dot(j.ruuuu) / 6.0, 2.0 * n.dot(j.ruuuv) / 3.0, n.dot(j.ruuvv),
              2.0 * n.dot(j.ruvvv) / 3.0, n.dot(j.rvvvv) / 6.0};
    lc.l6c = conv(lc.l4a, lc.l2c);
    {
        const auto t = conv(lc.l3a, lc.l3c);
        for (std::size_t k = 0; k < 7; ++k) lc.l6c[k] += t[k];
    }
    return lc;
}

} // namespace zetaquad
