#pragma once

#include "zetaquad/quadratic_form.hpp"

#include <Eigen/Dense>
#include <array>
#include <memory>

namespace zetaquad {

using Vec3 = Eigen::Vector3d;

/// Position and parametric derivatives of r(u,v) through order 4 at one
/// node, plus the derived frame quantities every kernel and weight needs.
struct SurfaceJet {
    Vec3 r;
    Vec3 ru, rv;
    Vec3 ruu, ruv, rvv;
    Vec3 ruuu, ruuv, ruvv, rvvv;
    Vec3 ruuuu, ruuuv, ruuvv, ruvvv, rvvvv;

    Vec3 n;       // unit normal (ru x rv)/|ru x rv|
    double jac;   // |ru x rv|
    double E, F, G;                   // first fundamental form
    double e2, f2, g2;                // second fundamental form (n.ruu, n.ruv, n.rvv)

    QuadraticForm first_form() const { return QuadraticForm(E, F, G); }
    DerivDirection second_form() const { return DerivDirection{e2, f2, g2}; }

    /// Fills n, jac and both fundamental forms from the stored partials.
    void finalize();
};

/// Smooth parametric surface over a rectangle, with analytic derivatives
/// through order 4. Immutable after construction; jet evaluation is pure.
class Surface {
public:
    virtual ~Surface() = default;

    virtual SurfaceJet jet(double u, double v) const = 0;

    virtual bool periodic_u() const = 0;
    virtual bool periodic_v() const = 0;
    virtual double period_u() const = 0; // domain length in u
    virtual double period_v() const = 0;
    virtual double u0() const { return 0.0; } // domain origin
    virtual double v0() const { return 0.0; }
};

/// Torus r(u,v) = ((R + rho cos v) cos u, (R + rho cos v) sin u, rho sin v),
/// doubly 2pi-periodic, outward unit normal. Requires R > rho > 0.
class TorusSurface final : public Surface {
public:
    TorusSurface(double major_radius, double minor_radius);

    SurfaceJet jet(double u, double v) const override;
    bool periodic_u() const override { return true; }
    bool periodic_v() const override { return true; }
    double period_u() const override { return 2.0 * EIGEN_PI; }
    double period_v() const override { return 2.0 * EIGEN_PI; }

    double major_radius() const { return R_; }
    double minor_radius() const { return rho_; }

private:
    double R_, rho_;
};

/// Height-function patch r(u,v) = (u, v, sum c_ij u^i v^j) over [-1,1]^2
/// with 2 <= i+j <= 4 (12 coefficients, ordered (2,0),(1,1),(0,2),(3,0),
/// (2,1),(1,2),(0,3),(4,0),(3,1),(2,2),(1,3),(0,4)). Non-periodic.
class QuarticPatch final : public Surface {
public:
    explicit QuarticPatch(const std::array<double, 12>& coeffs);

    SurfaceJet jet(double u, double v) const override;
    bool periodic_u() const override { return false; }
    bool periodic_v() const override { return false; }
    double period_u() const override { return 2.0; }
    double period_v() const override { return 2.0; }
    double u0() const override { return -1.0; }
    double v0() const override { return -1.0; }

    const std::array<double, 12>& coeffs() const { return c_; }

private:
    double z(double u, double v, int du, int dv) const;
    std::array<double, 12> c_;
};

/// The fixed patch used by the convergence studies. Coefficients were drawn
/// once from a seeded normal generator and frozen here for reproducibility.
std::array<double, 12> default_quartic_coeffs();

} // namespace zetaquad
