#pragma once

#include "zetaquad/surface.hpp"

#include <memory>
#include <vector>

namespace zetaquad {

/// Uniform periodic grid on a doubly periodic surface. Node (iu, iv) sits at
/// (u0 + iu*h1, v0 + iv*h2); storage is row-major with index iu*nv + iv and
/// modular wrap in both directions.
class TorusGrid {
public:
    TorusGrid(std::shared_ptr<const Surface> surface, int nu, int nv);

    int nu() const { return nu_; }
    int nv() const { return nv_; }
    int size() const { return nu_ * nv_; }
    double h1() const { return h1_; }
    double h2() const { return h2_; }
    bool isotropic() const;

    const Surface& surface() const { return *surface_; }
    std::shared_ptr<const Surface> surface_ptr() const { return surface_; }

    int index(int iu, int iv) const {
        iu %= nu_; if (iu < 0) iu += nu_;
        iv %= nv_; if (iv < 0) iv += nv_;
        return iu * nv_ + iv;
    }

    const SurfaceJet& jet(int idx) const { return jets_[idx]; }
    const SurfaceJet& jet(int iu, int iv) const { return jets_[index(iu, iv)]; }
    const std::vector<SurfaceJet>& jets() const { return jets_; }

    // SoA views for the hot kernel loops.
    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& y() const { return y_; }
    const std::vector<double>& z() const { return z_; }
    const std::vector<double>& nx() const { return nx_; }
    const std::vector<double>& ny() const { return ny_; }
    const std::vector<double>& nz() const { return nz_; }
    const std::vector<double>& jacobian() const { return jac_; }

private:
    std::shared_ptr<const Surface> surface_;
    int nu_, nv_;
    double h1_, h2_;
    std::vector<SurfaceJet> jets_;
    std::vector<double> x_, y_, z_, nx_, ny_, nz_, jac_;
};

} // namespace zetaquad
