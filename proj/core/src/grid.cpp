#include "zetaquad/grid.hpp"

#include <stdexcept>

namespace zetaquad {

TorusGrid::TorusGrid(std::shared_ptr<const Surface> surface, int nu, int nv)
    : surface_(std::move(surface)), nu_(nu), nv_(nv) {
    if (!surface_) throw std::invalid_argument("TorusGrid: null surface");
    if (!surface_->periodic_u() || !surface_->periodic_v())
        throw std::invalid_argument("TorusGrid: surface must be doubly periodic");
    if (nu_ < 2 || nv_ < 2) throw std::invalid_argument("TorusGrid: need at least 2 nodes per direction");
    h1_ = surface_->period_u() / nu_;
    h2_ = surface_->period_v() / nv_;
    const int n = nu_ * nv_;
    jets_.reserve(n);
    x_.resize(n); y_.resize(n); z_.resize(n);
    nx_.resize(n); ny_.resize(n); nz_.resize(n);
    jac_.resize(n);
    for (int iu = 0; iu < nu_; ++iu) {
        for (int iv = 0; iv < nv_; ++iv) {
            const SurfaceJet j = surface_->jet(surface_->u0() + iu * h1_, surface_->v0() + iv * h2_);
            const int idx = iu * nv_ + iv;
            x_[idx] = j.r.x(); y_[idx] = j.r.y(); z_[idx] = j.r.z();
            nx_[idx] = j.n.x(); ny_[idx] = j.n.y(); nz_[idx] = j.n.z();
            jac_[idx] = j.jac;
            jets_.push_back(j);
        }
    }
}

bool TorusGrid::isotropic() const {
    return std::abs(h1_ - h2_) <= 1e-12 * std::max(h1_, h2_);
}

} // namespace zetaquad
