#pragma once

#include "zetaquad/incomplete_gamma.hpp"
#include "zetaquad/quadratic_form.hpp"

#include <optional>
#include <vector>

namespace zetaquad {

struct ZetaOptions {
    /// Summands with pi*Qtilde beyond x_cut are below double precision;
    /// e^{-x}/x < eps_machine for x >= 33. Configurable for truncation
    /// experiments.
    double x_cut = 33.0;
};

/// Truncated lattice workspace for one quadratic form. Stores the scaled
/// form values Qtilde(i,j) and the half-integer gamma ladder at every
/// lattice point of the truncated theta sum, so that Z(+-1), Z_{A,B}(1)
/// and all parametric derivative chains reuse one erfc per point.
///
/// Only the half lattice {i>0} u {i=0, j>0} is stored; Qtilde(i,j) =
/// Qtilde(-i,-j) makes every stored sum count twice.
class FormLattice {
public:
    explicit FormLattice(const QuadraticForm& q, const ZetaOptions& opts = {});

    const QuadraticForm& form() const { return form_; }
    double det() const { return det_; }
    double sqrt_det() const { return sqrt_det_; }
    int truncation_radius() const { return radius_; }
    std::size_t size() const { return pts_.size(); }

    /// Z_A(1) via the truncated incomplete-gamma formula.
    double zeta_s1() const;

    /// Z_A(-1).
    double zeta_m1() const;

    /// Z_{A,B}(1) = -(L d/dE + M d/dF + N d/dG) Z_A(1), evaluated by the
    /// explicit mean-curvature sum; gamma values are shared with zeta_s1.
    double zeta_dlp(const DerivDirection& b) const;

    /// Scalar derivative chain along (L,M,N) at s = -1:
    /// value[k] = box^k Z(-1), k = 0..kmax (kmax <= 4), plus the companions
    /// Z(1) and box Z(1) computed from the same gamma ladder.
    struct ChainResult {
        std::array<double, 5> boxk_zm1{}; // box^k Z(-1)
        double z1 = 0.0;                  // companion Z(1)
        double box_z1 = 0.0;              // companion box Z(1)
        int kmax = 0;
    };
    ChainResult chain_m1(const DerivDirection& dir, int kmax) const;

    /// Generic-s scalar derivative chain (quadrature-based gamma values,
    /// noticeably slower). s must avoid {0, 2}; returns box^k Z(s) and the
    /// companion pair (Z(s+2), box Z(s+2)).
    struct GeneralChainResult {
        std::array<double, 5> boxk_z{};
        double z_plus2 = 0.0;
        double box_z_plus2 = 0.0;
        int kmax = 0;
    };
    GeneralChainResult chain_general(const DerivDirection& dir, int kmax, double s) const;

    /// Z(s) for general real s != 2 (s = 0 handled as the limit -1).
    double zeta_general(double s) const;

private:
    struct Point {
        int i, j;
        double qa; // scaled form value Qtilde(i,j)
    };

    QuadraticForm form_;
    double det_, sqrt_det_;
    double x_cut_;
    int radius_;
    std::vector<Point> pts_;
    std::vector<HalfIntegerLadder> ladders_;

    template <class PairAt> double general_bracket(double s1, double s2, PairAt&&) const;
};

/// Z_A(1) with double-precision truncation (pole-free fast path).
double zeta_s1(const QuadraticForm& q, const ZetaOptions& opts = {});

/// General-s evaluation; returns Z(s) and, when s+2 != 2, the companion
/// Z(s+2) computed along the way. Throws on the pole s = 2; s = 0 returns
/// the limit value -1.
struct ZetaPair {
    double z;
    std::optional<double> z_plus2;
};
ZetaPair zeta_general(const QuadraticForm& q, double s, const ZetaOptions& opts = {});

/// Z_{A,B}(1) for a companion form direction B (typically the second
/// fundamental form); the O(h^3) double-layer diagonal value.
double zeta_dlp(const QuadraticForm& q, const DerivDirection& b, const ZetaOptions& opts = {});

} // namespace zetaquad
