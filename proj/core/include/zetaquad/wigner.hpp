#pragma once

#include "zetaquad/quadratic_form.hpp"

namespace zetaquad {

/// Brute-force truncated Wigner-type difference
///
///   W(N) = sum'_{|i|,|j|<=N} u^alpha v^beta Q(i,j)^(-m-1/2)
///        - int_{[-N-1/2, N+1/2]^2} u^alpha v^beta Q(u,v)^(-m-1/2) du dv
///
/// used as an independent oracle for the zeta-based limits. The integral is
/// evaluated by polar tensor-Gauss panels on the origin square [-1/2,1/2]^2
/// and graded Cartesian Gauss panels outside; cost is O(N^2) for the sum.
///
/// For odd alpha+beta both sum and integral vanish identically and 0 is
/// returned. Throws if the integrand is not integrable at the origin
/// (alpha + beta - 2m - 1 <= -2).
double wigner_oracle(const QuadraticForm& q, int alpha, int beta, int m, int n);

/// Removes the linear boundary term of a divergent oracle sequence:
/// assuming W(N) = c (N + 1/2) + W_inf + o(1), returns the W_inf estimate
/// from the pair (W(n1), W(n2)). For sequences convergent in the strip
/// (e.g. the Z(1) case) apply Richardson with rate 1 instead.
double wigner_linear_extrapolate(double w1, int n1, double w2, int n2);

} // namespace zetaquad
