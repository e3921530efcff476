#pragma once

#include <cstddef>
#include <vector>

namespace zetaquad {

/// Least-squares slope of log(err) against log(h). Entries with
/// non-positive error are skipped.
double fit_slope(const std::vector<double>& h, const std::vector<double>& err);

/// Slope over the last `tail` usable points; the convergence studies quote
/// this as the asymptotic order (default tail 3).
double fit_slope_tail(const std::vector<double>& h, const std::vector<double>& err,
                      std::size_t tail = 3);

/// Pairwise order log(e0/e1)/log(h0/h1); NaN where undefined.
std::vector<double> running_orders(const std::vector<double>& h, const std::vector<double>& err);

/// Richardson step for a sequence with error ~ C * r^{-p} between
/// resolutions n and r*n: returns the extrapolated limit estimate.
double richardson(double coarse, double fine, double ratio, double order);

} // namespace zetaquad
