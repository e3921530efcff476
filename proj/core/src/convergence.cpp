#include "zetaquad/convergence.hpp"

#include <cmath>
#include <limits>

namespace zetaquad {

namespace {
struct LogPair {
    std::vector<double> lh, le;
};
LogPair usable(const std::vector<double>& h, const std::vector<double>& err) {
    LogPair out;
    for (std::size_t k = 0; k < h.size() && k < err.size(); ++k) {
        if (err[k] > 0.0 && h[k] > 0.0) {
            out.lh.push_back(std::log(h[k]));
            out.le.push_back(std::log(err[k]));
        }
    }
    return out;
}
double slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < n; ++k) { mx += x[k]; my += y[k]; }
    mx /= n; my /= n;
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        num += (x[k] - mx) * (y[k] - my);
        den += (x[k] - mx) * (x[k] - mx);
    }
    return num / den;
}
} // namespace

double fit_slope(const std::vector<double>& h, const std::vector<double>& err) {
    const LogPair p = usable(h, err);
    return slope(p.lh, p.le);
}

double fit_slope_tail(const std::vector<double>& h, const std::vector<double>& err,
                      std::size_t tail) {
    LogPair p = usable(h, err);
    if (p.lh.size() > tail) {
        p.lh.erase(p.lh.begin(), p.lh.end() - tail);
        p.le.erase(p.le.begin(), p.le.end() - tail);
    }
    return slope(p.lh, p.le);
}

std::vector<double> running_orders(const std::vector<double>& h, const std::vector<double>& err) {
    std::vector<double> out(h.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t k = 1; k < h.size() && k < err.size(); ++k) {
        if (err[k] > 0.0 && err[k - 1] > 0.0 && h[k] > 0.0 && h[k - 1] > 0.0 && h[k] != h[k - 1])
            out[k] = std::log(err[k - 1] / err[k]) / std::log(h[k - 1] / h[k]);
    }
    return out;
}

double richardson(double coarse, double fine, double ratio, double order) {
    const double p = std::pow(ratio, order);
    return (p * fine - coarse) / (p - 1.0);
}

} // namespace zetaquad
