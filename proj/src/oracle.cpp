#include "sharpbounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sharpbounds/taylor.hpp"

namespace sharpbounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Least-squares slope of log(w) against log(eps) over the given points.
double loglog_slope(const std::vector<double>& eps, const std::vector<double>& w, size_t from) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t n = 0;
    for (size_t i = from; i < eps.size(); ++i) {
        if (!(w[i] > 0.0) || !std::isfinite(w[i])) continue;
        double x = std::log(eps[i]);
        double y = std::log(w[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    return (double(n) * sxy - sx * sy) / (double(n) * sxx - sx * sx);
}

}  // namespace

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}

Interval grid_sharp_interval(const FunctionDescriptor& f, int k, double x0, const Interval& region,
                             long n) {
    if (n < 100) throw std::invalid_argument("grid_sharp_interval: need n >= 100");
    if (!contains(region, x0)) throw std::invalid_argument("grid_sharp_interval: x0 outside region");
    double lo = kInf, hi = -kInf;
    auto take = [&](double x) {
        double r;
        try {
            r = remainder_ratio(f, k, x0, x);
        } catch (const std::domain_error&) {
            return;  // e.g. the x0-limit where f^(k)(x0) does not exist
        }
        if (std::isnan(r)) return;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    };
    double h = width(region) / double(n - 1);
    for (long i = 0; i < n; ++i) take(region.lo + double(i) * h);
    take(region.lo);
    take(region.hi);
    take(x0);
    if (!(lo <= hi)) throw std::domain_error("grid_sharp_interval: no evaluable grid point");
    return Interval(lo, hi);
}

ValidityReport verify_enclosure(const FunctionDescriptor& f, const TaylorEnclosure& e, long n) {
    if (n < 2) throw std::invalid_argument("verify_enclosure: need n >= 2");
    ValidityReport rep;
    double h = width(e.trust_region) / double(n - 1);
    for (long i = 0; i < n; ++i) {
        double x = (i == n - 1) ? e.trust_region.hi : e.trust_region.lo + double(i) * h;
        if (x < f.domain.lo || x > f.domain.hi) continue;
        double fx = f.eval(x);
        Interval bound = inflate_ulps(eval_enclosure(e, x), 4);
        // Where the bound touches f, 4 ulps of the (possibly tiny) result can
        // undershoot the Horner evaluation's own rounding, which scales with
        // the magnitude of the terms summed; widen by a running error bound.
        double d = std::abs(x - e.x0), dp = 1.0, mag = std::abs(fx);
        for (double c : e.lower_coeffs.coeffs) {
            mag += std::abs(c) * dp;
            dp *= d;
        }
        for (int j = int(e.lower_coeffs.coeffs.size()); j < e.degree; ++j) dp *= d;
        double zmag = 0.0;
        for (double z : {e.interval_coeff.lo, e.interval_coeff.hi})
            if (std::isfinite(z)) zmag = std::max(zmag, std::abs(z));
        mag += zmag * dp;
        // the interval endpoints themselves carry remainder-ratio rounding
        // noise of a few ulps at the scale of that computation, amplified by d^k
        double slack = std::numeric_limits<double>::epsilon() *
                       (4.0 * mag + 64.0 * (1.0 + zmag) * dp);
        bound = Interval(bound.lo == -kInf ? -kInf : bound.lo - slack,
                         bound.hi == kInf ? kInf : bound.hi + slack);
        ++rep.points_checked;
        if (contains(bound, fx)) continue;
        double excess = (fx < bound.lo) ? bound.lo - fx : fx - bound.hi;
        rep.violations.push_back({x, fx, bound});
        rep.max_violation_magnitude = std::max(rep.max_violation_magnitude, excess);
    }
    return rep;
}

RatioSeries width_ratio_series(const FunctionDescriptor& f, int k, double x0,
                               std::vector<double> epsilons) {
    if (epsilons.empty()) epsilons = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
    std::sort(epsilons.begin(), epsilons.end(), std::greater<double>());

    RatioSeries out;
    out.epsilons = epsilons;
    out.ell = -1;
    int jmax = std::min(f.max_derivative_order - k, 40);
    for (int j = 1; j <= jmax; ++j) {
        if (std::abs(f.nth_derivative(k + j, x0)) > 1e-12) {
            out.ell = j;
            break;
        }
    }
    out.predicted_limit =
        (out.ell > 0) ? binomial(k + out.ell, out.ell) : std::numeric_limits<double>::quiet_NaN();

    for (double eps : epsilons) {
        Interval region(x0, x0 + eps);
        EnclosureReport rep = enclose(f, k, x0, region);
        double ws;
        MethodTag m = rep.enclosure.method;
        if (m == MethodTag::SharpMonotone || m == MethodTag::SharpEvenSymmetric) {
            ws = width(rep.enclosure.interval_coeff);
        } else {
            ws = width(grid_sharp_interval(f, k, x0, region, 20001));
        }
        double wb = width(rep.baseline_interval);
        out.sharp_widths.push_back(ws);
        out.baseline_widths.push_back(wb);
        out.ratios.push_back(ws > 0.0 ? wb / ws : std::numeric_limits<double>::quiet_NaN());
    }

    // fit over the tail (roughly the last two decades of the default ladder)
    size_t from = epsilons.size() > 4 ? epsilons.size() - 4 : 0;
    out.slope_baseline = loglog_slope(epsilons, out.baseline_widths, from);
    out.slope_sharp = loglog_slope(epsilons, out.sharp_widths, from);
    return out;
}

}  // namespace sharpbounds
