#pragma once

#include <limits>

namespace sharpbounds {

/// Closed real interval [lo, hi].  Endpoints may be infinite (a vacuous
/// bound is represented as [-inf, inf]) but never NaN.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_);

    static Interval point(double x) { return Interval(x, x); }
    static Interval entire() {
        return Interval(-std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity());
    }

    bool is_finite() const;
    bool operator==(const Interval&) const = default;
};

/// I * alpha = {z * alpha : z in I}.  Swaps endpoints for alpha < 0.
/// 0 * inf is taken to be 0 so that scaling by (x - x0)^k at x = x0
/// always yields the degenerate point interval.
Interval scale(const Interval& I, double alpha);

double width(const Interval& I);

bool contains(const Interval& I, double x);

/// I subset-of J (closed endpoints).
bool is_subset(const Interval& I, const Interval& J);

/// Widen each finite endpoint outward by `ulps` representable steps.
/// Used wherever enclosure validity is asserted in floating point.
Interval inflate_ulps(const Interval& I, int ulps);

Interval hull(const Interval& I, const Interval& J);

}  // namespace sharpbounds
