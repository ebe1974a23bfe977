#include "sharpbounds/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sharpbounds {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (std::isnan(lo) || std::isnan(hi))
        throw std::invalid_argument("Interval: NaN endpoint");
    if (lo > hi)
        throw std::invalid_argument("Interval: lo > hi");
}

bool Interval::is_finite() const {
    return std::isfinite(lo) && std::isfinite(hi);
}

namespace {
double mul(double z, double alpha) {
    if (alpha == 0.0 && std::isinf(z)) return 0.0;
    return z * alpha;
}
}  // namespace

Interval scale(const Interval& I, double alpha) {
    if (std::isnan(alpha))
        throw std::invalid_argument("scale: alpha is NaN");
    if (alpha >= 0.0) return Interval(mul(I.lo, alpha), mul(I.hi, alpha));
    return Interval(mul(I.hi, alpha), mul(I.lo, alpha));
}

double width(const Interval& I) { return I.hi - I.lo; }

bool contains(const Interval& I, double x) {
    if (std::isnan(x)) return false;
    return I.lo <= x && x <= I.hi;
}

bool is_subset(const Interval& I, const Interval& J) {
    return J.lo <= I.lo && I.hi <= J.hi;
}

Interval inflate_ulps(const Interval& I, int ulps) {
    double lo = I.lo;
    double hi = I.hi;
    for (int i = 0; i < ulps; ++i) {
        if (std::isfinite(lo))
            lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
        if (std::isfinite(hi))
            hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    }
    return Interval(lo, hi);
}

Interval hull(const Interval& I, const Interval& J) {
    return Interval(std::min(I.lo, J.lo), std::max(I.hi, J.hi));
}

}  // namespace sharpbounds
