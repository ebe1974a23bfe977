#pragma once

#include <string>
#include <vector>

#include "sharpbounds/function_catalog.hpp"
#include "sharpbounds/interval.hpp"
#include "sharpbounds/taylor.hpp"

namespace sharpbounds {

enum class MethodTag {
    SharpMonotone,
    SharpEvenSymmetric,
    LocalExtrema,
    IntervalDerivative,
    LagrangeBaseline,
};

std::string to_string(MethodTag m);

/// Degree-k enclosure: shared Taylor coefficients through degree k-1 plus an
/// interval degree-k coefficient, valid over the trust region.
struct TaylorEnclosure {
    double x0;
    int degree;
    TaylorPoly lower_coeffs;  // the degree k-1 polynomial part
    Interval interval_coeff;
    Interval trust_region;
    MethodTag method;
};

struct EnclosureReport {
    TaylorEnclosure enclosure;
    Interval baseline_interval;
    double width_ratio;  // baseline width / enclosure width; +inf when vacuous
    std::vector<std::string> diagnostics;
};

/// Sharp interval for a function with monotone kth derivative: the remainder
/// ratio evaluated at the two region endpoints (its monotone extremes), with
/// the limit value f^(k)(x0)/k! when x0 sits at an endpoint.
Interval sharp_monotone(const FunctionDescriptor& f, int k, double x0, const Interval& region);

/// Sharp quadratic interval for an even-symmetric Hessian:
/// [min{r(a), r(b)}, r(c)] with c = min{b, max{-x0, a}}.
Interval sharp_even_symmetric_quadratic(const FunctionDescriptor& f, double x0,
                                        const Interval& region);

/// Classical enclosure from the kth-derivative range: (1/k!) [min f^(k), max f^(k)].
Interval lagrange_baseline(const FunctionDescriptor& f, int k, const Interval& region);

/// Dispatcher: sharp closed forms where a certificate applies, classical
/// fallback otherwise.  Always reports the baseline interval for comparison.
EnclosureReport enclose(const FunctionDescriptor& f, int k, double x0, const Interval& region);

/// T_{k-1}(x) + I (x - x0)^k.  For odd k and x < x0 the endpoints swap
/// through the negative scale factor.
Interval eval_enclosure(const TaylorEnclosure& e, double x);

/// For odd k: separate enclosures over [a, x0] and [x0, b], each with x0 at
/// an endpoint.  A single enclosure if x0 already sits on the boundary.
std::vector<TaylorEnclosure> enclose_split(const FunctionDescriptor& f, int k, double x0,
                                           const Interval& region);

}  // namespace sharpbounds
