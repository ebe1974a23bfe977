#pragma once

#include <string>
#include <vector>

#include "sharpbounds/enclosure.hpp"
#include "sharpbounds/function_catalog.hpp"

namespace sharpbounds {

struct Violation {
    double x;
    double fx;
    Interval bound;
};

struct ValidityReport {
    long points_checked = 0;
    std::vector<Violation> violations;
    double max_violation_magnitude = 0.0;
};

struct RatioSeries {
    std::vector<double> epsilons;  // descending
    std::vector<double> ratios;    // baseline width / sharp width
    std::vector<double> baseline_widths;
    std::vector<double> sharp_widths;
    double predicted_limit;  // binom(k + l, l)
    int ell;
    double slope_baseline;  // log-width vs log-eps slope, last two decades
    double slope_sharp;
};

/// Brute-force estimate of the sharp interval: min/max of the remainder
/// ratio over a uniform n-point grid that always includes a, b, and x0.
Interval grid_sharp_interval(const FunctionDescriptor& f, int k, double x0,
                             const Interval& region, long n = 1000000);

/// Audit f(x) in eval_enclosure(e, x) (4-ulp inflated) at n uniform points.
ValidityReport verify_enclosure(const FunctionDescriptor& f, const TaylorEnclosure& e,
                                long n = 100000);

/// Width-ratio convergence experiment over shrinking trust regions
/// [x0, x0 + eps]; the ratio tends to binom(k + l, l) where l is the order
/// of the first nonvanishing derivative beyond k at x0.
RatioSeries width_ratio_series(const FunctionDescriptor& f, int k, double x0,
                               std::vector<double> epsilons = {});

double binomial(int n, int k);

}  // namespace sharpbounds
