#include "sharpbounds/mm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sharpbounds {

namespace {

double clamp(double x, const Interval& r) { return std::min(std::max(x, r.lo), r.hi); }

}  // namespace

double mm_step(const FunctionDescriptor& f, double x, double radius, double* z_out) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("mm_step: radius must be positive and finite");
    Interval region(std::max(x - radius, f.domain.lo), std::min(x + radius, f.domain.hi));
    if (!(region.lo < region.hi)) throw std::domain_error("mm_step: empty trust region");

    EnclosureReport rep = enclose(f, 2, x, region);
    double z = rep.enclosure.interval_coeff.hi;
    if (z_out) *z_out = z;
    if (std::isinf(z)) throw std::domain_error("mm_step: vacuous majorizer (z = +inf)");

    double fx = f.eval(x);
    double g = f.nth_derivative(1, x);
    auto u = [&](double y) { return fx + g * (y - x) + z * (y - x) * (y - x); };

    // candidates: interior vertex (when the majorizer is convex) and the
    // region endpoints; x itself guards against a zero-progress step.
    double best = x, best_u = fx;
    auto consider = [&](double y) {
        double v = u(y);
        if (v < best_u) {
            best_u = v;
            best = y;
        }
    };
    if (z > 0.0) consider(clamp(x - g / (2.0 * z), region));
    consider(region.lo);
    consider(region.hi);
    return best;
}

MMTrace mm_minimize(const FunctionDescriptor& f, double x0, double radius, int max_iters,
                    double tol) {
    MMTrace trace;
    double x = x0;
    for (int it = 0; it < max_iters; ++it) {
        double r = radius;
        double z, next;
        try {
            next = mm_step(f, x, r, &z);
        } catch (const std::domain_error&) {
            // one retry with a halved radius before giving up
            r *= 0.5;
            try {
                next = mm_step(f, x, r, &z);
                trace.diagnostics.push_back("iter " + std::to_string(it) +
                                            ": halved radius after vacuous majorizer");
            } catch (const std::domain_error& e) {
                trace.diagnostics.push_back("iter " + std::to_string(it) + ": " + e.what());
                break;
            }
        }
        trace.records.push_back({it, x, f.eval(x),
                                 Interval(std::max(x - r, f.domain.lo),
                                          std::min(x + r, f.domain.hi)),
                                 z});
        if (std::abs(next - x) < tol) {
            x = next;
            trace.converged = true;
            break;
        }
        x = next;
    }
    trace.records.push_back({int(trace.records.size()), x, f.eval(x),
                             Interval(std::max(x - radius, f.domain.lo),
                                      std::min(x + radius, f.domain.hi)),
                             std::numeric_limits<double>::quiet_NaN()});
    return trace;
}

}  // namespace sharpbounds
