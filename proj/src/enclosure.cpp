#include "sharpbounds/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sharpbounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial(int k) {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= double(i);
    return r;
}

Interval monotone_interval(const FunctionDescriptor& f, int k, double x0, const Interval& region,
                           Monotonicity dir) {
    double ra = remainder_ratio(f, k, x0, region.lo);
    double rb = remainder_ratio(f, k, x0, region.hi);
    (void)dir;  // the ratio inherits the derivative's direction; sort for fp safety
    return Interval(std::min(ra, rb), std::max(ra, rb));
}

/// Resolve whether f^(k) is monotone over the region, trying the
/// certificate, then emptiness of interior extrema, then interval
/// sign-definiteness of f^(k+1).
Monotonicity resolve_monotone(const FunctionDescriptor& f, int k, const Interval& region) {
    const auto& st = f.structure;
    if (st.monotone_kth) {
        Monotonicity m = st.monotone_kth(k, region);
        if (m != Monotonicity::Unknown) return m;
    }
    if (st.local_extrema_oracle) {
        try {
            bool interior = false;
            for (double x : st.local_extrema_oracle(k, region))
                if (x > region.lo && x < region.hi) interior = true;
            if (!interior) {
                double va = f.nth_derivative(k, region.lo);
                double vb = f.nth_derivative(k, region.hi);
                if (!std::isnan(va) && !std::isnan(vb))
                    return vb >= va ? Monotonicity::Increasing : Monotonicity::Decreasing;
            }
        } catch (const std::domain_error&) {
        }
    }
    if (st.interval_derivative) {
        Interval I = st.interval_derivative(k + 1, region);
        if (I.lo >= 0.0) return Monotonicity::Increasing;
        if (I.hi <= 0.0) return Monotonicity::Decreasing;
    }
    return Monotonicity::Unknown;
}

}  // namespace

std::string to_string(MethodTag m) {
    switch (m) {
        case MethodTag::SharpMonotone: return "sharp_monotone";
        case MethodTag::SharpEvenSymmetric: return "sharp_even_symmetric";
        case MethodTag::LocalExtrema: return "local_extrema";
        case MethodTag::IntervalDerivative: return "interval_derivative";
        case MethodTag::LagrangeBaseline: return "lagrange_baseline";
    }
    return "?";
}

Interval sharp_monotone(const FunctionDescriptor& f, int k, double x0, const Interval& region) {
    Monotonicity m = resolve_monotone(f, k, region);
    if (m == Monotonicity::Unknown)
        throw std::invalid_argument("sharp_monotone: kth derivative not certified monotone");
    return monotone_interval(f, k, x0, region, m);
}

Interval sharp_even_symmetric_quadratic(const FunctionDescriptor& f, double x0,
                                        const Interval& region) {
    const auto& cert = f.structure.even_symmetric_hessian;
    if (!cert)
        throw std::invalid_argument("sharp_even_symmetric_quadratic: no even-symmetry certificate");
    if (region.lo < -cert->alpha || region.hi > cert->alpha)
        throw std::invalid_argument("sharp_even_symmetric_quadratic: region exceeds [-alpha, alpha]");
    if (!(region.lo < x0 && x0 < region.hi))
        throw std::invalid_argument("sharp_even_symmetric_quadratic: x0 must be interior");
    double c = std::min(region.hi, std::max(-x0, region.lo));
    double ra = remainder_ratio(f, 2, x0, region.lo);
    double rb = remainder_ratio(f, 2, x0, region.hi);
    double rc;
    try {
        rc = remainder_ratio(f, 2, x0, c);
    } catch (const std::domain_error&) {
        rc = kInf;  // e.g. relu at x0 = 0: the ratio sup is unbounded
    }
    double lo = std::min(ra, rb);
    return Interval(std::min(lo, rc), std::max(lo, rc));
}

Interval lagrange_baseline(const FunctionDescriptor& f, int k, const Interval& region) {
    return scale(derivative_range(f, k, region), 1.0 / factorial(k));
}

EnclosureReport enclose(const FunctionDescriptor& f, int k, double x0, const Interval& region) {
    if (!(region.lo < region.hi))
        throw std::invalid_argument("enclose: degenerate trust region");
    if (!contains(region, x0)) throw std::invalid_argument("enclose: x0 outside trust region");
    if (k < 1) throw std::invalid_argument("enclose: k must be >= 1");
    if (region.lo < f.domain.lo || region.hi > f.domain.hi)
        throw std::domain_error("enclose: trust region outside function domain");

    EnclosureReport rep{
        TaylorEnclosure{x0, k, taylor_coefficients(f, k - 1, x0), Interval::point(0.0), region,
                        MethodTag::LagrangeBaseline},
        Interval::entire(), 1.0, {}};

    bool range_exact = false;
    Interval drange = derivative_range(f, k, region, &range_exact);
    rep.baseline_interval = scale(drange, 1.0 / factorial(k));

    bool resolved = false;
    Monotonicity dir = resolve_monotone(f, k, region);
    if (dir != Monotonicity::Unknown) {
        try {
            rep.enclosure.interval_coeff = monotone_interval(f, k, x0, region, dir);
            rep.enclosure.method = MethodTag::SharpMonotone;
            resolved = true;
        } catch (const std::domain_error&) {
            rep.diagnostics.push_back("monotone ratio evaluation failed; falling back");
        }
    }
    if (!resolved && k == 2 && f.structure.even_symmetric_hessian) {
        const auto& cert = *f.structure.even_symmetric_hessian;
        if (region.lo >= -cert.alpha && region.hi <= cert.alpha && region.lo < x0 &&
            x0 < region.hi) {
            try {
                rep.enclosure.interval_coeff = sharp_even_symmetric_quadratic(f, x0, region);
                rep.enclosure.method = MethodTag::SharpEvenSymmetric;
                resolved = true;
                if (std::isinf(rep.enclosure.interval_coeff.hi))
                    rep.diagnostics.push_back("even-symmetric upper endpoint unbounded at x0");
            } catch (const std::invalid_argument&) {
            } catch (const std::domain_error&) {
            }
        }
    }
    if (resolved) {
        // Every ratio value is f^(k)(xi)/k! for some xi in the region, so the
        // true sharp interval lies inside the Lagrange baseline; clamp each
        // endpoint into it to strip the ratio evaluation's rounding spill
        // (visible when the baseline is a point, e.g. a locally quadratic f).
        Interval& s = rep.enclosure.interval_coeff;
        const Interval& b = rep.baseline_interval;
        s = Interval(std::min(std::max(s.lo, b.lo), b.hi),
                     std::max(std::min(s.hi, b.hi), b.lo));
    } else {
        rep.enclosure.interval_coeff = rep.baseline_interval;
        if (range_exact && f.structure.local_extrema_oracle)
            rep.enclosure.method = MethodTag::LocalExtrema;
        else if (!range_exact && f.structure.interval_derivative)
            rep.enclosure.method = MethodTag::IntervalDerivative;
        else
            rep.enclosure.method = MethodTag::LagrangeBaseline;
    }

    double ws = width(rep.enclosure.interval_coeff);
    double wb = width(rep.baseline_interval);
    if (ws == 0.0) {
        rep.width_ratio = (wb == 0.0) ? 1.0 : kInf;
    } else {
        rep.width_ratio = wb / ws;
    }
    if (std::isinf(wb)) rep.diagnostics.push_back("baseline interval has infinite width");
    if (std::isinf(rep.width_ratio) && !std::isinf(wb))
        rep.diagnostics.push_back("enclosure interval has zero width");
    return rep;
}

Interval eval_enclosure(const TaylorEnclosure& e, double x) {
    if (!contains(e.trust_region, x))
        throw std::domain_error("eval_enclosure: x outside trust region");
    double t = e.lower_coeffs.eval(x);
    Interval p = scale(e.interval_coeff, std::pow(x - e.x0, double(e.degree)));
    return Interval(t + p.lo, t + p.hi);
}

std::vector<TaylorEnclosure> enclose_split(const FunctionDescriptor& f, int k, double x0,
                                           const Interval& region) {
    if (k % 2 == 0) throw std::invalid_argument("enclose_split: k must be odd");
    if (!contains(region, x0)) throw std::invalid_argument("enclose_split: x0 outside region");
    std::vector<TaylorEnclosure> out;
    if (x0 == region.lo || x0 == region.hi) {
        out.push_back(enclose(f, k, x0, region).enclosure);
        return out;
    }
    out.push_back(enclose(f, k, x0, Interval(region.lo, x0)).enclosure);
    out.push_back(enclose(f, k, x0, Interval(x0, region.hi)).enclosure);
    return out;
}

}  // namespace sharpbounds
