#include "sharpbounds/taylor.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sharpbounds {

double TaylorPoly::eval(double x) const {
    double d = x - x0;
    double r = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) r = r * d + coeffs[i];
    return r;
}

TaylorPoly taylor_coefficients(const FunctionDescriptor& f, int j, double x0) {
    if (j < -1) throw std::invalid_argument("taylor_coefficients: degree < -1");
    TaylorPoly p;
    p.x0 = x0;
    double inv_fact = 1.0;
    for (int i = 0; i <= j; ++i) {
        if (i > 0) inv_fact /= double(i);
        double c = f.nth_derivative(i, x0) * inv_fact;
        if (!std::isfinite(c))
            throw std::domain_error("taylor_coefficients: derivative of order " +
                                    std::to_string(i) + " not finite at x0");
        p.coeffs.push_back(c);
    }
    return p;
}

double remainder(const FunctionDescriptor& f, int j, double x0, double x) {
    if (x < f.domain.lo || x > f.domain.hi)
        throw std::domain_error("remainder: x outside function domain");
    if (j < 0) return f.eval(x);
    return f.eval(x) - taylor_coefficients(f, j, x0).eval(x);
}

namespace {

/// Tail series sum_{i>=k} f^(i)(x0) (x-x0)^{i-k} / i!, for x near x0.
double ratio_tail_series(const FunctionDescriptor& f, int k, double x0, double d) {
    double w = 1.0;
    for (int i = 2; i <= k; ++i) w /= double(i);  // 1/k!
    double sum = 0.0;
    int quiet = 0;
    int max_order = std::min(f.max_derivative_order, k + 80);
    for (int i = k; i <= max_order; ++i) {
        double term = f.nth_derivative(i, x0) * w;
        if (!std::isfinite(term)) throw std::domain_error("ratio_tail_series: non-finite term");
        sum += term;
        // never stop on leading zero terms (monomials have sparse tails)
        if (sum != 0.0 && i >= k + 4 && std::abs(term) <= 1e-18 * std::abs(sum)) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        w *= d / double(i + 1);
    }
    return sum;
}

}  // namespace

double remainder_ratio(const FunctionDescriptor& f, int k, double x0, double x) {
    if (k < 1) throw std::invalid_argument("remainder_ratio: k must be >= 1");
    double d = x - x0;
    if (d == 0.0) {
        double fk = f.nth_derivative(k, x0);  // throws where unavailable
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= double(i);
        return fk / fact;
    }
    if (x < f.domain.lo || x > f.domain.hi)
        throw std::domain_error("remainder_ratio: x outside function domain");
    double fx = f.eval(x);
    double tx = taylor_coefficients(f, k - 1, x0).eval(x);
    double dk = std::pow(d, double(k));
    double quotient = (fx - tx) / dk;
    // The quotient loses ~eps·|f|/|d|^k absolute accuracy; switch to the
    // Taylor-tail series while that loss still exceeds ~1e-10 (threshold
    // 1e-4 at k = 1, wider for higher k).  The series assumes analyticity
    // between x0 and x, so it is only trusted while it agrees with the
    // quotient up to the quotient's own noise level (a kink in between,
    // e.g. hard_silu at |x| = 3, makes the two visibly diverge).
    double threshold = std::max(1e-4, std::pow(1e-6, 1.0 / double(k)));
    if (std::abs(d) < threshold * (1.0 + std::abs(x0))) {
        try {
            double series = ratio_tail_series(f, k, x0, d);
            double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                           (std::abs(fx) + std::abs(tx) + 1.0) / std::abs(dk);
            if (std::abs(series - quotient) <= noise + 1e-9 * (1.0 + std::abs(series)))
                return series;
        } catch (const std::domain_error&) {
            // derivatives unavailable at x0; the quotient below still works
        }
    }
    return quotient;
}

}  // namespace sharpbounds
