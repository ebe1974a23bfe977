#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "sharpbounds/function_catalog.hpp"

namespace sbtest {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(i == n - 1 ? hi : lo + (hi - lo) * double(i) / double(n - 1));
    return out;
}

/// Adaptive Simpson quadrature (for the integral-form remainder cross-check).
inline double simpson(const std::function<double(double)>& g, double a, double b, double fa,
                      double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = g(lm), frm = g(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(g, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson(g, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& g, double a, double b,
                        double tol = 1e-12) {
    if (a == b) return 0.0;
    double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(g, a, b, fa, fm, fb, whole, tol, 40);
}

/// Central finite difference of g at x.
inline double central_diff(const std::function<double(double)>& g, double x, double h) {
    return (g(x + h) - g(x - h)) / (2.0 * h);
}

}  // namespace sbtest
