#pragma once

#include <vector>

#include "sharpbounds/function_catalog.hpp"

namespace sharpbounds {

/// Taylor polynomial about x0: coeffs[i] = f^(i)(x0) / i!.
/// Empty coefficient list is the degree -1 polynomial (identically 0).
struct TaylorPoly {
    double x0 = 0.0;
    std::vector<double> coeffs;

    int degree() const { return int(coeffs.size()) - 1; }

    /// Horner evaluation in (x - x0), highest degree first.
    double eval(double x) const;
};

TaylorPoly taylor_coefficients(const FunctionDescriptor& f, int j, double x0);

/// R_j(x) = f(x) - T_j(x).  j = -1 gives f(x).
double remainder(const FunctionDescriptor& f, int j, double x0, double x);

/// R_{k-1}(x) / (x - x0)^k, with the removable singularity at x = x0 filled
/// by f^(k)(x0) / k!.  Near x0 the quotient cancels catastrophically, so a
/// truncated Taylor-tail series is used instead.
double remainder_ratio(const FunctionDescriptor& f, int k, double x0, double x);

}  // namespace sharpbounds
