#pragma once

#include <string>
#include <vector>

#include "sharpbounds/enclosure.hpp"
#include "sharpbounds/function_catalog.hpp"

namespace sharpbounds {

struct MMRecord {
    int iter;
    double x;
    double loss;
    Interval trust_region;
    double z_upper;  // quadratic majorizer coefficient
};

struct MMTrace {
    std::vector<MMRecord> records;
    bool converged = false;
    std::vector<std::string> diagnostics;
};

/// One majorize-minimize step: build the degree-2 enclosure of f over
/// [x - radius, x + radius], take the upper quadratic majorizer
/// u(y) = f(x) + f'(x)(y - x) + z_hi (y - x)^2, and return its minimizer
/// over the trust region.  Throws std::domain_error when z_hi = +inf.
double mm_step(const FunctionDescriptor& f, double x, double radius, double* z_out = nullptr);

MMTrace mm_minimize(const FunctionDescriptor& f, double x0, double radius, int max_iters,
                    double tol);

}  // namespace sharpbounds
