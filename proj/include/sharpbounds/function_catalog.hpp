#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sharpbounds/interval.hpp"

namespace sharpbounds {

enum class Monotonicity { Increasing, Decreasing, Unknown };

/// f''(x) = f''(-x) on [-alpha, alpha], with f'' nonincreasing on [0, alpha].
struct EvenSymmetricHessian {
    double alpha;
    bool hessian_decreasing_on_0_alpha = true;
};

/// Structural facts about a function that the enclosure dispatcher consumes.
/// Any member may be absent; absence means "no claim".
struct StructureCertificate {
    /// Monotonicity of f^(k) over a region.
    std::function<Monotonicity(int k, const Interval& region)> monotone_kth;

    std::optional<EvenSymmetricHessian> even_symmetric_hessian;

    /// Sorted zeros of f^(k+1) in the closed region (local extrema of f^(k)).
    std::function<std::vector<double>(int k, const Interval& region)> local_extrema_oracle;

    /// Guaranteed enclosure of {f^(k)(x) : x in region}, from a per-function
    /// interval extension of the closed-form kth derivative.
    std::function<Interval(int k, const Interval& region)> interval_derivative;
};

struct FunctionDescriptor {
    std::string name;
    std::function<double(double)> eval;
    /// nth_derivative(0, x) == eval(x).  Throws std::domain_error where the
    /// requested derivative does not exist (e.g. abs at 0 for order >= 1).
    std::function<double(int order, double x)> nth_derivative;
    int max_derivative_order;  // unbounded_order() if all orders exist
    Interval domain = Interval::entire();
    StructureCertificate structure;
};

constexpr int unbounded_order() { return 1 << 30; }

/// Known names: exp, log, abs, sin, cos, softplus, relu, gelu, silu,
/// hard_silu, pow_c_x (params {c}, c > 0), pow_x_c (params {c}),
/// leaky_relu (params {slope}).
FunctionDescriptor catalog_lookup(const std::string& name,
                                  const std::vector<double>& params = {});

struct LinearTerm {
    double weight;
    FunctionDescriptor fn;
    double arg_scale = 1.0;
    double arg_shift = 0.0;
};

/// sum_i w_i f_i(s_i x + t_i) + poly(x), with poly given by coefficients
/// about 0 (poly[i] multiplies x^i).  Monotonicity certificates resolve
/// through interval evaluation of derivatives of the combination.
FunctionDescriptor combine_linear(std::vector<LinearTerm> terms,
                                  std::vector<double> poly = {});

/// Range of f^(k) over the region: exact when an extrema oracle or a
/// monotonicity certificate applies, otherwise a guaranteed superset.
/// Returns [-inf, inf] (flagging via *exact=false) where the derivative is
/// undefined somewhere in the region.
Interval derivative_range(const FunctionDescriptor& f, int k,
                          const Interval& region, bool* exact = nullptr);

}  // namespace sharpbounds
