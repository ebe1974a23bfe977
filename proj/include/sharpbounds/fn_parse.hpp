#pragma once

#include <string>

#include "sharpbounds/function_catalog.hpp"

namespace sharpbounds {

/// Parse a function spec string into a descriptor.  Grammar:
///   exp | log | abs | sin | cos | softplus | relu | gelu | silu | hard_silu
///   pow:<c>          x^c
///   exp_base:<c>     c^x
///   leaky_relu:<slope>
///   lincomb:[(w,f,s,t),...]           sum of w * f(s x + t)
///   lincomb:[...]+poly:[c0,c1,...]    plus a polynomial in x
/// Throws std::invalid_argument on malformed input.
FunctionDescriptor parse_function(const std::string& spec);

}  // namespace sharpbounds
