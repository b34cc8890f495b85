#pragma once

// Lemniscate sine and cosine (sl, cl) with their inverses, and the
// Gudermannian function with its inverse.

#include "elfun/numeric.hpp"

namespace elfun {

/// sl(x) = (sqrt2/2) sd(sqrt2 x | 1/2).
ExtReal gsl(double x);
/// cl(x) = cn(sqrt2 x | 1/2).
ExtReal gcl(double x);
/// int_0^x dt / sqrt(1 - t^4), |x| <= 1.
ExtReal igsl(double x);
/// int_x^1 dt / sqrt(1 - t^4), |x| <= 1.
ExtReal igcl(double x);

/// Lemniscate constant: sl has period 2 * kLemniscate.
inline constexpr double kLemniscate = 2.622057554292119810464839589891;

ExtReal gd(double x);
/// gd^-1(x) = asinh(tan x); +-Inf at +-pi/2, NaN beyond.
ExtReal igd(double x);

}  // namespace elfun
