#pragma once

// Shared value semantics for every elfun kernel.
//
// Values are IEEE-754 binary64.  A result is exactly one of: finite, +Inf,
// -Inf (poles and limits), or NaN (argument outside the real domain, or an
// iteration that failed to converge).  Kernels never throw and never print.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace elfun {

using ExtReal = double;

enum class ValueClass { finite, pos_inf, neg_inf, nan };

constexpr ValueClass classify(ExtReal v) noexcept {
  if (v != v) return ValueClass::nan;
  if (v == std::numeric_limits<double>::infinity()) return ValueClass::pos_inf;
  if (v == -std::numeric_limits<double>::infinity()) return ValueClass::neg_inf;
  return ValueClass::finite;
}

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2;

/// Convergence constants for the iterative kernels.
struct Tolerances {
  double iter_tol;   // relative threshold for Landen/AGM style iterations
  double series_tol; // truncation threshold for power/q series
  int max_iter;      // hard cap; exceeding it yields NaN

  constexpr bool valid() const noexcept {
    return iter_tol > 0 && iter_tol < 1 && series_tol > 0 && series_tol < 1 &&
           max_iter >= 8;
  }
};

/// sqrt(eps) for Landen-type iterations, eps for series, 40 trips.
const Tolerances& default_tolerances() noexcept;

enum class Parity { even, odd };

/// Evaluates a kernel known to be even or odd only at non-negative
/// arguments.  `kernel` must accept a double >= 0.  Negative zero is treated
/// as zero.
template <class Kernel>
ExtReal apply_symmetry(Parity parity, ExtReal x, Kernel&& kernel) {
  if (std::isnan(x)) return kNaN;
  if (x < 0) {
    const ExtReal v = kernel(-x);
    return parity == Parity::odd ? -v : v;
  }
  return kernel(x + 0.0);  // folds -0 to +0
}

/// Calls the m-form of a function with m = k*k.  Every k-form in the
/// library goes through here so the two forms agree bit for bit.
template <class MFunction, class... Rest>
ExtReal k_wrapper(MFunction&& m_function, double k, Rest... rest) {
  return m_function(rest..., k * k);
}

inline bool any_nan(double a) noexcept { return std::isnan(a); }
template <class... T>
bool any_nan(double a, T... rest) noexcept {
  return std::isnan(a) || any_nan(rest...);
}

/// Result of splitting an amplitude phi = n*pi + r with |r| <= pi/2.
struct QuasiPeriodDecomposition {
  double n;  // integral valued, kept in double to cover |phi| up to 1e308
  double phi_r;
};

/// Reduces phi modulo pi using a two-term (Cody-Waite) split of pi.
QuasiPeriodDecomposition reduce_amplitude(double phi) noexcept;

/// Reduces x modulo `period` where period = hi + lo is supplied as an
/// unevaluated sum.  Returns n = round(x/period) and x - n*period.
QuasiPeriodDecomposition reduce_by(double x, double period_hi,
                                   double period_lo) noexcept;

}  // namespace elfun
