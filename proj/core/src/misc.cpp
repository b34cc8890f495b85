#include "elfun/misc.hpp"

#include "elfun/carlson.hpp"
#include "elfun/jacobi.hpp"

namespace elfun {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
}

ExtReal gsl(double x) {
  if (std::isnan(x) || std::isinf(x)) return kNaN;
  return apply_symmetry(Parity::odd, x, [](double u) {
    return mjsd(kSqrt2 * u, 0.5) / kSqrt2;
  });
}

ExtReal gcl(double x) {
  if (std::isnan(x) || std::isinf(x)) return kNaN;
  return apply_symmetry(Parity::even, x, [](double u) {
    return mjcn(kSqrt2 * u, 0.5);
  });
}

ExtReal igsl(double x) {
  if (std::isnan(x) || std::abs(x) > 1) return kNaN;
  return apply_symmetry(Parity::odd, x, [](double t) {
    if (t == 0) return 0.0;
    return t * rf((1 - t) * (1 + t), 1 + t * t, 1);
  });
}

ExtReal igcl(double x) {
  if (std::isnan(x) || std::abs(x) > 1) return kNaN;
  if (x < 0) return kLemniscate / 2 + igsl(-x);
  if (x == 1) return 0.0;
  // cl^-1(x) = F(sqrt(1 - x^2) | 1/2) / sqrt2.
  return std::sqrt((1 - x) * (1 + x)) * rf(2 * x * x, 1 + x * x, 2);
}

ExtReal gd(double x) {
  if (std::isnan(x)) return kNaN;
  return apply_symmetry(Parity::odd, x, [](double t) {
    if (t <= 40) return std::atan(std::sinh(t));
    return kHalfPi - 2 * std::exp(-t);
  });
}

ExtReal igd(double x) {
  if (std::isnan(x)) return kNaN;
  return apply_symmetry(Parity::odd, x, [](double t) {
    if (t == kHalfPi) return kInf;
    if (t > kHalfPi) return kNaN;
    return std::asinh(std::tan(t));
  });
}

}  // namespace elfun
