#include "elfun/numeric.hpp"

namespace elfun {

const Tolerances& default_tolerances() noexcept {
  static const Tolerances tol{std::sqrt(kEps), kEps, 40};
  return tol;
}

QuasiPeriodDecomposition reduce_by(double x, double period_hi,
                                   double period_lo) noexcept {
  const double n = std::nearbyint(x / period_hi);
  if (n == 0) return {0.0, x};
  double r = std::fma(-n, period_hi, x);
  r = std::fma(-n, period_lo, r);
  return {n, r};
}

QuasiPeriodDecomposition reduce_amplitude(double phi) noexcept {
  // pi = kPiHi + kPiLo to about 107 bits.
  constexpr double kPiHi = 3.141592653589793116;
  constexpr double kPiLo = 1.2246467991473532e-16;
  auto d = reduce_by(phi, kPiHi, kPiLo);
  // Ties and rounding can leave |r| marginally above pi/2.
  if (d.phi_r > kHalfPi) {
    d.phi_r -= kPiHi;
    d.phi_r -= kPiLo;
    d.n += 1;
  } else if (d.phi_r < -kHalfPi) {
    d.phi_r += kPiHi;
    d.phi_r += kPiLo;
    d.n -= 1;
  }
  return d;
}

}  // namespace elfun
