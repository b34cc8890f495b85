#include "elfun/carlson.hpp"

#include <algorithm>
#include <array>

namespace elfun {

namespace {

// Duplication stops once the relative spread of the arguments is below
// these; the seventh-order polynomial tail then leaves an O(eps) remainder.
const double kTolRF = std::pow(3 * kEps * 0.01, 1.0 / 8);
const double kTolRD = std::pow(0.2 * kEps * 0.01, 1.0 / 8);
const double kTolRC = std::pow(3 * kEps * 0.01, 1.0 / 8);

bool bad_arg(double v) { return std::isnan(v) || v < 0; }

int count_zeros(double x, double y, double z) {
  return (x == 0) + (y == 0) + (z == 0);
}

// Polynomial tail shared by RD and RJ (degree -3/2 symmetric form).
double tail_rj(double e2, double e3, double e4, double e5) {
  return ((471240 - 540540 * e2) * e5 +
          (612612 * e2 - 540540 * e3 - 556920) * e4 +
          e3 * (306306 * e3 + e2 * (675675 * e2 - 706860) + 680680) +
          e2 * ((417690 - 255255 * e2) * e2 - 875160) + 4084080) /
         4084080;
}

}  // namespace

ExtReal rc(double x, double y) {
  if (bad_arg(x) || std::isnan(y) || y <= 0) return kNaN;
  if (std::isinf(x) || std::isinf(y)) return 0.0;
  const double a0 = (x + 2 * y) / 3;
  const double q = std::abs(a0 - x) / kTolRC;
  double a = a0, xn = x, yn = y, mul = 1;
  const int cap = default_tolerances().max_iter;
  int it = 0;
  while (q >= mul * std::abs(a)) {
    if (++it > cap) return kNaN;
    const double lam = 2 * std::sqrt(xn) * std::sqrt(yn) + yn;
    a = (a + lam) / 4;
    xn = (xn + lam) / 4;
    yn = (yn + lam) / 4;
    mul *= 4;
  }
  const double s = (y - a0) / (mul * a);
  const double poly =
      1 + s * s *
              (3.0 / 10 +
               s * (1.0 / 7 +
                    s * (3.0 / 8 +
                         s * (9.0 / 22 + s * (159.0 / 208 + s * (9.0 / 8))))));
  return poly / std::sqrt(a);
}

ExtReal rf(double x, double y, double z) {
  if (bad_arg(x) || bad_arg(y) || bad_arg(z)) return kNaN;
  if (count_zeros(x, y, z) > 1) return kNaN;
  if (std::isinf(x) || std::isinf(y) || std::isinf(z)) return 0.0;
  const double a0 = (x + y + z) / 3;
  const double q =
      std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)}) / kTolRF;
  double a = a0, xn = x, yn = y, zn = z, mul = 1;
  const int cap = default_tolerances().max_iter;
  int it = 0;
  while (q >= mul * std::abs(a)) {
    if (++it > cap) return kNaN;
    const double sx = std::sqrt(xn), sy = std::sqrt(yn), sz = std::sqrt(zn);
    const double lam = sx * sy + sy * sz + sz * sx;
    a = (a + lam) / 4;
    xn = (xn + lam) / 4;
    yn = (yn + lam) / 4;
    zn = (zn + lam) / 4;
    mul *= 4;
  }
  const double dx = (a0 - x) / (mul * a);
  const double dy = (a0 - y) / (mul * a);
  const double dz = -(dx + dy);
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (e3 * (6930 * e3 + e2 * (15015 * e2 - 16380) + 17160) +
          e2 * ((10010 - 5775 * e2) * e2 - 24024) + 240240) /
         (240240 * std::sqrt(a));
}

ExtReal rd(double x, double y, double z) {
  if (bad_arg(x) || bad_arg(y) || std::isnan(z) || z <= 0) return kNaN;
  if (x == 0 && y == 0) return kNaN;
  if (std::isinf(x) || std::isinf(y) || std::isinf(z)) return 0.0;
  const double a0 = (x + y + 3 * z) / 5;
  const double q =
      std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)}) / kTolRD;
  double a = a0, xn = x, yn = y, zn = z, mul = 1, sum = 0;
  const int cap = default_tolerances().max_iter;
  int it = 0;
  while (q >= mul * std::abs(a)) {
    if (++it > cap) return kNaN;
    const double sx = std::sqrt(xn), sy = std::sqrt(yn), sz = std::sqrt(zn);
    const double lam = sx * sy + sy * sz + sz * sx;
    sum += 1 / (mul * sz * (zn + lam));
    a = (a + lam) / 4;
    xn = (xn + lam) / 4;
    yn = (yn + lam) / 4;
    zn = (zn + lam) / 4;
    mul *= 4;
  }
  const double dx = (a0 - x) / (mul * a);
  const double dy = (a0 - y) / (mul * a);
  const double dz = -(dx + dy) / 3;
  const double e2 = dx * dy - 6 * dz * dz;
  const double e3 = (3 * dx * dy - 8 * dz * dz) * dz;
  const double e4 = 3 * (dx * dy - dz * dz) * dz * dz;
  const double e5 = dx * dy * dz * dz * dz;
  return tail_rj(e2, e3, e4, e5) / (mul * a * std::sqrt(a)) + 3 * sum;
}

ExtReal rj(double x, double y, double z, double p) {
  if (bad_arg(x) || bad_arg(y) || bad_arg(z) || std::isnan(p) || p <= 0)
    return kNaN;
  if (count_zeros(x, y, z) > 1) return kNaN;
  if (std::isinf(x) || std::isinf(y) || std::isinf(z) || std::isinf(p))
    return 0.0;
  const double a0 = (x + y + z + 2 * p) / 5;
  const double delta = (p - x) * (p - y) * (p - z);
  const double q = std::max({std::abs(a0 - x), std::abs(a0 - y),
                             std::abs(a0 - z), std::abs(a0 - p)}) /
                   kTolRD;
  double a = a0, xn = x, yn = y, zn = z, pn = p, mul = 1, mul3 = 1, sum = 0;
  const int cap = default_tolerances().max_iter;
  int it = 0;
  while (q >= mul * std::abs(a)) {
    if (++it > cap) return kNaN;
    const double sx = std::sqrt(xn), sy = std::sqrt(yn), sz = std::sqrt(zn),
                 sp = std::sqrt(pn);
    const double lam = sx * sy + sy * sz + sz * sx;
    const double d = (sp + sx) * (sp + sy) * (sp + sz);
    const double e = delta / (mul3 * d * d);
    if (!(1 + e > 0)) return kNaN;
    sum += rc(1, 1 + e) / (mul * d);
    a = (a + lam) / 4;
    xn = (xn + lam) / 4;
    yn = (yn + lam) / 4;
    zn = (zn + lam) / 4;
    pn = (pn + lam) / 4;
    mul *= 4;
    mul3 *= 64;
  }
  const double dx = (a0 - x) / (mul * a);
  const double dy = (a0 - y) / (mul * a);
  const double dz = (a0 - z) / (mul * a);
  const double dp = -(dx + dy + dz) / 2;
  const double e2 = dx * dy + dx * dz + dy * dz - 3 * dp * dp;
  const double e3 = dx * dy * dz + 2 * dp * (e2 + 2 * dp * dp);
  const double e4 = (2 * dx * dy * dz + dp * (e2 + 3 * dp * dp)) * dp;
  const double e5 = dx * dy * dz * dp * dp;
  return tail_rj(e2, e3, e4, e5) / (mul * a * std::sqrt(a)) + 6 * sum;
}

ExtReal rg(double x, double y, double z) {
  if (bad_arg(x) || bad_arg(y) || bad_arg(z)) return kNaN;
  if (std::isinf(x) || std::isinf(y) || std::isinf(z)) return kInf;
  std::array<double, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  const double lo = v[0], mid = v[1], hi = v[2];
  if (hi == 0) return 0.0;
  if (mid == 0) return std::sqrt(hi) / 2;
  // Taking the median as the distinguished argument keeps
  // -(lo - mid)(hi - mid) >= 0, so all three terms add.
  const double t1 = mid * rf(lo, hi, mid);
  const double t2 = (mid - lo) * (hi - mid) * rd(lo, hi, mid) / 3;
  const double t3 = std::sqrt(lo * hi / mid);
  return (t1 + t2 + t3) / 2;
}

}  // namespace elfun
