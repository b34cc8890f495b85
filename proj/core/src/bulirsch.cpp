#include "elfun/bulirsch.hpp"

#include "elfun/carlson.hpp"

namespace elfun {

namespace {

// Guard that replaces an exact zero of the Landen variable y.
constexpr double kGuard = kEps * 0.01;

// Bulirsch's el2 Landen iteration for x > 0, kc > 0.
ExtReal el2_positive(double x, double kc, double a, double b) {
  const Tolerances& tol = default_tolerances();
  double c = x * x;
  double d = 1 + c;
  double p = std::sqrt((1 + kc * kc * c) / d);
  d = x / d;
  c = d / (2 * p);
  const double z = a - b;
  double ik = a;
  a = (b + a) / 2;
  double y = std::abs(1 / x);
  double f = 0;
  double l = 0;
  double em = 1;
  double qc = kc;
  for (int it = 0;; ++it) {
    if (it >= tol.max_iter || std::isnan(y)) return kNaN;
    b = ik * qc + b;
    double e = em * qc;
    double g = e / p;
    d = f * g + d;
    f = c;
    ik = a;
    p = g + p;
    c = (d / p + c) / 2;
    g = em;
    em = qc + em;
    a = (b / em + a) / 2;
    y = -e / y + y;
    if (y == 0) y = std::sqrt(e) * kGuard;
    if (std::abs(g - qc) > tol.iter_tol * g) {
      qc = 2 * std::sqrt(e);
      l += l;
      if (y < 0) l += 1;
    } else {
      break;
    }
  }
  if (y < 0) l += 1;
  const double e = (std::atan(em / y) + kPi * l) * a / em;
  return e + c * z;
}

// Bulirsch's el1 for x > 0, kc > 0.
ExtReal el1_positive(double x, double kc) {
  const Tolerances& tol = default_tolerances();
  double y = 1 / x;
  double m = 1;
  double l = 0;
  for (int it = 0;; ++it) {
    if (it >= tol.max_iter || std::isnan(y)) return kNaN;
    const double e = m * kc;
    const double g = m;
    m = kc + m;
    y = -(e / y) + y;
    if (y == 0) y = std::sqrt(e) * kGuard;
    if (std::abs(g - kc) > tol.iter_tol * g) {
      kc = 2 * std::sqrt(e);
      l += l;
      if (y < 0) l += 1;
    } else {
      break;
    }
  }
  if (y < 0) l += 1;
  return (std::atan(m / y) + kPi * l) / m;
}

}  // namespace

ExtReal el1(double x, double kc) {
  if (any_nan(x, kc)) return kNaN;
  kc = std::abs(kc);
  return apply_symmetry(Parity::odd, x, [kc](double t) -> double {
    if (t == 0) return 0.0;
    if (std::isinf(t)) return cel1(kc);
    if (kc == 0) return std::asinh(t);
    if (kc > 1e100) {
      // Rescale t -> kc t so that kc^2 t^2 cannot overflow inside the iteration.
      const double s = kc * t;
      return (std::isinf(s) ? cel1(1 / kc) : el1_positive(s, 1 / kc)) / kc;
    }
    return el1_positive(t, kc);
  });
}

ExtReal el2(double x, double kc, double a, double b) {
  if (any_nan(x, kc, a, b)) return kNaN;
  kc = std::abs(kc);
  return apply_symmetry(Parity::odd, x, [=](double t) -> double {
    if (t == 0) return 0.0;
    if (std::isinf(t)) return cel2(kc, a, b);
    if (kc == 0) {
      const double r = t / std::hypot(1.0, t);
      return a * r + b * (std::asinh(t) - r);
    }
    return el2_positive(t, kc, a, b);
  });
}

ExtReal el3(double x, double kc, double p) {
  if (any_nan(x, kc, p)) return kNaN;
  kc = std::abs(kc);
  return apply_symmetry(Parity::odd, x, [=](double t) -> double {
    if (t == 0) return 0.0;
    if (std::isinf(t) || t > 1e150) {
      if (p < 0) return kNaN;
      return cel3(kc, p);
    }
    // t = tan(theta) maps el3 onto the Legendre third-kind integral with
    // characteristic 1 - p and parameter 1 - kc^2; the arguments below are
    // the Carlson forms scaled by 1 + t^2.
    const double t2 = t * t;
    const double w = 1 + p * t2;
    if (!(w > 0)) return kNaN;
    const double u = 1 + kc * kc * t2;
    const double v = 1 + t2;
    double r = t * rf(1, u, v);
    if (p != 1) r += (1 - p) * t * t2 / 3 * rj(1, u, v, w);
    return r;
  });
}

ExtReal cel(double kc, double p, double a, double b) {
  if (any_nan(kc, p, a, b)) return kNaN;
  if (p == 0) return kNaN;
  kc = std::abs(kc);
  if (kc == 0) {
    if (p < 0) return kNaN;
    if (b != 0) return (b > 0) == (p > 0) ? kInf : -kInf;
    return a * rc(1, p);
  }
  if (std::isinf(kc)) return 0.0;
  const Tolerances& tol = default_tolerances();
  double qc = kc;
  double e = qc;
  double em = 1;
  if (p > 0) {
    p = std::sqrt(p);
    b /= p;
  } else {
    // Bulirsch's reduction of the principal value onto positive p.
    double f = qc * qc;
    double q = 1 - f;
    const double g = 1 - p;
    f -= p;
    q *= (b - a * p);
    p = std::sqrt(f / g);
    a = (a - b) / g;
    b = -q / (g * g * p) + a * p;
  }
  for (int it = 0;; ++it) {
    if (it >= tol.max_iter || std::isnan(p)) return kNaN;
    double f = a;
    a += b / p;
    double g = e / p;
    b += f * g;
    b += b;
    p = g + p;
    g = em;
    em += qc;
    if (std::abs(g - qc) <= g * tol.iter_tol) break;
    qc = std::sqrt(e);
    qc += qc;
    e = qc * em;
  }
  return kHalfPi * (b + a * em) / (em * (em + p));
}

}  // namespace elfun
