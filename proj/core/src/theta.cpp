#include "elfun/theta.hpp"

#include "elfun/integrals.hpp"

namespace elfun {

namespace {

constexpr double kPiLo = 1.2246467991473532e-16;
constexpr int kMaxTerms = 20000;

bool bad_nome(double q) { return std::isnan(q) || q < 0 || q > kMaxNome; }

// Sum over n >= 0 of (+-1)^n q^(n(n+1)) f((2n+1) x), f = sin or cos.  The
// q^(1/4) prefactor of theta_1 and theta_2 is left to the caller.
double odd_series(double x, double q, bool alternate, bool use_sin) {
  double sum = 0;
  double coef = 1;         // q^(n(n+1))
  double ratio = q * q;    // q^(2(n+1))
  const double q2 = q * q;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double arg = (2.0 * n + 1) * x;
    double term = coef * (use_sin ? std::sin(arg) : std::cos(arg));
    if (alternate && (n & 1)) term = -term;
    sum += term;
    if (coef <= default_tolerances().series_tol * std::abs(sum) * 0.25 || coef == 0)
      break;
    coef *= ratio;
    ratio *= q2;
  }
  return sum;
}

// 1 + 2 sum over n >= 1 of (+-1)^n q^(n^2) cos(2 n x).
double even_series(double x, double q, bool alternate) {
  double sum = 0;
  double coef = q;         // q^(n^2)
  double ratio = q * q * q;  // q^(2n+1)
  const double q2 = q * q;
  for (int n = 1; n < kMaxTerms && coef != 0; ++n) {
    double term = coef * std::cos(2.0 * n * x);
    if (alternate && (n & 1)) term = -term;
    sum += term;
    if (coef <= default_tolerances().series_tol * std::abs(1 + 2 * sum) * 0.25)
      break;
    coef *= ratio;
    ratio *= q2;
  }
  return 1 + 2 * sum;
}

// Derivative sum of theta_1 at 0 without the 2 q^(1/4) prefactor.
double odd_series_derivative(double q) {
  double sum = 0;
  double coef = 1;
  double ratio = q * q;
  const double q2 = q * q;
  for (int n = 0; n < kMaxTerms && coef != 0; ++n) {
    const double term = (n & 1 ? -coef : coef) * (2.0 * n + 1);
    sum += term;
    if (std::abs(term) <= default_tolerances().series_tol * std::abs(sum) * 0.25)
      break;
    coef *= ratio;
    ratio *= q2;
  }
  return sum;
}

// x = n pi + r with |r| <= pi/2; returns (-1)^n through `flip`.
double reduce_pi(double x, bool& flip) {
  const auto d = reduce_by(x, kPi, kPiLo);
  flip = std::fmod(d.n, 2.0) != 0;
  return d.phi_r;
}

// Normalised Neville value at z = pi x / (2K).
double neville_at(NevilleKind kind, double z, double q, double theta3_sq) {
  bool flip = false;
  const double r = reduce_pi(z, flip);
  const double sign = flip ? -1.0 : 1.0;
  switch (kind) {
    case NevilleKind::c:
      return sign * odd_series(r, q, false, false) / odd_series(0, q, false, false);
    case NevilleKind::d:
      return even_series(r, q, false) / even_series(0, q, false);
    case NevilleKind::n:
      return even_series(r, q, true) / even_series(0, q, true);
    case NevilleKind::s:
      return sign * theta3_sq * odd_series(r, q, true, true) / odd_series_derivative(q);
  }
  return kNaN;
}

}  // namespace

ExtReal jtheta(int j, double x, double q) {
  if (std::isnan(x) || std::isinf(x) || bad_nome(q) || j < 1 || j > 4) return kNaN;
  bool flip = false;
  const double r = reduce_pi(x, flip);
  switch (j) {
    case 1: {
      if (q == 0) return 0.0;
      const double v = 2 * std::sqrt(std::sqrt(q)) * odd_series(r, q, true, true);
      return flip ? -v : v;
    }
    case 2: {
      if (q == 0) return 0.0;
      const double v = 2 * std::sqrt(std::sqrt(q)) * odd_series(r, q, false, false);
      return flip ? -v : v;
    }
    case 3: return even_series(r, q, false);
    default: return even_series(r, q, true);
  }
}

ExtReal neville_theta(NevilleKind kind, double x, double q) {
  if (std::isnan(x) || std::isinf(x) || bad_nome(q)) return kNaN;
  // 2K / pi = theta_3(0, q)^2.
  const double t3 = even_series(0, q, false);
  const double t3sq = t3 * t3;
  return neville_at(kind, x / t3sq, q, t3sq);
}

ExtReal neville_theta_m(NevilleKind kind, double x, double m) {
  if (std::isnan(x) || std::isinf(x) || std::isnan(m) || m < 0 || m >= 1) return kNaN;
  const double q = mnome(m);
  if (bad_nome(q)) return kNaN;
  const double two_k_over_pi = 2 * melK(m) / kPi;
  return neville_at(kind, x / two_k_over_pi, q, two_k_over_pi);
}

ExtReal mnome(double m) {
  if (std::isnan(m) || m < 0 || m > 1) return kNaN;
  if (m == 0) return 0.0;
  if (m == 1) return 1.0;
  return std::exp(-kPi * melCK(m) / melK(m));
}

ExtReal ielnome(double q) {
  if (std::isnan(q) || q < 0 || q >= 1 || q > kMaxNome) return kNaN;
  if (q == 0) return 0.0;
  const double t2 = 2 * std::sqrt(std::sqrt(q)) * odd_series(0, q, false, false);
  const double t3 = even_series(0, q, false);
  const double r = t2 / t3;
  return std::min(r * r, 1.0);
}

}  // namespace elfun
