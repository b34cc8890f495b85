#include "elfun/integrals.hpp"

#include <stdexcept>

#include "detail.hpp"
#include "elfun/carlson.hpp"
#include "elfun/jacobi.hpp"

namespace elfun {

namespace detail {

double kernel_F(double s, double c, double dn2) {
  if (s == 0) return 0.0;
  if (c == 0 && dn2 == 0) return kInf;
  return s * rf(c * c, dn2, 1);
}

double kernel_E(double s, double c, double dn2, double m) {
  if (s == 0) return 0.0;
  if (m == 1) return s;
  const double c2 = c * c;
  const double mc = 1 - m;
  double r;
  if (m <= 0) {
    r = rf(c2, dn2, 1) - (m / 3) * s * s * rd(c2, dn2, 1);
  } else if (m < 1) {
    r = mc * rf(c2, dn2, 1) + (m * mc / 3) * s * s * rd(c2, 1, dn2) +
        m * c / std::sqrt(dn2);
  } else {
    r = -(mc / 3) * s * s * rd(dn2, 1, c2) + std::sqrt(dn2) / c;
  }
  return s * r;
}

double kernel_D(double s, double c, double dn2) {
  if (s == 0) return 0.0;
  if (c == 0 && dn2 == 0) return kInf;
  return s * s * s / 3 * rd(c * c, dn2, 1);
}

double kernel_B(double s, double c, double dn2, double m) {
  if (s == 0) return 0.0;
  if (m == 1) return s;
  if (m > 1) return kernel_F(s, c, dn2) - kernel_D(s, c, dn2);
  // (E - m'F)/m rewritten so every term is non-negative for m < 1.
  const long double lead = static_cast<long double>(s) * c / std::sqrt(static_cast<long double>(dn2));
  return static_cast<double>(lead + static_cast<long double>((1 - m) / 3 * s * s * s) * rd(c * c, 1, dn2));
}

double kernel_Pi(double s, double c, double dn2, double nu) {
  if (s == 0) return 0.0;
  const double p = 1 - nu * s * s;
  if (p == 0) return kInf;
  if (p < 0) return kNaN;
  const double f = kernel_F(s, c, dn2);
  if (nu == 0 || std::isinf(f)) return f;
  return f + nu * s * s * s / 3 * rj(c * c, dn2, 1, p);
}

}  // namespace detail

namespace {

using detail::kernel_B;
using detail::kernel_D;
using detail::kernel_E;
using detail::kernel_F;
using detail::kernel_Pi;

bool m_out_of_range(double m) { return std::isnan(m) || m > 1; }

// 1 - m s^2 without cancellation for 0 < m <= 1.
double delta2(double s, double c, double m) {
  return m <= 0 || m > 1 ? 1 - m * s * s : (1 - m) + m * c * c;
}

double complete(IntegralKind kind, double nu, double m) {
  switch (kind) {
    case IntegralKind::B: return melB(m);
    case IntegralKind::C: return melC(m);
    case IntegralKind::D: return melD(m);
    case IntegralKind::E: return melE(m);
    case IntegralKind::F: return melK(m);
    case IntegralKind::Pi: return melPi(nu, m);
  }
  return kNaN;
}

double kernel(IntegralKind kind, double s, double c, double dn2, double nu,
              double m) {
  switch (kind) {
    case IntegralKind::B: return kernel_B(s, c, dn2, m);
    case IntegralKind::D: return kernel_D(s, c, dn2);
    case IntegralKind::E: return kernel_E(s, c, dn2, m);
    case IntegralKind::F: return kernel_F(s, c, dn2);
    case IntegralKind::Pi: return kernel_Pi(s, c, dn2, nu);
    case IntegralKind::C: break;
  }
  throw std::invalid_argument("the C integral has no incomplete form");
}

// sign(r) * kernel(|sin r|, cos r) + 2 n * complete.
double assemble(double n, double sign, double reduced, double complete_value) {
  const double part = sign < 0 ? -reduced : reduced;
  if (n == 0) return part;
  return 2 * n * complete_value + part;
}

}  // namespace

// ---- complete --------------------------------------------------------------

ExtReal melK(double m) {
  if (m_out_of_range(m)) return kNaN;
  if (m == 1) return kInf;
  if (std::isinf(m)) return 0.0;
  return rf(0, 1 - m, 1);
}

ExtReal melE(double m) {
  if (m_out_of_range(m)) return kNaN;
  if (m == 1) return 1.0;
  if (std::isinf(m)) return kInf;
  return 2 * rg(0, 1 - m, 1);
}

ExtReal melD(double m) {
  if (m_out_of_range(m)) return kNaN;
  if (m == 1) return kInf;
  if (std::isinf(m)) return 0.0;
  return rd(0, 1 - m, 1) / 3;
}

ExtReal melB(double m) {
  if (m_out_of_range(m)) return kNaN;
  if (m == 1) return 1.0;
  if (std::isinf(m)) return 0.0;
  const double mc = 1 - m;
  return mc / 3 * rd(0, 1, mc);
}

ExtReal melC(double m) {
  if (m_out_of_range(m)) return kNaN;
  if (m == 1) return kInf;
  if (std::isinf(m)) return 0.0;
  if (std::abs(m) < 0.125) {
    // C(m) = sum_n c_n m^n with c_0 = pi/16 and
    // c_{n+1}/c_n = (n + 3/2)^2 / ((n + 1)(n + 3)).
    double term = kPi / 16;
    double sum = term;
    for (int n = 0; n < 200; ++n) {
      term *= m * (n + 1.5) * (n + 1.5) / ((n + 1.0) * (n + 3.0));
      sum += term;
      if (std::abs(term) <= default_tolerances().series_tol * std::abs(sum))
        break;
    }
    return sum;
  }
  return (melD(m) - melB(m)) / m;
}

ExtReal melPi(double nu, double m) {
  if (m_out_of_range(m) || std::isnan(nu)) return kNaN;
  if (nu == 1) return kInf;
  if (nu > 1) return kNaN;
  if (m == 1) return kInf;
  if (std::isinf(m) || std::isinf(nu)) return 0.0;
  const double k = rf(0, 1 - m, 1);
  if (nu == 0) return k;
  return k + nu / 3 * rj(0, 1 - m, 1, 1 - nu);
}

// The complement 1 - m enters the Carlson arguments directly so that small m
// keeps its digits.
ExtReal melCK(double m) {
  if (std::isnan(m) || m < 0) return kNaN;
  if (m == 0) return kInf;
  return rf(0, m, 1);
}

ExtReal melCE(double m) {
  if (std::isnan(m) || m < 0) return kNaN;
  if (m == 0) return 1.0;
  return 2 * rg(0, m, 1);
}

ExtReal melCPi(double nu, double m) {
  if (std::isnan(m) || m < 0 || std::isnan(nu)) return kNaN;
  if (nu == 1) return kInf;
  if (nu > 1) return kNaN;
  if (m == 0) return kInf;
  if (std::isinf(m) || std::isinf(nu)) return 0.0;
  const double k = rf(0, m, 1);
  if (nu == 0) return k;
  return k + nu / 3 * rj(0, m, 1, 1 - nu);
}

// ---- incomplete ------------------------------------------------------------

ExtReal incomplete_legendre(IntegralKind kind, double phi, double nu, double m) {
  if (kind == IntegralKind::C)
    throw std::invalid_argument("the C integral has no incomplete form");
  if (std::isnan(phi) || std::isnan(m) || std::isinf(m)) return kNaN;
  if (kind == IntegralKind::Pi && std::isnan(nu)) return kNaN;
  if (std::isinf(phi)) {
    if (m > 1) return kNaN;
    const double total = complete(kind, nu, m);
    return phi > 0 ? total * kInf : -total * kInf;
  }
  const auto d = reduce_amplitude(phi);
  const double s = std::abs(std::sin(d.phi_r));
  // Below 1/sqrt(2) the cosine from s is as accurate as cos() and matches the
  // Jacobi form exactly.
  const double c = s <= 0.7071067811865476 ? std::sqrt((1 - s) * (1 + s)) : std::cos(d.phi_r);
  if (m > 1) {
    // Real only on the first arc, |sin phi| <= 1/sqrt(m).
    if (d.n != 0 || m * s * s > 1) return kNaN;
  }
  if (kind == IntegralKind::Pi && nu > 1 && d.n != 0) return kNaN;
  const double dn2 = delta2(s, c, m);
  const double reduced = kernel(kind, s, c, dn2, nu, m);
  if (d.n == 0) return assemble(0, d.phi_r, reduced, 0);
  return assemble(d.n, d.phi_r, reduced, complete(kind, nu, m));
}

ExtReal mpelB(double phi, double m) { return incomplete_legendre(IntegralKind::B, phi, 0, m); }
ExtReal mpelD(double phi, double m) { return incomplete_legendre(IntegralKind::D, phi, 0, m); }
ExtReal mpelE(double phi, double m) { return incomplete_legendre(IntegralKind::E, phi, 0, m); }
ExtReal mpelF(double phi, double m) { return incomplete_legendre(IntegralKind::F, phi, 0, m); }
ExtReal mpelPi(double phi, double nu, double m) {
  return incomplete_legendre(IntegralKind::Pi, phi, nu, m);
}

ExtReal incomplete_jacobi(IntegralKind kind, double x, double nu, double m) {
  if (kind == IntegralKind::C)
    throw std::invalid_argument("the C integral has no incomplete form");
  if (std::isnan(x) || std::isnan(m) || std::isinf(m)) return kNaN;
  if (kind == IntegralKind::Pi && std::isnan(nu)) return kNaN;
  const double ax = std::abs(x);
  if (ax > 1) return kNaN;
  const double c = std::sqrt((1 - ax) * (1 + ax));
  const double dn2 = delta2(ax, c, m);
  if (dn2 < 0) return kNaN;
  const double v = kernel(kind, ax, c, dn2, nu, m);
  return x < 0 ? -v : v;
}

ExtReal melB(double x, double m) { return incomplete_jacobi(IntegralKind::B, x, 0, m); }
ExtReal melD(double x, double m) { return incomplete_jacobi(IntegralKind::D, x, 0, m); }
ExtReal melE(double x, double m) { return incomplete_jacobi(IntegralKind::E, x, 0, m); }
ExtReal melF(double x, double m) { return incomplete_jacobi(IntegralKind::F, x, 0, m); }
ExtReal melPi(double x, double nu, double m) {
  return incomplete_jacobi(IntegralKind::Pi, x, nu, m);
}

// ---- Jacobi's second form --------------------------------------------------

namespace {

// Values of an integrand-of-u over the reduced range, with the count n of
// 2K periods removed, for m < 1.
struct SecondForm {
  double n;
  double r;
  double value_r;  // integral from 0 to r
};

SecondForm epsilon_reduced(double u, double m) {
  const auto red = detail::reduce_jacobi(u, m);
  const SnCnDn& v = red.at_r;
  const double s = std::abs(v.sn);
  double e = kernel_E(s, std::abs(v.cn), v.dn * v.dn, m);
  if (red.r < 0) e = -e;
  return {red.n, red.r, e};
}

SecondForm lambda_reduced(double u, double nu, double m) {
  const auto red = detail::reduce_jacobi(u, m);
  const SnCnDn& v = red.at_r;
  const double s = std::abs(v.sn);
  double l = kernel_Pi(s, std::abs(v.cn), v.dn * v.dn, nu);
  if (red.r < 0) l = -l;
  return {red.n, red.r, l};
}

}  // namespace

ExtReal mjepsilon(double u, double m) {
  if (any_nan(u, m) || std::isinf(m)) return kNaN;
  if (std::isinf(u)) return m < 1 ? (melE(m) == 0 ? 0.0 : u) : kNaN;
  if (m == 0) return u;
  if (m == 1) return std::tanh(u);
  if (m < 1) {
    const auto e = epsilon_reduced(u, m);
    if (e.n == 0) return e.value_r;
    return 2 * e.n * melE(m) + e.value_r;
  }
  // m > 1: dn(u|m) = cn(sqrt(m) u | 1/m), so the integral is the Legendre
  // B integral at parameter 1/m, scaled by 1/sqrt(m).
  const double sm = std::sqrt(m);
  const double mu = 1 / m;
  const auto red = detail::reduce_jacobi(u * sm, mu);
  const SnCnDn& v = red.at_r;
  double b = kernel_B(std::abs(v.sn), std::abs(v.cn), v.dn * v.dn, mu);
  if (red.r < 0) b = -b;
  if (red.n != 0) b += 2 * red.n * melB(mu);
  return b / sm;
}

ExtReal mjlambda(double u, double nu, double m) {
  if (any_nan(u, nu, m) || std::isinf(m)) return kNaN;
  if (std::isinf(u)) return kNaN;
  if (nu == 0) return u;
  if (m > 1) {
    const double sm = std::sqrt(m);
    return mjlambda(u * sm, nu / m, 1 / m) / sm;
  }
  const auto l = lambda_reduced(u, nu, m);
  if (l.n == 0) return l.value_r;
  const double pi_c = melPi(nu, m);
  if (std::isnan(pi_c) || std::isnan(l.value_r)) return kNaN;
  if (std::isinf(pi_c)) return l.n > 0 ? kInf : -kInf;
  return 2 * l.n * pi_c + l.value_r;
}

ExtReal mJzeta(double u, double m) {
  if (any_nan(u, m) || m_out_of_range(m) || std::isinf(m)) return kNaN;
  if (std::isinf(u)) return kNaN;
  if (m == 0) return 0.0;
  if (m == 1) return std::tanh(u);
  const auto e = epsilon_reduced(u, m);
  return e.value_r - melE(m) / melK(m) * e.r;
}

ExtReal mpJzeta(double phi, double m) {
  if (any_nan(phi, m) || m_out_of_range(m) || std::isinf(m)) return kNaN;
  if (std::isinf(phi)) return kNaN;
  if (m == 0) return 0.0;
  const auto d = reduce_amplitude(phi);
  const double s = std::abs(std::sin(d.phi_r));
  const double c = std::cos(d.phi_r);
  const double dn2 = delta2(s, c, m);
  if (m == 1) return d.phi_r < 0 ? -s : s;
  const double z = kernel_E(s, c, dn2, m) - melE(m) / melK(m) * kernel_F(s, c, dn2);
  return d.phi_r < 0 ? -z : z;
}

ExtReal mJomega(double u, double nu, double m) {
  if (any_nan(u, nu, m) || m_out_of_range(m) || std::isinf(m)) return kNaN;
  if (std::isinf(u) || nu >= 1) return kNaN;
  if (nu == 0) return 0.0;
  if (m == 1) return mjlambda(u, nu, 1) - u / (1 - nu);
  const auto l = lambda_reduced(u, nu, m);
  return l.value_r - melPi(nu, m) / melK(m) * l.r;
}

ExtReal mpJomega(double phi, double nu, double m) {
  if (any_nan(phi, nu, m) || m_out_of_range(m) || std::isinf(m)) return kNaN;
  if (std::isinf(phi) || nu >= 1) return kNaN;
  if (nu == 0) return 0.0;
  const auto d = reduce_amplitude(phi);
  const double s = std::abs(std::sin(d.phi_r));
  const double c = std::cos(d.phi_r);
  const double dn2 = delta2(s, c, m);
  double w;
  if (m == 1) {
    // Pi(nu|m)/K(m) -> 1/(1 - nu) as m -> 1.
    w = kernel_Pi(s, c, dn2, nu) - kernel_F(s, c, dn2) / (1 - nu);
  } else {
    w = kernel_Pi(s, c, dn2, nu) - melPi(nu, m) / melK(m) * kernel_F(s, c, dn2);
  }
  return d.phi_r < 0 ? -w : w;
}

ExtReal mHlambda(double beta, double m) {
  if (any_nan(beta, m) || m < 0 || m > 1 || std::isinf(beta)) return kNaN;
  const auto d = reduce_amplitude(beta);
  const double s = std::abs(std::sin(d.phi_r));
  const double c = std::cos(d.phi_r);
  double v;
  if (s == 0) {
    v = 0;
  } else if (m == 1) {
    v = 2 * std::abs(d.phi_r) / kPi;
  } else if (c == 0) {
    v = 1;
  } else {
    // m' sin(2b) Pi(n|m) / (pi sqrt(1 - m' s^2)) with n = m / (1 - m' s^2);
    // Pi(n|m) = K + (n/3) R_J(0, m', 1, 1 - n) and 1 - n = m' c^2 / w.
    const double mc = 1 - m;
    const double w = 1 - mc * s * s;
    const double n = m / w;
    double pi_n = rf(0, mc, 1);
    if (n != 0) pi_n += n / 3 * rj(0, mc, 1, mc * c * c / w);
    v = mc * 2 * s * c * pi_n / (kPi * std::sqrt(w));
  }
  if (d.phi_r < 0) v = -v;
  return 2 * d.n + v;
}

}  // namespace elfun
