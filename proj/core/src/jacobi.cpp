#include "elfun/jacobi.hpp"

#include <array>

#include "detail.hpp"

namespace elfun {

namespace detail {

SplitValue two_k_split(double m) {
  if (m >= 1) return {kInf, 0.0};
  // Arithmetic-geometric mean in long double; on x86-64 this carries 11
  // extra bits, enough to keep n * 2K exact to double rounding for n < 2^11.
  long double a = 1.0L;
  long double b = std::sqrt(1.0L - static_cast<long double>(m));
  for (int it = 0; it < 64 && std::fabs(a - b) > 1e-19L * a; ++it) {
    const long double t = (a + b) / 2;
    b = std::sqrt(a * b);
    a = t;
  }
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double two_k = pi / ((a + b) / 2);
  const double hi = static_cast<double>(two_k);
  return {hi, static_cast<double>(two_k - hi)};
}

}  // namespace detail

namespace {

constexpr int kMaxLanden = 40;

// Bulirsch's sncndn for 0 <= m < 1, mc = 1 - m in (0, 1].  The descending
// Landen sequence is stored and the amplitude rebuilt by back substitution.
SnCnDn sncndn_unit(double x, double mc) {
  const Tolerances& tol = default_tolerances();
  std::array<double, kMaxLanden> ms{}, ns{};
  double c = 0;
  double a = 1;
  int l = 0;
  bool converged = false;
  for (; l < kMaxLanden && l < tol.max_iter; ++l) {
    ms[l] = a;
    ns[l] = mc = std::sqrt(mc);
    c = (a + mc) / 2;
    if (!(std::abs(a - mc) > tol.iter_tol * a)) {
      ++l;
      converged = true;
      break;
    }
    mc *= a;
    a = c;
  }
  if (!converged || std::isnan(c)) return {kNaN, kNaN, kNaN};
  x *= c;
  double sn = std::sin(x);
  double cn = std::cos(x);
  double dn = 1;
  if (sn != 0) {
    a = cn / sn;
    c *= a;
    while (l--) {
      const double b = ms[l];
      a *= c;
      c *= dn;
      dn = (ns[l] + a) / (b + a);
      a = c / b;
    }
    a = 1 / std::sqrt(c * c + 1);
    sn = sn < 0 ? -a : a;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

// 0 < m < 1 with the complement supplied separately to avoid 1 - m
// rounding after a transformation.
detail::ReducedArgument reduce_unit(double u, double m, double mc) {
  const auto two_k = detail::two_k_split(m);
  const auto d = reduce_by(u, two_k.hi, two_k.lo);
  SnCnDn v = sncndn_unit(d.phi_r, mc);
  return {d.n, d.phi_r, v};
}

bool odd_count(double n) { return std::fmod(n, 2.0) != 0; }

SnCnDn sncndn_nonneg(double u, double m) {
  if (m == 0) return {std::sin(u), std::cos(u), 1.0};
  if (m == 1) {
    const double sech = 1 / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }
  if (m > 0 && m < 1) {
    auto red = reduce_unit(u, m, 1 - m);
    if (odd_count(red.n)) {
      red.at_r.sn = -red.at_r.sn;
      red.at_r.cn = -red.at_r.cn;
    }
    return red.at_r;
  }
  if (m < 0) {
    // Imaginary modulus: parameter mu = -m / (1 - m) in (0, 1).
    const double w = 1 - m;
    const double sw = std::sqrt(w);
    const double mu = -m / w;
    auto red = reduce_unit(u * sw, mu, 1 / w);
    SnCnDn t = red.at_r;
    if (odd_count(red.n)) {
      t.sn = -t.sn;
      t.cn = -t.cn;
    }
    // Project onto sn^2 + cn^2 = 1 to cancel the rounding of the two divisions.
    const double sn = t.sn / sw;
    const double r = std::hypot(sn, t.cn);
    return {sn / r, t.cn / r, 1 / t.dn};
  }
  // m > 1: reciprocal parameter mu = 1 / m.
  const double sm = std::sqrt(m);
  const double mu = 1 / m;
  auto red = reduce_unit(u * sm, mu, 1 - mu);
  SnCnDn t = red.at_r;
  if (odd_count(red.n)) {
    t.sn = -t.sn;
    t.cn = -t.cn;
  }
  return {t.sn / sm, t.dn, t.cn};
}

}  // namespace

namespace detail {

ReducedArgument reduce_jacobi(double u, double m) {
  if (m == 0) return {0.0, u, {std::sin(u), std::cos(u), 1.0}};
  const auto two_k = two_k_split(m);
  const auto d = reduce_by(u, two_k.hi, two_k.lo);
  return {d.n, d.phi_r, sncndn(d.phi_r, m)};
}

}  // namespace detail

std::string_view to_string(GlaisherCode code) {
  switch (code) {
    case GlaisherCode::sn: return "sn";
    case GlaisherCode::cn: return "cn";
    case GlaisherCode::dn: return "dn";
    case GlaisherCode::cd: return "cd";
    case GlaisherCode::cs: return "cs";
    case GlaisherCode::dc: return "dc";
    case GlaisherCode::ds: return "ds";
    case GlaisherCode::nc: return "nc";
    case GlaisherCode::nd: return "nd";
    case GlaisherCode::ns: return "ns";
    case GlaisherCode::sc: return "sc";
    case GlaisherCode::sd: return "sd";
  }
  return "?";
}

std::optional<GlaisherCode> parse_glaisher(std::string_view text) {
  for (GlaisherCode c : kAllGlaisherCodes)
    if (to_string(c) == text) return c;
  return std::nullopt;
}

Parity parity(GlaisherCode code) {
  switch (code) {
    case GlaisherCode::sn:
    case GlaisherCode::sc:
    case GlaisherCode::sd:
    case GlaisherCode::cs:
    case GlaisherCode::ds:
    case GlaisherCode::ns:
      return Parity::odd;
    default:
      return Parity::even;
  }
}

SnCnDn sncndn(double x, double m) {
  if (any_nan(x, m) || std::isinf(x) || std::isinf(m)) return {kNaN, kNaN, kNaN};
  if (x < 0) {
    SnCnDn v = sncndn_nonneg(-x, m);
    v.sn = -v.sn;
    return v;
  }
  return sncndn_nonneg(x + 0.0, m);
}

ExtReal mjam(double x, double m) {
  if (any_nan(x, m) || std::isinf(m)) return kNaN;
  return apply_symmetry(Parity::odd, x, [m](double u) -> double {
    if (std::isinf(u)) return m < 1 ? kInf : (m == 1 ? kHalfPi : kNaN);
    if (m == 0) return u;
    if (m == 1) return std::atan(std::sinh(u));
    if (m > 1) {
      const SnCnDn v = sncndn(u, m);
      return std::atan2(v.sn, v.cn);
    }
    const auto red = detail::reduce_jacobi(u, m);
    const double am_r = std::atan2(red.at_r.sn, red.at_r.cn);
    if (red.n == 0) return am_r;
    constexpr double kPiLo = 1.2246467991473532e-16;
    return std::fma(red.n, kPi, std::fma(red.n, kPiLo, am_r));
  });
}

ExtReal glaisher(GlaisherCode code, double x, double m) {
  if (any_nan(x, m)) return kNaN;
  return apply_symmetry(parity(code), x, [code, m](double u) -> double {
    const SnCnDn v = sncndn(u, m);
    switch (code) {
      case GlaisherCode::sn: return v.sn;
      case GlaisherCode::cn: return v.cn;
      case GlaisherCode::dn: return v.dn;
      case GlaisherCode::cd: return v.cn / v.dn;
      case GlaisherCode::cs: return v.cn / v.sn;
      case GlaisherCode::dc: return v.dn / v.cn;
      case GlaisherCode::ds: return v.dn / v.sn;
      case GlaisherCode::nc: return 1 / v.cn;
      case GlaisherCode::nd: return 1 / v.dn;
      case GlaisherCode::ns: return 1 / v.sn;
      case GlaisherCode::sc: return v.sn / v.cn;
      case GlaisherCode::sd: return v.sn / v.dn;
    }
    return kNaN;
  });
}

}  // namespace elfun
