#include "elfun/inverse.hpp"

#include "detail.hpp"
#include "elfun/integrals.hpp"

namespace elfun {

namespace {

double root_or_nan(double r) { return r >= 0 ? std::sqrt(r) : kNaN; }

// sin and cos of the amplitude of F for |x| = a.  Both come from their own
// closed form so that neither loses the other's complement near a pole.
// Large-a branches divide through by a^2 so that a -> Inf gives the limit.
struct Amplitude {
  double s;
  double c;
};

Amplitude reduced_argument(GlaisherCode code, double a, double m) {
  const double a2 = a * a;
  const double ia2 = 1 / a2;
  const double mc = 1 - m;
  switch (code) {
    case GlaisherCode::sn: return {a, root_or_nan((1 - a) * (1 + a))};
    case GlaisherCode::cn: return {root_or_nan((1 - a) * (1 + a)), a};
    case GlaisherCode::dn:
      return {root_or_nan((1 - a) * (1 + a) / m), root_or_nan((a2 - mc) / m)};
    case GlaisherCode::cd:
      if (a > 1) return {root_or_nan((ia2 - 1) / (ia2 - m)), root_or_nan(mc / (ia2 - m))};
      return {root_or_nan((1 - a) * (1 + a) / (1 - m * a2)), a * root_or_nan(mc / (1 - m * a2))};
    case GlaisherCode::dc:
      if (a > 1)
        return {root_or_nan((1 - ia2) / (1 - m * ia2)), root_or_nan(mc * ia2 / (1 - m * ia2))};
      return {root_or_nan((a2 - 1) / (a2 - m)), root_or_nan(mc / (a2 - m))};
    case GlaisherCode::nc: return {root_or_nan(1 - ia2), 1 / a};
    case GlaisherCode::nd: return {root_or_nan((1 - ia2) / m), root_or_nan((ia2 - mc) / m)};
    case GlaisherCode::ns: return {1 / a, root_or_nan((a - 1) * (a + 1)) / a};
    case GlaisherCode::sc: {
      const double h = std::hypot(1.0, a);
      return {a / h, 1 / h};
    }
    case GlaisherCode::cs: {
      const double h = std::hypot(1.0, a);
      return {1 / h, a / h};
    }
    case GlaisherCode::sd:
      if (a > 1) return {1 / std::sqrt(ia2 + m), root_or_nan((ia2 - mc) / (ia2 + m))};
      return {a / std::sqrt(1 + m * a2), root_or_nan((1 - mc * a2) / (1 + m * a2))};
    case GlaisherCode::ds:
      if (a > 1)
        return {(1 / a) / std::sqrt(1 + m * ia2), root_or_nan((1 - mc * ia2) / (1 + m * ia2))};
      return {1 / std::sqrt(m + a2), root_or_nan((a2 - mc) / (m + a2))};
  }
  return {kNaN, kNaN};
}

// Even codes that take negative values on (K, 2K) when m < 1.
bool changes_sign(GlaisherCode code) {
  return code == GlaisherCode::cn || code == GlaisherCode::cd ||
         code == GlaisherCode::dc || code == GlaisherCode::nc;
}

}  // namespace

ExtReal inverse_glaisher(GlaisherCode code, double x, double m) {
  if (any_nan(x, m) || std::isinf(m)) return kNaN;
  if (code == GlaisherCode::sn) return melF(x, m);
  if ((code == GlaisherCode::dn || code == GlaisherCode::nd) && m == 0)
    return x == 1 ? 0.0 : kNaN;
  const double a = std::abs(x);
  const auto [sa, ca] = reduced_argument(code, a, m);
  if (std::isnan(sa) || std::isnan(ca) || sa > 1) return kNaN;
  const double dn2 = m > 0 && m <= 1 ? (1 - m) + m * ca * ca : 1 - m * sa * sa;
  if (dn2 < 0) return kNaN;
  const double f = detail::kernel_F(sa, ca, dn2);
  if (parity(code) == Parity::odd) return x < 0 ? -f : f;
  if (x >= 0) return f;
  if (m >= 1 || !changes_sign(code)) return kNaN;
  return 2 * melK(m) - f;
}

ExtReal mijam(double x, double m) { return mpelF(x, m); }

}  // namespace elfun
