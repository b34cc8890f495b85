#include "elfun/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <sstream>

#include "elfun/registry.hpp"

namespace elfun::oracle {

namespace {

using LD = long double;

constexpr LD kPiL = 3.141592653589793238462643383279502884L;
constexpr LD kInfL = std::numeric_limits<LD>::infinity();
constexpr LD kNaNL = std::numeric_limits<LD>::quiet_NaN();
constexpr int kMaxIntervals = 4000;

// Gauss-Kronrod 7/15 abscissae and weights.
constexpr LD kXgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
constexpr LD kWgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
constexpr LD kWg[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

struct Panel {
  LD a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod(F& f, LD a, LD b) {
  const LD c = (a + b) / 2;
  const LD h = (b - a) / 2;
  const LD fc = f(c);
  LD k = fc * kWgk[7];
  LD g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const LD dx = h * kXgk[j];
    const LD s = f(c - dx) + f(c + dx);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return {a, b, k * h, std::fabs((k - g) * h)};
}

// Global adaptive bisection: always split the panel with the largest error.
template <class F>
QuadResult adapt(F&& f, LD a, LD b, LD tol) {
  std::priority_queue<Panel> heap;
  Panel first = gauss_kronrod(f, a, b);
  LD total = first.value;
  LD error = first.error;
  heap.push(first);
  int count = 1;
  while (error > tol * std::fabs(total) && error > std::numeric_limits<LD>::min()) {
    if (count >= kMaxIntervals || !std::isfinite(total)) {
      return {total, error, false, "interval budget exhausted"};
    }
    Panel worst = heap.top();
    heap.pop();
    const LD mid = (worst.a + worst.b) / 2;
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Recompute the sums to drop the running-update rounding.
  total = 0;
  error = 0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {total, error, std::isfinite(total), ""};
}

LD arg(std::span<const double> a, std::size_t i) { return i < a.size() ? a[i] : 0.0L; }

// Integrand at t; `to_upper` is upper - t, accurate near a finite upper end.
LD integrand(Integrand kind, std::span<const double> args, LD t, LD to_upper, LD upper) {
  switch (kind) {
    case Integrand::carlson_rc: {
      const LD x = arg(args, 0), y = arg(args, 1);
      return 0.5L / ((t + y) * std::sqrt(t + x));
    }
    case Integrand::carlson_rf: {
      const LD x = arg(args, 0), y = arg(args, 1), z = arg(args, 2);
      return 0.5L / std::sqrt((t + x) * (t + y) * (t + z));
    }
    case Integrand::carlson_rd: {
      const LD x = arg(args, 0), y = arg(args, 1), z = arg(args, 2);
      return 1.5L / ((t + z) * std::sqrt((t + x) * (t + y) * (t + z)));
    }
    case Integrand::carlson_rj: {
      const LD x = arg(args, 0), y = arg(args, 1), z = arg(args, 2), p = arg(args, 3);
      return 1.5L / ((t + p) * std::sqrt((t + x) * (t + y) * (t + z)));
    }
    case Integrand::carlson_rg: {
      const LD x = arg(args, 0), y = arg(args, 1), z = arg(args, 2);
      const LD s = x / (t + x) + y / (t + y) + z / (t + z);
      return 0.25L * t * s / std::sqrt((t + x) * (t + y) * (t + z));
    }
    case Integrand::legendre_B:
    case Integrand::legendre_D:
    case Integrand::legendre_E:
    case Integrand::legendre_F:
    case Integrand::legendre_Pi:
    case Integrand::complete_C: {
      const bool pi = kind == Integrand::legendre_Pi;
      const LD m = arg(args, pi ? 1 : 0);
      const LD s = std::sin(t);
      const LD c = std::cos(t);
      const LD d2 = 1 - m * s * s;
      const LD d = std::sqrt(d2);
      switch (kind) {
        case Integrand::legendre_B: return c * c / d;
        case Integrand::legendre_D: return s * s / d;
        case Integrand::legendre_E: return d;
        case Integrand::legendre_F: return 1 / d;
        case Integrand::legendre_Pi: return 1 / ((1 - arg(args, 0) * s * s) * d);
        default: return s * s * c * c / (d2 * d);
      }
    }
    case Integrand::lemniscate: {
      const LD one_minus = std::isfinite(upper) ? (1 - upper) + to_upper : 1 - t;
      return 1 / std::sqrt(one_minus * (1 + t) * (1 + t * t));
    }
    case Integrand::bulirsch: {
      const LD kc = arg(args, 0), p = arg(args, 1), a = arg(args, 2), b = arg(args, 3);
      const LD t2 = t * t;
      return (a + b * t2) / ((1 + p * t2) * std::sqrt((1 + t2) * (1 + kc * kc * t2)));
    }
  }
  return kNaNL;
}

LD carlson_scale(std::span<const double> args) {
  LD s = 0;
  int n = 0;
  for (double v : args) {
    if (v > 0) {
      s += v;
      ++n;
    }
  }
  return n ? s / n : 1;
}

LD clamp_tol(double tol) { return std::max<LD>(tol, 1e-14L); }

}  // namespace

QuadResult integrate(const OracleSpec& spec, std::span<const double> args) {
  const LD tol = clamp_tol(spec.target_tol);
  const LD a = spec.lower;
  const LD b = spec.upper;
  if (std::isnan(a) || std::isnan(b)) return {kNaNL, 0, false, "NaN limit"};
  if (a == b) return {0, 0, true, ""};
  if (std::isinf(b)) {
    // t = a + s tan^2 w, w in [0, pi/2).
    const LD s = carlson_scale(args);
    auto f = [&](LD w) {
      const LD tn = std::tan(w);
      const LD sec = 1 / std::cos(w);
      return integrand(spec.integrand, args, a + s * tn * tn, kInfL, b) * 2 * s * tn * sec * sec;
    };
    return adapt(f, 0.0L, kPiL / 2, tol);
  }
  if (spec.singular_lower || spec.singular_upper) {
    // t = a + (b - a) sin^2 w removes 1/sqrt singularities at both ends.
    const LD h = b - a;
    auto f = [&](LD w) {
      const LD s = std::sin(w);
      const LD c = std::cos(w);
      return integrand(spec.integrand, args, a + h * s * s, h * c * c, b) * 2 * h * s * c;
    };
    return adapt(f, 0.0L, kPiL / 2, tol);
  }
  auto f = [&](LD t) { return integrand(spec.integrand, args, t, b - t, b); };
  return adapt(f, a, b, tol);
}

ExtReal quad(const OracleSpec& spec, std::span<const double> args) {
  const QuadResult r = integrate(spec, args);
  return r.converged ? static_cast<double>(r.value) : kNaN;
}

// ---- reference functions -----------------------------------------------------

namespace {

constexpr double kRefTol = 1e-14;

LD run(Integrand kind, std::initializer_list<double> args, LD lower, LD upper,
       bool singular_upper = false) {
  OracleSpec spec{kind, lower, upper, false, singular_upper, kRefTol};
  const std::vector<double> v(args);
  const QuadResult r = integrate(spec, v);
  return r.converged ? r.value : kNaNL;
}

Integrand theta_integrand(Kind kind) {
  switch (kind) {
    case Kind::B: return Integrand::legendre_B;
    case Kind::D: return Integrand::legendre_D;
    case Kind::E: return Integrand::legendre_E;
    case Kind::F: return Integrand::legendre_F;
    case Kind::Pi: return Integrand::legendre_Pi;
  }
  return Integrand::legendre_F;
}

// Integral from 0 to |phi| <= pi/2, sign restored.
LD principal(Kind kind, LD phi, LD nu, LD m) {
  const LD a = std::fabs(phi);
  if (a == 0) return 0;
  const LD s2 = std::sin(a) * std::sin(a);
  if (m * s2 > 1) return kNaNL;
  if (kind == Kind::Pi && nu * s2 >= 1) return nu * s2 == 1 ? kInfL : kNaNL;
  const bool edge = m > 1 && m * s2 > 0.5L;
  const Integrand in = theta_integrand(kind);
  const LD v = kind == Kind::Pi ? run(in, {double(nu), double(m)}, 0, a, edge)
                                : run(in, {double(m)}, 0, a, edge);
  return phi < 0 ? -v : v;
}

}  // namespace

long double rf(long double x, long double y, long double z) {
  return run(Integrand::carlson_rf, {double(x), double(y), double(z)}, 0, kInfL);
}
long double rd(long double x, long double y, long double z) {
  return run(Integrand::carlson_rd, {double(x), double(y), double(z)}, 0, kInfL);
}
long double rj(long double x, long double y, long double z, long double p) {
  return run(Integrand::carlson_rj, {double(x), double(y), double(z), double(p)}, 0, kInfL);
}
long double rg(long double x, long double y, long double z) {
  return run(Integrand::carlson_rg, {double(x), double(y), double(z)}, 0, kInfL);
}
long double rc(long double x, long double y) {
  return run(Integrand::carlson_rc, {double(x), double(y)}, 0, kInfL);
}

long double complete(Kind kind, long double nu, long double m) {
  if (m > 1) return kNaNL;
  if (kind == Kind::Pi && nu >= 1) return nu == 1 ? kInfL : kNaNL;
  if (m == 1 && kind != Kind::E && kind != Kind::B) return kInfL;
  return principal(kind, kPiL / 2, nu, m);
}

long double complete_C(long double m) {
  if (m >= 1) return m == 1 ? kInfL : kNaNL;
  return run(Integrand::complete_C, {double(m)}, 0, kPiL / 2);
}

long double legendre(Kind kind, long double phi, long double nu, long double m) {
  const LD n = std::nearbyint(phi / kPiL);
  const LD r = phi - n * kPiL;
  if (n == 0) return principal(kind, r, nu, m);
  if (m > 1) return kNaNL;
  if (kind == Kind::Pi && nu > 1) return kNaNL;
  return 2 * n * complete(kind, nu, m) + principal(kind, r, nu, m);
}

namespace {

struct Reduced {
  LD n;    // u = 2 n K + r
  LD r;
  LD psi;  // am(r | m) in [-pi/2, pi/2]
};

// Solves F(psi | m) = r for psi with safeguarded Newton steps.
LD invert_F(LD r, LD m, LD k) {
  if (r == 0) return 0;
  LD lo = -kPiL / 2, hi = kPiL / 2;
  LD psi = std::clamp(r / k * (kPiL / 2), lo, hi);
  for (int it = 0; it < 80; ++it) {
    const LD f = principal(Kind::F, psi, 0, m) - r;
    if (f > 0) hi = psi; else lo = psi;
    const LD s = std::sin(psi);
    LD next = psi - f * std::sqrt(1 - m * s * s);
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    const LD step = std::fabs(next - psi);
    psi = next;
    if (step <= 1e-17L * std::max<LD>(1, std::fabs(psi)) || hi - lo < 1e-18L) break;
  }
  return psi;
}

Reduced reduce(LD u, LD m) {
  const LD k = complete(Kind::F, 0, m);
  const LD n = std::nearbyint(u / (2 * k));
  const LD r = u - 2 * n * k;
  return {n, r, invert_F(r, m, k)};
}

}  // namespace

long double amplitude(long double u, long double m) {
  if (m >= 1) return kNaNL;
  const Reduced d = reduce(u, m);
  return d.n * kPiL + d.psi;
}

long double jacobi_epsilon(long double u, long double m) {
  if (m == 1) return std::tanh(u);
  if (m < 1) {
    const Reduced d = reduce(u, m);
    LD v = principal(Kind::E, d.psi, 0, m);
    if (d.n != 0) v += 2 * d.n * complete(Kind::E, 0, m);
    return v;
  }
  const LD mu = 1 / m;
  const LD sm = std::sqrt(m);
  const Reduced d = reduce(u * sm, mu);
  LD v = principal(Kind::B, d.psi, 0, mu);
  if (d.n != 0) v += 2 * d.n * complete(Kind::B, 0, mu);
  return v / sm;
}

long double jacobi_zeta(long double u, long double m) {
  if (m > 1) return kNaNL;
  if (m == 1) return std::tanh(u);
  if (m == 0) return 0;
  const Reduced d = reduce(u, m);
  const LD ratio = complete(Kind::E, 0, m) / complete(Kind::F, 0, m);
  return principal(Kind::E, d.psi, 0, m) - ratio * d.r;
}

long double jacobi_lambda(long double u, long double nu, long double m) {
  if (m > 1) {
    const LD sm = std::sqrt(m);
    return jacobi_lambda(u * sm, nu / m, 1 / m) / sm;
  }
  if (m == 1) return kNaNL;
  const Reduced d = reduce(u, m);
  LD v = principal(Kind::Pi, d.psi, nu, m);
  if (d.n != 0) v += 2 * d.n * complete(Kind::Pi, nu, m);
  return v;
}

// ---- name dispatch -------------------------------------------------------------

namespace {

struct Entry {
  const char* name;
  int arity;
  LD (*fn)(std::span<const double>);
};

LD x_to_phi(double x) { return std::fabs(x) <= 1 ? std::asin(static_cast<LD>(x)) : kNaNL; }

LD mp_zeta(std::span<const double> a) {
  const LD m = a[1];
  if (m > 1) return kNaNL;
  if (m == 0) return 0;
  const LD phi = a[0];
  const LD n = std::nearbyint(phi / kPiL);
  const LD r = phi - n * kPiL;
  if (m == 1) return std::sin(r);
  const LD ratio = complete(Kind::E, 0, m) / complete(Kind::F, 0, m);
  return principal(Kind::E, r, 0, m) - ratio * principal(Kind::F, r, 0, m);
}

const Entry kEntries[] = {
    {"rf", 3, [](std::span<const double> a) { return rf(a[0], a[1], a[2]); }},
    {"rd", 3, [](std::span<const double> a) { return rd(a[0], a[1], a[2]); }},
    {"rj", 4, [](std::span<const double> a) { return rj(a[0], a[1], a[2], a[3]); }},
    {"rg", 3, [](std::span<const double> a) { return rg(a[0], a[1], a[2]); }},
    {"rc", 2, [](std::span<const double> a) { return rc(a[0], a[1]); }},
    {"melK", 1, [](std::span<const double> a) { return complete(Kind::F, 0, a[0]); }},
    {"melE", 1, [](std::span<const double> a) { return complete(Kind::E, 0, a[0]); }},
    {"melB", 1, [](std::span<const double> a) { return complete(Kind::B, 0, a[0]); }},
    {"melD", 1, [](std::span<const double> a) { return complete(Kind::D, 0, a[0]); }},
    {"melC", 1, [](std::span<const double> a) { return complete_C(a[0]); }},
    {"melPi", 2, [](std::span<const double> a) { return complete(Kind::Pi, a[0], a[1]); }},
    {"mpelB", 2, [](std::span<const double> a) { return legendre(Kind::B, a[0], 0, a[1]); }},
    {"mpelD", 2, [](std::span<const double> a) { return legendre(Kind::D, a[0], 0, a[1]); }},
    {"mpelE", 2, [](std::span<const double> a) { return legendre(Kind::E, a[0], 0, a[1]); }},
    {"mpelF", 2, [](std::span<const double> a) { return legendre(Kind::F, a[0], 0, a[1]); }},
    {"mpelPi", 3,
     [](std::span<const double> a) { return legendre(Kind::Pi, a[0], a[1], a[2]); }},
    {"melB", 2,
     [](std::span<const double> a) { return legendre(Kind::B, x_to_phi(a[0]), 0, a[1]); }},
    {"melD", 2,
     [](std::span<const double> a) { return legendre(Kind::D, x_to_phi(a[0]), 0, a[1]); }},
    {"melE", 2,
     [](std::span<const double> a) { return legendre(Kind::E, x_to_phi(a[0]), 0, a[1]); }},
    {"melF", 2,
     [](std::span<const double> a) { return legendre(Kind::F, x_to_phi(a[0]), 0, a[1]); }},
    {"melPi", 3,
     [](std::span<const double> a) {
       return legendre(Kind::Pi, x_to_phi(a[0]), a[1], a[2]);
     }},
    {"mjepsilon", 2, [](std::span<const double> a) { return jacobi_epsilon(a[0], a[1]); }},
    {"mJzeta", 2, [](std::span<const double> a) { return jacobi_zeta(a[0], a[1]); }},
    {"mpJzeta", 2, mp_zeta},
    {"mjlambda", 3,
     [](std::span<const double> a) { return jacobi_lambda(a[0], a[1], a[2]); }},
    {"mjam", 2, [](std::span<const double> a) { return amplitude(a[0], a[1]); }},
    {"mjsn", 2, [](std::span<const double> a) { return std::sin(amplitude(a[0], a[1])); }},
    {"mjcn", 2, [](std::span<const double> a) { return std::cos(amplitude(a[0], a[1])); }},
    {"mjdn", 2,
     [](std::span<const double> a) {
       const LD s = std::sin(amplitude(a[0], a[1]));
       return std::sqrt(1 - a[1] * s * s);
     }},
    {"igsl", 1,
     [](std::span<const double> a) {
       const LD x = std::fabs(static_cast<LD>(a[0]));
       if (x > 1) return kNaNL;
       const LD v = run(Integrand::lemniscate, {}, 0, x, x == 1);
       return a[0] < 0 ? -v : v;
     }},
    {"el1", 2,
     [](std::span<const double> a) {
       const LD x = std::fabs(static_cast<LD>(a[0]));
       const LD v = run(Integrand::bulirsch, {a[1], 0, 1, 0}, 0, x);
       return a[0] < 0 ? -v : v;
     }},
    {"el2", 4,
     [](std::span<const double> a) {
       const LD x = std::fabs(static_cast<LD>(a[0]));
       const LD v = run(Integrand::bulirsch, {a[1], 1, a[2], a[3]}, 0, x);
       return a[0] < 0 ? -v : v;
     }},
    {"el3", 3,
     [](std::span<const double> a) {
       const LD x = std::fabs(static_cast<LD>(a[0]));
       if (1 + a[2] * x * x <= 0) return kNaNL;
       const LD v = run(Integrand::bulirsch, {a[1], a[2], 1, 1}, 0, x);
       return a[0] < 0 ? -v : v;
     }},
    {"cel", 4,
     [](std::span<const double> a) {
       if (a[1] <= 0 || a[0] == 0) return kNaNL;
       return run(Integrand::bulirsch, {a[0], a[1], a[2], a[3]}, 0, kInfL);
     }},
};

bool same_name(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) ==
           std::tolower(static_cast<unsigned char>(y));
  });
}

}  // namespace

std::optional<long double> reference(std::string_view name, std::span<const double> args) {
  for (const Entry& e : kEntries) {
    if (same_name(e.name, name) && static_cast<std::size_t>(e.arity) == args.size())
      return e.fn(args);
  }
  return std::nullopt;
}

std::vector<std::string> covered_functions() {
  std::vector<std::string> out;
  for (const Entry& e : kEntries) out.emplace_back(e.name);
  return out;
}

ReportRow error_report(std::string_view function, const std::vector<Range>& ranges,
                       int n_samples, std::uint64_t seed) {
  const FunctionDescriptor& f = lookup(function, static_cast<int>(ranges.size()));
  ReportRow row;
  row.function = f.name;
  row.ranges = ranges;
  std::mt19937_64 gen(seed);
  std::vector<double> args(ranges.size());
  long double sum_sq = 0;
  for (int i = 0; i < n_samples; ++i) {
    for (std::size_t j = 0; j < ranges.size(); ++j)
      args[j] = std::uniform_real_distribution<double>(ranges[j].lo, ranges[j].hi)(gen);
    const auto ref = reference(f.name, args);
    if (!ref) throw std::invalid_argument("no reference for " + f.name);
    const double value = f(args);
    if (!std::isfinite(*ref) || !std::isfinite(value)) continue;
    const long double abs_err = std::fabs(value - *ref);
    const long double rel_err = *ref != 0 ? abs_err / std::fabs(*ref) : abs_err;
    row.mae_eps = std::max<double>(row.mae_eps, abs_err / kEps);
    row.mre_eps = std::max<double>(row.mre_eps, rel_err / kEps);
    sum_sq += rel_err * rel_err;
    ++row.samples;
  }
  if (row.samples > 0) row.rms_eps = std::sqrt(sum_sq / row.samples) / kEps;
  return row;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.ranges.size());
  std::ostringstream os;
  os.precision(17);
  os << "func";
  for (std::size_t j = 1; j <= width; ++j) os << ",min" << j << ",max" << j;
  os << ",MAE/eps,MRE/eps,RMS/eps,samples\n";
  for (const auto& r : rows) {
    os << r.function;
    for (std::size_t j = 0; j < width; ++j) {
      if (j < r.ranges.size()) os << ',' << r.ranges[j].lo << ',' << r.ranges[j].hi;
      else os << ",,";
    }
    os << ',' << r.mae_eps << ',' << r.mre_eps << ',' << r.rms_eps << ',' << r.samples << '\n';
  }
  return os.str();
}

}  // namespace elfun::oracle
