#include "elfun/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "elfun/demos.hpp"
#include "elfun/integrals.hpp"
#include "elfun/inverse.hpp"
#include "elfun/jacobi.hpp"
#include "elfun/kforms.hpp"
#include "elfun/registry.hpp"
#include "elfun/theta.hpp"

namespace elfun {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool same_bits(double a, double b) {
  if (std::isnan(a) && std::isnan(b)) return true;
  return std::memcmp(&a, &b, sizeof a) == 0;
}

// Rounds to `digits` significant decimal digits.
double round_sig(double v, int digits) {
  if (v == 0 || !std::isfinite(v)) return v;
  const double scale = std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(v))));
  return std::round(v * scale) / scale;
}

struct Golden {
  const char* name;
  double value;
};

// x = 0.23, k = 0.999.
constexpr Golden kTable[] = {
    {"jcd", 0.999946}, {"jcn", 0.974120}, {"jcs", 4.309650}, {"jdc", 1.000050},
    {"jdn", 0.974172}, {"jds", 4.309880}, {"jnc", 1.026570}, {"jnd", 1.026510},
    {"jns", 4.424150}, {"jsc", 0.232037}, {"jsd", 0.232025}, {"jsn", 0.226032},
    {"jzeta", 0.174671}};

double eval2(const char* name, double x, double k) {
  const double args[] = {x, k};
  return lookup(name, 2)(args);
}

// ---- 1 ----------------------------------------------------------------------

CriterionResult golden_values() {
  CriterionResult r{1, "golden values at x = 0.23, k = 0.999", false, "", 0};
  int bad = 0;
  std::string worst;
  for (const Golden& g : kTable) {
    const double v = eval2(g.name, 0.23, 0.999);
    if (round_sig(v, 6) != round_sig(g.value, 6)) {
      ++bad;
      worst += std::string(" ") + g.name + "=" + fmt(v);
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(13 - bad) + "/13 match to 6 significant digits" + worst;
  return r;
}

// ---- 2 ----------------------------------------------------------------------

CriterionResult quasi_periodicity() {
  CriterionResult r{2, "shift by 1e5 K(k) at x = 0.23, k = 0.999", false, "", 0};
  const double shift = 1e5 * elK(0.999);
  double worst = 0;
  for (const Golden& g : kTable) {
    const double d = std::abs(eval2(g.name, 0.23, 0.999) - eval2(g.name, 0.23 + shift, 0.999));
    worst = std::isnan(d) ? d : std::max(worst, d);
  }
  r.pass = worst <= 1e-6;
  r.detail = "max |f(x) - f(x + N K)| = " + fmt(worst) + " (limit 1e-6)";
  return r;
}

// ---- 3 ----------------------------------------------------------------------

CriterionResult poles() {
  CriterionResult r{3, "poles and limits of K and E", false, "", 0};
  const double k1 = melK(1);
  const double kinf = melK(-kInf);
  const double e1 = melE(1);
  const bool ok_k1 = std::isinf(k1) && k1 > 0;
  const bool ok_kinf = kinf == 0;
  const bool ok_e1 = std::abs(e1 - 1) <= 2 * kEps;
  r.pass = ok_k1 && ok_kinf && ok_e1;
  r.detail = "K(1) = " + fmt(k1) + ", K(-Inf) = " + fmt(kinf) + ", E(1) = " + fmt(e1);
  return r;
}

// ---- 4 ----------------------------------------------------------------------

CriterionResult random_accuracy(std::uint64_t seed, SelftestReport* report) {
  CriterionResult r{4, "random-sample accuracy vs quadrature, |x|,|m|,|nu| <= 0.5", false, "", 0};
  const oracle::Range h{-0.5, 0.5};
  std::vector<oracle::ReportRow> rows;
  rows.push_back(oracle::error_report("mpelE", {h, h}, 1000, seed));
  rows.push_back(oracle::error_report("mpelF", {h, h}, 1000, seed + 1));
  rows.push_back(oracle::error_report("mpelPi", {h, h, h}, 1000, seed + 2));
  bool ok = true;
  std::string detail;
  for (const auto& row : rows) {
    ok = ok && row.samples == 1000 && row.mre_eps <= 100 && row.rms_eps <= 50;
    detail += row.function + " MRE/eps=" + fmt(row.mre_eps) + " RMS/eps=" + fmt(row.rms_eps) + "; ";
  }
  r.pass = ok;
  r.detail = detail + "limits 100 and 50";
  if (report) report->error_rows = rows;
  return r;
}

// ---- 5 ----------------------------------------------------------------------

struct GridCase {
  const char* name;
  std::vector<double> args;
};

CriterionResult headline_accuracy() {
  CriterionResult r{5, "relative error <= 1e-9 vs quadrature, |m| <= 1e3, |x| <= 1e4", false, "", 0};
  const double ms[] = {-1000, -99.5, -7, -0.5, 0, 0.25, 0.75, 0.95, 0.999, 1.5, 9, 120, 1000};
  const double xs[] = {1e-3, -0.3, 1.2, 3.0, 17.5, -123.4, 2345.6, 9999.0};
  const double nus[] = {-100, -1, 0.5, 0.9};
  std::vector<GridCase> cases;
  for (double m : ms) {
    for (double x : xs) {
      cases.push_back({"mpelF", {x, m}});
      cases.push_back({"mpelE", {x, m}});
      cases.push_back({"mjepsilon", {x, m}});
      cases.push_back({"mJzeta", {x, m}});
      for (double nu : nus) cases.push_back({"mpelPi", {x, nu, m}});
    }
  }
  int checked = 0;
  int failed = 0;
  double worst = 0;
  std::string worst_case;
  for (const GridCase& c : cases) {
    const auto ref = oracle::reference(c.name, c.args);
    if (!ref || !std::isfinite(*ref)) continue;  // outside the real domain
    const double v = lookup(c.name, static_cast<int>(c.args.size()))(c.args);
    ++checked;
    const long double o = *ref;
    const double rel = o != 0 ? static_cast<double>(std::fabs(v - o) / std::fabs(o))
                              : std::abs(v);
    if (!(rel <= 1e-9)) ++failed;
    if (!(rel <= worst)) {
      worst = rel;
      std::ostringstream os;
      os << c.name << "(";
      for (std::size_t i = 0; i < c.args.size(); ++i) os << (i ? "," : "") << c.args[i];
      os << ")";
      worst_case = os.str();
    }
  }
  r.pass = failed == 0 && checked > 0;
  r.detail = std::to_string(checked) + " in-domain points, " + std::to_string(failed) +
             " above 1e-9; worst " + fmt(worst) + " at " + worst_case;
  return r;
}

// ---- 6 ----------------------------------------------------------------------

CriterionResult cantilever_length() {
  CriterionResult r{6, "cantilever length at psi1 = pi/3, lambda = 10, nu = 1, omega = 4", false, "", 0};
  CantileverConfig cfg;
  cfg.psi1 = kPi / 3;
  cfg.lambda = 10;
  cfg.nu = 1;
  cfg.omega = 4;
  const CantileverResult res = cantilever_solve(cfg);
  const CurveSample& o = res.samples.front();
  const bool origin = o.s == 0 && o.x == 0 && o.y == 0;
  const bool length = std::abs(res.L - 0.78555198) <= 1e-6;
  r.pass = origin && length;
  std::ostringstream os;
  os.precision(10);
  os << "L = " << res.L << " (expected 0.78555198 +- 1e-6), origin "
     << (origin ? "exact" : "not exact");
  r.detail = os.str();
  return r;
}

// ---- 7 ----------------------------------------------------------------------

CriterionResult elastica_properties() {
  CriterionResult r{7, "elastica curves for k = 0.1..0.9, omega = 5, C = 1", false, "", 0};
  ElasticaConfig cfg;
  bool finite = true;
  bool origin = true;
  for (const auto& curve : elastica_curve(cfg)) {
    origin = origin && curve.samples.front().x == 0 && curve.samples.front().y == 0;
    for (const auto& p : curve.samples)
      finite = finite && std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.phi);
  }
  ElasticaConfig flat = cfg;
  flat.k_list = {1e-13};
  double dev = 0;
  const auto curves = elastica_curve(flat);
  for (const auto& p : curves.front().samples)
    dev = std::max({dev, std::abs(p.x - p.s), std::abs(p.y)});
  r.pass = finite && origin && dev <= 1e-12;
  r.detail = std::string(finite ? "finite" : "NOT finite") + ", origin " +
             (origin ? "exact" : "NOT exact") + ", straight-rod deviation " + fmt(dev);
  return r;
}

// ---- 8 ----------------------------------------------------------------------

struct Tally {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst = 0;  // worst observed error measure
  void record(bool ok, double measure) {
    ++trials;
    if (!ok) ++failures;
    if (!(measure <= worst)) worst = measure;
  }
};

CriterionResult identities(std::uint64_t seed) {
  CriterionResult r{8, "identity suites, 1e4 random trials each", false, "", 0};
  constexpr int kTrials = 10000;
  std::mt19937_64 gen(seed);
  auto uniform = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); };
  std::vector<Tally> tallies;

  {  // sn^2 + cn^2 = 1, dn^2 + m sn^2 = 1
    Tally t{"pythagorean"};
    for (int i = 0; i < kTrials; ++i) {
      const double x = uniform(-1e4, 1e4);
      const double m = uniform(-1e3, 1);
      const SnCnDn v = sncndn(x, m);
      const double e1 = std::abs(v.sn * v.sn + v.cn * v.cn - 1);
      const double scale2 = v.dn * v.dn + std::abs(m) * v.sn * v.sn + 1;
      const double e2 = std::abs(v.dn * v.dn + m * v.sn * v.sn - 1);
      t.record(e1 <= 4 * kEps && e2 <= 4 * kEps * scale2,
               std::max(e1, e2 / scale2) / kEps);
    }
    tallies.push_back(t);
  }
  {  // k-form == m-form bit for bit
    Tally t{"k-wrapper"};
    std::vector<const FunctionDescriptor*> kforms;
    for (const auto& d : registry())
      if (d.table == "k") kforms.push_back(&d);
    for (int i = 0; i < kTrials; ++i) {
      const FunctionDescriptor& kf = *kforms[i % kforms.size()];
      const FunctionDescriptor& mf = lookup("m" + kf.name, kf.arity);
      std::vector<double> a(kf.arity);
      for (int j = 0; j + 1 < kf.arity; ++j) a[j] = uniform(-3, 3);
      if (kf.arity >= 3) a[kf.arity - 2] = uniform(-2, 0.95);  // characteristic
      const double k = uniform(-1.2, 1.2);
      a.back() = k;
      const double vk = kf(a);
      a.back() = k * k;
      const double vm = mf(a);
      t.record(same_bits(vk, vm), same_bits(vk, vm) ? 0 : 1);
    }
    tallies.push_back(t);
  }
  {  // inverse round trips
    Tally t{"inverse round trip"};
    for (int i = 0; i < kTrials; ++i) {
      const GlaisherCode code = kAllGlaisherCodes[i % 12];
      const double m = uniform(-3, 0.99);
      const double k = melK(m);
      const bool odd = parity(code) == Parity::odd;
      const double u = odd ? uniform(-k, k) : uniform(0, 2 * k);
      const double x = glaisher(code, u, m);
      if (!std::isfinite(x)) continue;
      const double back = glaisher(code, inverse_glaisher(code, x, m), m);
      const double err = std::abs(back - x) / std::max(1.0, std::abs(x));
      t.record(err <= 1e-9, err);
    }
    tallies.push_back(t);
  }
  {  // F, E, Pi quasi-periods
    Tally t{"quasi-period F/E/Pi"};
    constexpr long double kPiL = 3.141592653589793238462643383279502884L;
    for (int i = 0; i < kTrials; ++i) {
      const double m = uniform(-5, 0.99);
      const double nu = uniform(-5, 0.9);
      const double n = std::round(uniform(-50, 50));
      const double phi = uniform(-kHalfPi, kHalfPi) + n * kPi;
      const double phi_r = static_cast<double>(phi - n * kPiL);
      const int which = i % 3;
      double lhs, period;
      if (which == 0) {
        lhs = mpelF(phi, m) - mpelF(phi_r, m);
        period = 2 * n * melK(m);
      } else if (which == 1) {
        lhs = mpelE(phi, m) - mpelE(phi_r, m);
        period = 2 * n * melE(m);
      } else {
        lhs = mpelPi(phi, nu, m) - mpelPi(phi_r, nu, m);
        period = 2 * n * melPi(nu, m);
      }
      const double err = std::abs(lhs - period);
      t.record(err <= std::abs(period) * 1e-14, period != 0 ? err / std::abs(period) : err);
    }
    tallies.push_back(t);
  }
  {  // epsilon(K) = E
    Tally t{"epsilon(K) = E"};
    for (int i = 0; i < kTrials; ++i) {
      const double m = uniform(-5, 0.99);
      const double e = melE(m);
      const double err = std::abs(mjepsilon(melK(m), m) - e) / e;
      t.record(err <= 1e-12, err);
    }
    tallies.push_back(t);
  }
  {  // Lambda(K) = Pi
    Tally t{"Lambda(K) = Pi"};
    for (int i = 0; i < kTrials; ++i) {
      const double m = uniform(-5, 0.99);
      const double nu = uniform(-5, 0.9);
      const double p = melPi(nu, m);
      const double err = std::abs(mjlambda(melK(m), nu, m) - p) / p;
      t.record(err <= 1e-11, err);
    }
    tallies.push_back(t);
  }
  {  // theta_2^4 + theta_4^4 = theta_3^4 at x = 0
    Tally t{"theta identity"};
    for (int i = 0; i < kTrials; ++i) {
      const double q = uniform(0, 0.9);
      const double t2 = jtheta2(0, q), t3 = jtheta3(0, q), t4 = jtheta4(0, q);
      const double lhs = std::pow(t2, 4) + std::pow(t4, 4);
      const double rhs = std::pow(t3, 4);
      const double err = std::abs(lhs - rhs) / rhs;
      t.record(err <= 1e-12, err);
    }
    tallies.push_back(t);
  }
  {  // nome round trip
    Tally t{"nome round trip"};
    for (int i = 0; i < kTrials; ++i) {
      const double k = uniform(0, 0.9999);
      const double err = std::abs(ielnome(elnome(k)) - k);
      t.record(err <= 1e-12, err);
    }
    tallies.push_back(t);
  }
  bool ok = true;
  std::string detail;
  for (const Tally& t : tallies) {
    ok = ok && t.failures == 0 && t.trials > 0;
    detail += t.name + " " + std::to_string(t.trials - t.failures) + "/" +
              std::to_string(t.trials) + "; ";
  }
  r.pass = ok;
  r.detail = detail;
  return r;
}

// ---- 9 ----------------------------------------------------------------------

CriterionResult throughput() {
  CriterionResult r{9, "throughput of melK", false, "", 0};
  constexpr int kCalls = 2'000'000;
  volatile double sink = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < kCalls; ++i) sink = sink + melK(-2.0 + 2.9 * (i % 1000) / 1000.0);
  const double dt = seconds_since(t0);
  const double rate = kCalls / dt;
  r.pass = rate >= 1e6;
  r.detail = fmt(rate) + " evaluations per second (limit 1e6)";
  return r;
}

// ---- 10 ---------------------------------------------------------------------

CriterionResult robustness(std::uint64_t seed) {
  CriterionResult r{10, "fuzz: 1e6 random and adversarial inputs", false, "", 0};
  constexpr long kCalls = 1'000'000;
  constexpr double kBudget = 1e-3;
  const double specials[] = {0.0,
                             -0.0,
                             1.0,
                             -1.0,
                             0.5,
                             2.0,
                             kInf,
                             -kInf,
                             kNaN,
                             std::numeric_limits<double>::min(),
                             std::numeric_limits<double>::denorm_min(),
                             std::numeric_limits<double>::max(),
                             -std::numeric_limits<double>::max(),
                             1 - kEps,
                             1 + 2 * kEps,
                             kHalfPi,
                             kPi,
                             1e-300,
                             1e300,
                             0.999,
                             1e15};
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<std::size_t> special(0, std::size(specials) - 1);
  std::uniform_real_distribution<double> unit(-1, 1);
  std::uniform_int_distribution<int> expo(-30, 30);
  auto draw = [&]() -> double {
    switch (pick(gen)) {
      case 0: return specials[special(gen)];
      case 1: return unit(gen);
      case 2: return unit(gen) * std::ldexp(1.0, expo(gen));
      default: return unit(gen) * 20;
    }
  };
  const auto& fns = registry();
  long slow = 0;
  long bad_class = 0;
  double slowest = 0;
  std::vector<double> args(4);
  for (long i = 0; i < kCalls; ++i) {
    const FunctionDescriptor& f = fns[i % fns.size()];
    args.resize(f.arity);
    for (double& a : args) a = draw();
    double v = 0;
    double dt = kInf;
    // A slow call is retried so that a scheduler hiccup is not reported as a hang.
    for (int attempt = 0; attempt < 3 && dt > kBudget; ++attempt) {
      const auto t0 = Clock::now();
      v = f(args);
      dt = seconds_since(t0);
    }
    slowest = std::max(slowest, dt);
    if (dt > kBudget) ++slow;
    const int cls = std::fpclassify(v);
    if (cls != FP_NORMAL && cls != FP_SUBNORMAL && cls != FP_ZERO && cls != FP_INFINITE &&
        cls != FP_NAN)
      ++bad_class;
  }
  r.pass = slow == 0 && bad_class == 0;
  r.detail = std::to_string(kCalls) + " calls, " + std::to_string(slow) +
             " over 1 ms, slowest " + fmt(slowest * 1e3) + " ms";
  return r;
}

}  // namespace

bool SelftestReport::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return !criteria.empty();
}

CriterionResult run_criterion(int id, std::uint64_t seed, SelftestReport* report) {
  const auto t0 = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = golden_values(); break;
    case 2: r = quasi_periodicity(); break;
    case 3: r = poles(); break;
    case 4: r = random_accuracy(seed, report); break;
    case 5: r = headline_accuracy(); break;
    case 6: r = cantilever_length(); break;
    case 7: r = elastica_properties(); break;
    case 8: r = identities(seed); break;
    case 9: r = throughput(); break;
    case 10: r = robustness(seed); break;
    default: throw std::out_of_range("no criterion " + std::to_string(id));
  }
  r.seconds = seconds_since(t0);
  // Runtime limits.
  const double limit = id == 1 || id == 2 ? 1.0 : id == 4 ? 60.0 : id == 5 ? 120.0 : kInf;
  if (r.seconds > limit) {
    r.pass = false;
    r.detail += " [over time limit " + fmt(limit) + " s]";
  }
  return r;
}

SelftestReport run_selftest(std::uint64_t seed) {
  SelftestReport report;
  for (int id = 1; id <= kCriterionCount; ++id)
    report.criteria.push_back(run_criterion(id, seed, &report));
  return report;
}

}  // namespace elfun
