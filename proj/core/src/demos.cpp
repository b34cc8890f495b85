#include "elfun/demos.hpp"

#include <cmath>
#include <stdexcept>

#include "elfun/integrals.hpp"
#include "elfun/jacobi.hpp"
#include "elfun/kforms.hpp"

namespace elfun {

std::vector<double> default_s_grid() {
  std::vector<double> s(101);
  for (int i = 0; i <= 100; ++i) s[i] = i / 100.0;
  return s;
}

namespace {

std::string check_grid(const std::vector<double>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i] >= 0 && s[i] <= 1)) return "s grid values must lie in [0, 1]";
    if (i > 0 && !(s[i] > s[i - 1])) return "s grid must be strictly increasing";
  }
  return "";
}

}  // namespace

std::string ElasticaConfig::validate() const {
  if (!(omega > 0) || !std::isfinite(omega)) return "omega must be positive";
  if (!std::isfinite(C)) return "C must be finite";
  if (k_list.empty()) return "k list is empty";
  for (double k : k_list)
    if (!(k > 0 && k < 1)) return "every k must lie in (0, 1)";
  return check_grid(s_grid);
}

std::vector<ElasticaCurve> elastica_curve(const ElasticaConfig& cfg) {
  if (const std::string why = cfg.validate(); !why.empty()) throw std::invalid_argument(why);
  const std::vector<double> grid = cfg.s_grid.empty() ? default_s_grid() : cfg.s_grid;
  std::vector<ElasticaCurve> out;
  for (double k : cfg.k_list) {
    ElasticaCurve curve{k, {}};
    const double eps0 = jepsilon(cfg.C, k);
    const double cn0 = jcn(cfg.C, k);
    for (double s : grid) {
      const double u = cfg.omega * s + cfg.C;
      const double x = 2 * (jepsilon(u, k) - eps0) / cfg.omega - s;
      const double y = 2 * k * (cn0 - jcn(u, k)) / cfg.omega;
      const double phi = 2 * std::asin(k * jsn(u, k));
      curve.samples.push_back({s, x, y, phi});
    }
    out.push_back(std::move(curve));
  }
  return out;
}

std::string CantileverConfig::validate() const {
  if (!std::isfinite(psi1)) return "psi1 must be finite";
  if (!(lambda > 0) || !std::isfinite(lambda)) return "lambda must be positive";
  if (!(nu >= -1 && nu <= 1)) return "nu must lie in [-1, 1]";
  if (!(omega > 0) || !std::isfinite(omega)) return "omega must be positive";
  return check_grid(s_grid);
}

namespace {

struct Constants {
  double k, eta2, m2, omega_t, m_t, C, alpha;
  std::string diagnostic;
};

Constants constants(const CantileverConfig& cfg) {
  Constants c{};
  c.eta2 = (cfg.omega / cfg.lambda) * (cfg.omega / cfg.lambda);
  c.k = std::sin(cfg.psi1 / 2);
  const double k2 = c.k * c.k;
  const double denom = 1 - cfg.nu * c.eta2 * (1 - k2);
  const double radicand = 1 + cfg.nu * c.eta2 * (2 * k2 - 1);
  if (denom == 0) c.diagnostic = "1 - nu eta^2 (1 - k^2) vanishes";
  if (radicand < 0) c.diagnostic = "omega tilde is not real";
  c.m2 = cfg.nu * c.eta2 * k2 / denom;
  c.omega_t = cfg.omega * std::sqrt(radicand);
  c.m_t = (k2 + c.m2) / (1 + c.m2);
  c.C = -c.omega_t + melK(c.m_t);
  const SnCnDn v = sncndn(c.C, c.m_t);
  c.alpha = 2 * std::asin(c.k * v.sn / std::sqrt(1 + c.m2 * v.cn * v.cn));
  if (c.diagnostic.empty() && !std::isfinite(c.alpha)) c.diagnostic = "alpha is not real";
  return c;
}

// sn cn dn / (1 + m^2 cn^2) and cn / (1 + m^2 cn^2) at u.
struct Terms {
  double scd;
  double c;
};

Terms terms(double u, double m_t, double m2) {
  const SnCnDn v = sncndn(u, m_t);
  const double w = 1 + m2 * v.cn * v.cn;
  return {v.sn * v.cn * v.dn / w, v.cn / w};
}

}  // namespace

CantileverResult cantilever_solve(const CantileverConfig& cfg) {
  if (const std::string why = cfg.validate(); !why.empty()) throw std::invalid_argument(why);
  const Constants c = constants(cfg);
  CantileverResult r;
  r.k = c.k;
  r.m2 = c.m2;
  r.omega_t = c.omega_t;
  r.m_t = c.m_t;
  r.C = c.C;
  r.alpha = c.alpha;
  r.diagnostic = c.diagnostic;

  const double w = cfg.omega;
  const double wt = c.omega_t;
  const double ratio = melE(c.m_t) / melK(c.m_t);
  const Terms t0 = terms(c.C, c.m_t, c.m2);
  const double eps0 = mjepsilon(c.C, c.m_t);
  const double z0 = mJzeta(c.C, c.m_t);
  const double y_scale = 2 * wt * c.k * std::sqrt(1 + c.m2) / (w * w);
  const double ca = std::cos(c.alpha);
  const double sa = std::sin(c.alpha);

  const std::vector<double> grid = cfg.s_grid.empty() ? default_s_grid() : cfg.s_grid;
  for (double s : grid) {
    const double u = wt * s + c.C;
    const Terms t = terms(u, c.m_t, c.m2);
    const double bracket = c.m2 * (t.scd - t0.scd);
    const double x_eps =
        -((1 - cfg.nu) * w * w / (2 * cfg.lambda * cfg.lambda) + wt * wt / (w * w)) * s +
        2 * wt / (w * w) * (mjepsilon(u, c.m_t) - eps0 - bracket);
    const double x_z =
        (cfg.nu - 1) * w * w * s / (cfg.lambda * cfg.lambda) / 2 +
        2 * wt / (w * w) * ((ratio - 0.5) * wt * s + mJzeta(u, c.m_t) - z0 - bracket);
    const double y = -y_scale * (t.c - t0.c);
    const SnCnDn v = sncndn(u, c.m_t);
    const double phi = 2 * std::asin(c.k * v.sn / std::sqrt(1 + c.m2 * v.cn * v.cn)) - c.alpha;
    r.x_epsilon.push_back(x_eps);
    r.x_zeta.push_back(x_z);
    r.samples.push_back({s, x_z * ca + y * sa, -x_z * sa + y * ca, phi});
  }

  if (cfg.nu == 1) {
    const double n = c.m2 / (1 + c.m2);
    const double a = 2 * c.k * c.k / c.m2;
    r.L = 1 - (1 + a) * c.eta2 +
          a / wt * c.eta2 * (mjlambda(wt + c.C, n, c.m_t) - mjlambda(c.C, n, c.m_t));
  } else {
    r.L = kNaN;
  }
  return r;
}

double cantilever_arclength(const CantileverConfig& cfg, int n) {
  CantileverConfig fine = cfg;
  fine.s_grid.resize(n + 1);
  for (int i = 0; i <= n; ++i) fine.s_grid[i] = static_cast<double>(i) / n;
  const CantileverResult r = cantilever_solve(fine);
  double length = 0;
  for (std::size_t i = 1; i < r.samples.size(); ++i)
    length += std::hypot(r.samples[i].x - r.samples[i - 1].x, r.samples[i].y - r.samples[i - 1].y);
  return length;
}

}  // namespace elfun
