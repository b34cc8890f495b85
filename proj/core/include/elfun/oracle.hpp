#pragma once

// Reference values by adaptive Gauss-Kronrod quadrature of the defining
// integrals, in long double.  The oracle shares no code with the Carlson,
// Bulirsch or Landen kernels; it exists to check them.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elfun/numeric.hpp"

namespace elfun::oracle {

enum class Integrand {
  carlson_rc,    // args x, y
  carlson_rf,    // x, y, z
  carlson_rd,    // x, y, z
  carlson_rj,    // x, y, z, p
  carlson_rg,    // x, y, z
  legendre_B,    // m            (theta integrands)
  legendre_D,    // m
  legendre_E,    // m
  legendre_F,    // m
  legendre_Pi,   // nu, m
  complete_C,    // m
  lemniscate,    // none         1 / sqrt(1 - t^4)
  bulirsch,      // kc, p, a, b  (a + b t^2) / ((1 + p t^2) sqrt((1+t^2)(1+kc^2 t^2)))
};

struct OracleSpec {
  Integrand integrand;
  long double lower = 0;
  long double upper = 0;  // may be +Inf
  bool singular_lower = false;
  bool singular_upper = false;
  double target_tol = 1e-12;  // relative; clamped to >= 1e-14
};

struct QuadResult {
  long double value = 0;
  long double error = 0;  // estimated absolute error
  bool converged = false;
  std::string diagnostic;
};

/// Integrates spec.integrand over [lower, upper].  Square-root endpoint
/// singularities flagged in the spec are removed with t = a + (b - a) sin^2 w;
/// an infinite upper limit is mapped with t = s tan^2 w.
QuadResult integrate(const OracleSpec& spec, std::span<const double> args);

/// As integrate(), NaN unless the tolerance was met.
ExtReal quad(const OracleSpec& spec, std::span<const double> args);

// ---- reference functions (long double) ------------------------------------

long double rf(long double x, long double y, long double z);
long double rd(long double x, long double y, long double z);
long double rj(long double x, long double y, long double z, long double p);
long double rg(long double x, long double y, long double z);
long double rc(long double x, long double y);

enum class Kind { B, D, E, F, Pi };

/// Legendre-form integral with the amplitude split into whole periods.
long double legendre(Kind kind, long double phi, long double nu, long double m);
long double complete(Kind kind, long double nu, long double m);
long double complete_C(long double m);

/// Amplitude am(u|m) for m < 1 by inverting the oracle F.
long double amplitude(long double u, long double m);
long double jacobi_epsilon(long double u, long double m);
long double jacobi_zeta(long double u, long double m);
long double jacobi_lambda(long double u, long double nu, long double m);

/// Reference value of a registered function by name, if the oracle covers it.
std::optional<long double> reference(std::string_view name, std::span<const double> args);
/// Names reference() understands.
std::vector<std::string> covered_functions();

// ---- error reports -----------------------------------------------------------

struct Range {
  double lo;
  double hi;
};

struct ReportRow {
  std::string function;
  std::vector<Range> ranges;
  int samples = 0;  // samples where both values were finite
  double mae_eps = 0;
  double mre_eps = 0;
  double rms_eps = 0;
};

/// Compares a registered function against reference() on n_samples points
/// drawn uniformly from `ranges` with a generator seeded by `seed`.
/// Statistics are max absolute error, max relative error and RMS relative
/// error, each divided by machine epsilon.
ReportRow error_report(std::string_view function, const std::vector<Range>& ranges,
                       int n_samples, std::uint64_t seed);

std::string report_csv(const std::vector<ReportRow>& rows);

}  // namespace elfun::oracle
