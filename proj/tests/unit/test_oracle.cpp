#include <doctest.h>

#include <cmath>

#include "elfun/integrals.hpp"
#include "elfun/oracle.hpp"

using namespace elfun;
using namespace elfun::oracle;
using doctest::Approx;

TEST_CASE("quadrature of simple integrals") {
  const double m0[] = {0.0};
  OracleSpec f{Integrand::legendre_F, 0, kHalfPi};
  CHECK(quad(f, m0) == Approx(kHalfPi).epsilon(1e-14));
  const double ones[] = {1.0, 1.0, 1.0};
  OracleSpec r{Integrand::carlson_rf, 0, INFINITY};
  CHECK(std::abs(quad(r, ones) - 1) <= 1e-12);
  const double m5[] = {0.5};
  OracleSpec e{Integrand::legendre_E, 0, 1};
  CHECK(std::abs(quad(e, m5) - mpelE(1, 0.5)) <= 1e-10);
  const QuadResult res = integrate(e, m5);
  CHECK(res.converged);
  CHECK(res.error <= 1e-12L * std::fabs(res.value));
}

TEST_CASE("endpoint singularities") {
  const double none[] = {0.0};
  OracleSpec lem{Integrand::lemniscate, 0, 1, false, true};
  CHECK(std::abs(quad(lem, none) - 1.3110287771460599) <= 1e-13);
  const double m1[] = {1.0};
  OracleSpec k{Integrand::legendre_F, 0, 1.5};
  CHECK(std::abs(quad(k, m1) - std::atanh(std::sin(1.5))) <= 1e-12);
}

TEST_CASE("tolerance clamp") {
  const double m5[] = {0.5};
  OracleSpec a{Integrand::legendre_E, 0, 1, false, false, 1e-30};
  OracleSpec b{Integrand::legendre_E, 0, 1, false, false, 1e-14};
  const QuadResult ra = integrate(a, m5), rb = integrate(b, m5);
  CHECK(ra.converged);
  CHECK(ra.value == rb.value);
}

TEST_CASE("reference functions") {
  CHECK(std::fabs(complete(Kind::F, 0, 0.5) - 1.8540746773013719L) < 1e-15L);
  CHECK(std::fabs(rc(0, 1) - 1.5707963267948966L) < 1e-15L);
  CHECK(std::fabs(jacobi_epsilon(0, 0.4)) == 0);
  const double args[] = {0.3, 0.5};
  CHECK(reference("mpelF", args).has_value());
  CHECK_FALSE(reference("nosuch", args).has_value());
  CHECK_FALSE(covered_functions().empty());
}

TEST_CASE("error reports are deterministic") {
  const std::vector<Range> ranges{{0, 1.5}, {0, 0.9}};
  const ReportRow a = error_report("mpelE", ranges, 200, 7);
  const ReportRow b = error_report("mpelE", ranges, 200, 7);
  CHECK(a.samples == 200);
  CHECK(a.mae_eps == b.mae_eps);
  CHECK(a.mre_eps == b.mre_eps);
  CHECK(a.rms_eps == b.rms_eps);
  CHECK(a.mre_eps < 16);
  const std::string csv = report_csv({a});
  CHECK(csv.find("mpelE") != std::string::npos);
}
