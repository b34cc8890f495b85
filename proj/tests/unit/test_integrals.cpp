#include <doctest.h>
#include <stdexcept>

#include <algorithm>
#include <random>

#include "elfun/integrals.hpp"
#include "elfun/jacobi.hpp"
#include "elfun/oracle.hpp"
#include "support.hpp"

using namespace elfun;
using doctest::Approx;
using testing::rel_err;
using testing::ulps;

TEST_CASE("complete integrals: special values") {
  CHECK(melK(0) == Approx(kHalfPi).epsilon(1e-16));
  CHECK(melK(1) == kInf);
  CHECK(melK(-kInf) == 0);
  CHECK(ulps(melE(1), 1) <= 2);
  CHECK(melE(-kInf) == kInf);
  CHECK(melC(0) == Approx(kPi / 16).epsilon(1e-15));
  CHECK(melB(1) == 1);
  CHECK(melD(1) == kInf);
  CHECK(melPi(0, 0.3) == melK(0.3));
  CHECK(melPi(1, 0.3) == kInf);
  CHECK(std::isnan(melPi(1.5, 0.3)));
  for (double m : {1.5, 10.0, kInf}) {
    CHECK(std::isnan(melK(m)));
    CHECK(std::isnan(melE(m)));
    CHECK(std::isnan(melC(m)));
  }
  CHECK(std::isnan(melK(kNaN)));
}

TEST_CASE("complementary complete integrals") {
  CHECK(melCE(1) == Approx(kHalfPi).epsilon(1e-16));
  CHECK(melCK(0) == kInf);
  CHECK(melCPi(0.5, 0.25) == melPi(0.5, 0.75));
  CHECK(std::isnan(melCK(-0.1)));
  // Where 1 - m is exact the reflection is exact too.
  for (double m : {0.5, 0.75, 2.0, 50.0}) {
    CHECK(testing::same_bits(melCK(m), melK(1 - m)));
    CHECK(testing::same_bits(melCE(m), melE(1 - m)));
  }
  // Small m keeps its digits: K'(m) = ln(4/k) + (m/4)(ln(4/k) - 1) + O(m^2 ln m).
  for (double m : {1e-10, 1e-14, 1e-20}) {
    const double l = std::log(4 / std::sqrt(m));
    CHECK(melCK(m) == Approx(l + m / 4 * (l - 1)).epsilon(1e-15));
    CHECK(melCE(m) == Approx(1 + m / 2 * (l - 0.5)).epsilon(1e-15));
  }
}

TEST_CASE("complete integrals: B + D = K and the Legendre relation") {
  for (double m = -20; m < 1; m += 0.173) {
    CHECK(ulps(melB(m) + melD(m), melK(m)) <= 4);
    CHECK(rel_err(melC(m), (melD(m) - melB(m)) / m) <= 1e-12);
  }
  for (double m = 0.01; m < 1; m += 0.049) {
    const double lhs = melE(m) * melK(1 - m) + melE(1 - m) * melK(m) - melK(m) * melK(1 - m);
    CHECK(lhs == Approx(kHalfPi).epsilon(1e-13));
  }
}

TEST_CASE("Legendre form") {
  CHECK(mpelF(0.7, 0) == Approx(0.7).epsilon(1e-16));
  CHECK(mpelF(kHalfPi, 0.5) == Approx(melK(0.5)).epsilon(1e-15));
  CHECK(mpelF(0.3 + kPi, 0.4) - mpelF(0.3, 0.4) == Approx(2 * melK(0.4)).epsilon(1e-12));
  CHECK(mpelE(12.9, 0.4) == Approx(double(oracle::legendre(oracle::Kind::E, 12.9, 0, 0.4))).epsilon(1e-13));
  CHECK(mpelF(-0.6, 0.2) == -mpelF(0.6, 0.2));
  // m > 1: real only while m sin^2(phi) <= 1.
  CHECK(std::isfinite(mpelF(0.3, 5)));
  CHECK(std::isnan(mpelF(1.0, 5)));
  CHECK(std::isnan(mpelF(4.0, 5)));
  CHECK_THROWS_AS(incomplete_legendre(IntegralKind::C, 0.5, 0, 0.5), std::invalid_argument);
}

TEST_CASE("Jacobi form") {
  CHECK(melF(0.5, 0) == Approx(kPi / 6).epsilon(1e-15));
  CHECK(std::isnan(melF(2, 0.5)));
  CHECK(std::isnan(melF(0.6, 4)));
  CHECK(melB(1, 0.3) + melD(1, 0.3) == Approx(melK(0.3)).epsilon(1e-15));
  CHECK(melF(-0.4, 0.3) == -melF(0.4, 0.3));
}

namespace {
double ulp(double v) { return std::nextafter(std::abs(v), kInf) - std::abs(v); }
}  // namespace

TEST_CASE("cross-form consistency and B + D = F") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> uphi(-kHalfPi, kHalfPi), um(-5, 0.99), unu(-3, 0.9);
  double worst_cross = 0, worst_bd = 0;
  for (int i = 0; i < 2000; ++i) {
    const double phi = uphi(gen), m = um(gen), nu = unu(gen);
    const double x = std::sin(phi);
    const double a = std::asin(x);
    const double s2 = x * x, c2 = 1 - s2, dn = std::sqrt(1 - m * s2);
    // Integrand at the amplitude; asin() may miss the exact amplitude of x by
    // half an ulp, which moves the Legendre form by slope * ulp(a) / 2.
    const auto slope = [&](IntegralKind kind) {
      switch (kind) {
        case IntegralKind::B: return c2 / dn;
        case IntegralKind::D: return s2 / dn;
        case IntegralKind::E: return dn;
        case IntegralKind::F: return 1 / dn;
        default: return 1 / (std::abs(1 - nu * s2) * dn);
      }
    };
    for (auto kind : {IntegralKind::B, IntegralKind::D, IntegralKind::E, IntegralKind::F,
                      IntegralKind::Pi}) {
      const double lj = incomplete_jacobi(kind, x, nu, m);
      const double ll = incomplete_legendre(kind, a, nu, m);
      const double input = slope(kind) * 0.5 * ulp(a) / ulp(ll);
      worst_cross = std::max(worst_cross, ulps(lj, ll) - input);
    }
    worst_bd = std::max(worst_bd, ulps(mpelB(phi, m) + mpelD(phi, m), mpelF(phi, m)));
  }
  CHECK(worst_cross <= 4);
  CHECK(worst_bd <= 4);
}

TEST_CASE("quasi-periodicity of F, E and Pi") {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> uphi(-kHalfPi, kHalfPi), um(-5, 0.99), unu(-5, 0.9);
  std::uniform_int_distribution<int> un(-50, 50);
  constexpr long double kPiL = 3.141592653589793238462643383279502884L;
  for (int i = 0; i < 200; ++i) {
    const double m = um(gen), nu = unu(gen);
    const int n = un(gen);
    const double phi = uphi(gen) + n * kPi;
    const double r = static_cast<double>(phi - n * kPiL);
    const double tol = std::abs(2.0 * n) * 1e-14 * 1.0000001;
    CHECK(std::abs(mpelF(phi, m) - mpelF(r, m) - 2 * n * melK(m)) <= tol * melK(m));
    CHECK(std::abs(mpelE(phi, m) - mpelE(r, m) - 2 * n * melE(m)) <= tol * melE(m));
    CHECK(std::abs(mpelPi(phi, nu, m) - mpelPi(r, nu, m) - 2 * n * melPi(nu, m)) <=
          tol * melPi(nu, m));
  }
}

TEST_CASE("Jacobi epsilon and Lambda") {
  CHECK(mjepsilon(0, 0.3) == 0);
  CHECK(mjepsilon(1.3, 0) == 1.3);
  CHECK(mjepsilon(0.7, 1) == Approx(std::tanh(0.7)).epsilon(1e-15));
  CHECK(mjepsilon(melK(0.5), 0.5) == Approx(melE(0.5)).epsilon(1e-14));
  CHECK(mjepsilon(-2.1, 0.3) == -mjepsilon(2.1, 0.3));
  CHECK(mjlambda(0.8, 0, 0.5) == 0.8);
  CHECK(mjlambda(0, 0.3, 0.5) == 0);
  CHECK(mjlambda(melK(0.4), 0.2, 0.4) == Approx(melPi(0.2, 0.4)).epsilon(1e-14));
  for (double m = -5; m < 0.99; m += 0.31) {
    for (double u : {0.3, 2.0, 17.0, -250.0}) {
      const double rhs = mJzeta(u, m) + melE(m) / melK(m) * u;
      CHECK(std::abs(mjepsilon(u, m) - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("Zeta and Omega") {
  CHECK(mJzeta(0, 0.4) == 0);
  CHECK(std::isnan(mJzeta(0.5, 1.5)));
  CHECK(mpJzeta(0.8, 0.3) == Approx(mpelE(0.8, 0.3) - melE(0.3) / melK(0.3) * mpelF(0.8, 0.3)).epsilon(1e-14));
  CHECK(mJomega(0, 0.4, 0.5) == 0);
  CHECK(mJomega(0.9, 0, 0.5) == 0);
  CHECK(std::abs(mJomega(melK(0.3), 0.4, 0.3)) <= 1e-15);
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> uu(-1e3, 1e3), um(-5, 0.99), unu(-3, 0.9);
  for (int i = 0; i < 300; ++i) {
    const double u = uu(gen), m = um(gen), nu = unu(gen);
    const double two_k = 2 * melK(m);
    CHECK(std::abs(mJzeta(u + two_k, m) - mJzeta(u, m)) <= 1e-10);
    CHECK(std::abs(mJomega(u + two_k, nu, m) - mJomega(u, nu, m)) <= 1e-10);
  }
}

TEST_CASE("Heuman Lambda0") {
  CHECK(mHlambda(0, 0.5) == 0);
  CHECK(mHlambda(0.6, 0) == Approx(std::sin(0.6)).epsilon(1e-15));
  CHECK(mHlambda(kHalfPi, 0.5) == Approx(1).epsilon(1e-14));
  CHECK(std::isnan(mHlambda(0.5, -0.1)));
  CHECK(std::isnan(mHlambda(0.5, 1.1)));
}

TEST_CASE("incomplete integrals against quadrature") {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> uphi(-kHalfPi, kHalfPi), um(-100, 100), unu(-0.9, 0.9);
  double worst = 0;
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const double phi = uphi(gen), m = um(gen), nu = unu(gen);
    const double args2[] = {phi, m};
    const double args3[] = {phi, nu, m};
    for (const char* name : {"mpelB", "mpelD", "mpelE", "mpelF"}) {
      const auto ref = oracle::reference(name, args2);
      if (!std::isfinite(*ref)) continue;
      ++checked;
      worst = std::max(worst, rel_err(incomplete_legendre(name[4] == 'B'   ? IntegralKind::B
                                                          : name[4] == 'D' ? IntegralKind::D
                                                          : name[4] == 'E' ? IntegralKind::E
                                                                           : IntegralKind::F,
                                                          phi, 0, m),
                                       double(*ref)));
    }
    const auto ref = oracle::reference("mpelPi", args3);
    if (std::isfinite(*ref)) {
      ++checked;
      worst = std::max(worst, rel_err(mpelPi(phi, nu, m), double(*ref)));
    }
  }
  CHECK(checked > 500);
  CHECK(worst <= 1e-9);
}
