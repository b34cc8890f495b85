#include <doctest.h>

#include <algorithm>
#include <random>

#include "elfun/integrals.hpp"
#include "elfun/jacobi.hpp"
#include "elfun/kforms.hpp"
#include "elfun/oracle.hpp"
#include "support.hpp"

using namespace elfun;
using doctest::Approx;
using testing::ulps;

namespace {
constexpr double kM = 0.999 * 0.999;
}

TEST_CASE("sncndn basics") {
  const SnCnDn z = sncndn(0, 0.4);
  CHECK(z.sn == 0);
  CHECK(z.cn == 1);
  CHECK(z.dn == 1);
  const SnCnDn c = sncndn(1.1, 0);
  CHECK(c.sn == Approx(std::sin(1.1)).epsilon(1e-16));
  CHECK(c.cn == Approx(std::cos(1.1)).epsilon(1e-16));
  CHECK(c.dn == 1);
  const SnCnDn t = sncndn(0.23, kM);
  CHECK(t.sn == Approx(0.226032).epsilon(5e-7));
  CHECK(t.cn == Approx(0.974120).epsilon(5e-7));
  CHECK(t.dn == Approx(0.974172).epsilon(5e-7));
  CHECK(std::isnan(sncndn(kNaN, 0.5).sn));
  CHECK(std::isnan(sncndn(kInf, 0.5).sn));
}

TEST_CASE("Pythagorean identities") {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> ux(-1e4, 1e4), um(-1e3, 1);
  for (int i = 0; i < 10000; ++i) {
    const double x = ux(gen), m = um(gen);
    const SnCnDn v = sncndn(x, m);
    CHECK(std::abs(v.sn * v.sn + v.cn * v.cn - 1) <= 4 * kEps);
    // One ulp of each squared term, four times over.
    const double scale = v.dn * v.dn + std::abs(m) * v.sn * v.sn + 1;
    CHECK(std::abs(v.dn * v.dn + m * v.sn * v.sn - 1) <= 4 * kEps * scale);
    if (m < 1) CHECK(v.dn > 0);
  }
}

TEST_CASE("degenerate parameters") {
  double worst = 0;
  for (double x = -20; x <= 20; x += 0.0731) {
    const SnCnDn one = sncndn(x, 1);
    const double sech = 1 / std::cosh(x);
    worst = std::max({worst, ulps(one.sn, std::tanh(x)), ulps(one.cn, sech), ulps(one.dn, sech)});
    const SnCnDn zero = sncndn(x, 0);
    worst = std::max({worst, ulps(zero.sn, std::sin(x)), ulps(zero.cn, std::cos(x))});
  }
  CHECK(worst <= 2);
}

TEST_CASE("Glaisher quotients") {
  CHECK(glaisher(GlaisherCode::cd, 0.23, kM) == Approx(0.999946).epsilon(5e-7));
  CHECK(glaisher(GlaisherCode::ns, 0.23, kM) == Approx(4.424150).epsilon(5e-7));
  CHECK(glaisher(GlaisherCode::nc, 0, 0.3) == 1);
  CHECK(glaisher(GlaisherCode::ns, 0, 0.3) == kInf);
  CHECK(glaisher(GlaisherCode::ns, -0.0, 0.3) == kInf);
  const SnCnDn v = sncndn(0.7, 0.45);
  CHECK(mjsc(0.7, 0.45) == Approx(v.sn / v.cn).epsilon(1e-15));
  CHECK(mjds(0.7, 0.45) == Approx(v.dn / v.sn).epsilon(1e-15));
  CHECK(mjcs(0.7, 0.45) == Approx(v.cn / v.sn).epsilon(1e-15));
  for (GlaisherCode code : kAllGlaisherCodes) {
    const double a = glaisher(code, 0.8, 0.6), b = glaisher(code, -0.8, 0.6);
    CHECK(b == (parity(code) == Parity::odd ? -a : a));
  }
  CHECK(parse_glaisher("sd") == GlaisherCode::sd);
  CHECK_FALSE(parse_glaisher("xy").has_value());
}

TEST_CASE("quasi-periodicity at x + 1e5 K") {
  const double shift = 1e5 * elK(0.999);
  for (GlaisherCode code : kAllGlaisherCodes)
    CHECK(std::abs(glaisher(code, 0.23, kM) - glaisher(code, 0.23 + shift, kM)) <= 1e-6);
  CHECK(std::abs(Jzeta(0.23, 0.999) - Jzeta(0.23 + shift, 0.999)) <= 1e-6);
}

TEST_CASE("periods of sn, cn, dn") {
  for (double m : {-3.0, 0.2, 0.9}) {
    const double k = melK(m);
    for (double x : {0.1, 1.7, -2.4}) {
      CHECK(mjsn(x + 4 * k, m) == Approx(mjsn(x, m)).epsilon(1e-13).scale(1));
      CHECK(mjcn(x + 4 * k, m) == Approx(mjcn(x, m)).epsilon(1e-13).scale(1));
      CHECK(mjdn(x + 2 * k, m) == Approx(mjdn(x, m)).epsilon(1e-13).scale(1));
    }
  }
}

TEST_CASE("amplitude") {
  CHECK(mjam(0, 0.4) == 0);
  CHECK(mjam(2.7, 0) == Approx(2.7).epsilon(1e-16));
  CHECK(mjam(melK(0.6), 0.6) == Approx(kHalfPi).epsilon(1e-15));
  CHECK(mjam(-1.3, 0.6) == -mjam(1.3, 0.6));
  CHECK(mjam(mpelF(1.2, 0.7), 0.7) == Approx(1.2).epsilon(1e-14));
  std::mt19937_64 gen(22);
  std::uniform_real_distribution<double> ux(-3, 3), um(-5, 0.99);
  std::uniform_int_distribution<int> un(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    const double x = ux(gen), m = um(gen);
    const int n = un(gen);
    const double d = mjam(x + 2 * n * melK(m), m) - mjam(x, m) - n * kPi;
    // The shifted argument itself carries one rounding of size |2nK| eps.
    CHECK(std::abs(d) <= std::max(std::abs(n * kPi) * 1e-14, 4 * std::abs(2 * n * melK(m)) * kEps));
  }
}

TEST_CASE("transformed parameters against quadrature inversion") {
  double worst = 0;
  for (double m : {-50.0, -3.0, -0.4}) {
    for (double x : {0.2, 1.1, 4.0, -7.5}) {
      const double args[] = {x, m};
      worst = std::max(worst, std::abs(mjsn(x, m) - double(*oracle::reference("mjsn", args))));
      worst = std::max(worst, std::abs(mjcn(x, m) - double(*oracle::reference("mjcn", args))));
      worst = std::max(worst, std::abs(mjdn(x, m) - double(*oracle::reference("mjdn", args))) /
                                  std::sqrt(1 - m));
    }
  }
  // m > 1 through the reciprocal transformation inside the real strip.
  for (double m : {1.5, 4.0, 30.0}) {
    for (double x : {0.1, 0.4}) {
      const double u = x / std::sqrt(m);
      const double phi = std::asin(mjsn(u, m));
      worst = std::max(worst, std::abs(mpelF(phi, m) - u));
    }
  }
  CHECK(worst <= 1e-9);
}
