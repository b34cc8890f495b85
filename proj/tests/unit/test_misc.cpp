#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "elfun/misc.hpp"
#include "elfun/numeric.hpp"
#include "support.hpp"

using namespace elfun;
using doctest::Approx;

TEST_CASE("lemniscate functions") {
  CHECK(gsl(0) == 0);
  CHECK(gcl(0) == 1);
  const double s = gsl(0.8), c = gcl(0.8);
  CHECK(std::abs(s * s + c * c + s * s * c * c - 1) <= 1e-12);
  CHECK(gsl(kLemniscate / 2) == Approx(1).epsilon(1e-15));
  CHECK(gsl(0.5 + 2 * kLemniscate) == Approx(gsl(0.5)).epsilon(1e-13));
}

TEST_CASE("inverse lemniscate functions") {
  CHECK(igsl(0) == 0);
  CHECK(igcl(1) == 0);
  CHECK(igsl(1) == Approx(kLemniscate / 2).epsilon(1e-15));
  CHECK(std::isnan(igsl(1.01)));
  CHECK(std::isnan(igcl(-1.01)));
  for (double x = -1; x <= 1; x += 0.0625)
    CHECK(igcl(x) == Approx(kLemniscate / 2 - igsl(x)).epsilon(1e-14));
  for (double u = -1.3; u <= 1.3; u += 0.05) CHECK(std::abs(igsl(gsl(u)) - u) <= 1e-10);
}

TEST_CASE("Gudermannian") {
  CHECK(gd(0) == 0);
  CHECK(gd(kInf) == kHalfPi);
  CHECK(gd(-kInf) == -kHalfPi);
  CHECK(gd(1) == Approx(std::atan(std::sinh(1.0))).epsilon(1e-16));
  CHECK(gd(800) == kHalfPi);
  CHECK(igd(0) == 0);
  CHECK(igd(kHalfPi) == kInf);
  CHECK(igd(-kHalfPi) == -kInf);
  CHECK(std::isnan(igd(2)));
  // gd(x) = 2 atan(tanh(x/2)), the integral-limit form.
  for (double x = -20; x <= 20; x += 0.37)
    CHECK(testing::ulps(gd(x), 2 * std::atan(std::tanh(x / 2))) <= 2);
}

TEST_CASE("Gudermannian round trip") {
  // Near |x| = 20 gd(x) is within 4e-9 of pi/2, so one ulp of gd moves igd by
  // eps / (pi/2 - gd(x)); the tolerance follows that conditioning.
  for (double x = -20; x <= 20; x += 0.173) {
    const double g = gd(x);
    const double cond = 1 / std::cos(g);
    CHECK(std::abs(igd(g) - x) <= 2 * kEps * std::max(std::abs(x), cond));
  }
}

TEST_CASE("lemniscate and Gudermannian parity") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(gen);
    CHECK(gd(-x) == -gd(x));
    CHECK(gsl(-x) == -gsl(x));
    CHECK(gcl(-x) == gcl(x));
  }
}
