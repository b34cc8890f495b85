#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "elfun/carlson.hpp"
#include "elfun/integrals.hpp"
#include "elfun/oracle.hpp"
#include "support.hpp"

using namespace elfun;
using testing::ulps;

TEST_CASE("carlson elementary values") {
  CHECK(rc(1, 1) == 1);
  CHECK(rc(4, 4) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rc(0, 1) == doctest::Approx(kHalfPi).epsilon(1e-15));
  CHECK(rf(1, 1, 1) == 1);
  CHECK(rf(0, 1, 1) == doctest::Approx(kHalfPi).epsilon(1e-15));
  CHECK(rd(1, 1, 1) == 1);
  CHECK(rj(1, 1, 1, 1) == 1);
  CHECK(rg(1, 1, 1) == 1);
  CHECK(rg(0, 0, 4) == doctest::Approx(1).epsilon(1e-15));
  CHECK(rg(0, 0, 0) == 0);
}

TEST_CASE("carlson definitional identities") {
  CHECK(ulps(rc(2, 3), rf(2, 3, 3)) <= 2);
  CHECK(ulps(rj(1, 2, 3, 3), rd(1, 2, 3)) <= 2);
  CHECK(ulps(rj(0.3, 5, 0.01, 0.01), rd(0.3, 5, 0.01)) <= 2);
}

TEST_CASE("carlson domain") {
  CHECK(std::isnan(rf(-1, 1, 1)));
  CHECK(std::isnan(rf(0, 0, 1)));
  CHECK(std::isnan(rd(1, 1, 0)));
  CHECK(std::isnan(rd(0, 0, 1)));
  CHECK(std::isnan(rj(1, 1, 1, -1)));
  CHECK(std::isnan(rc(1, -1)));
  CHECK(std::isnan(rg(-1, 1, 1)));
  CHECK(std::isnan(rf(kNaN, 1, 1)));
}

TEST_CASE("carlson homogeneity") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.01, 10);
  double worst_f = 0, worst_d = 0, worst_j = 0, worst_g = 0;
  for (int i = 0; i < 500; ++i) {
    const double x = u(gen), y = u(gen), z = u(gen), p = u(gen);
    for (double l : {0.25, 4.0}) {
      const double s = 1 / std::sqrt(l);
      worst_f = std::max(worst_f, ulps(rf(l * x, l * y, l * z), s * rf(x, y, z)));
      worst_d = std::max(worst_d, ulps(rd(l * x, l * y, l * z), s * s * s * rd(x, y, z)));
      worst_j = std::max(worst_j, ulps(rj(l * x, l * y, l * z, l * p), s * s * s * rj(x, y, z, p)));
      worst_g = std::max(worst_g, ulps(rg(l * x, l * y, l * z), std::sqrt(l) * rg(x, y, z)));
    }
  }
  CHECK(worst_f <= 8);
  CHECK(worst_d <= 8);
  CHECK(worst_j <= 8);
  CHECK(worst_g <= 8);
}

TEST_CASE("carlson permutation symmetry") {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(0.001, 100);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    std::array<double, 3> a{u(gen), u(gen), u(gen)};
    const double p = u(gen);
    std::sort(a.begin(), a.end());
    const double f0 = rf(a[0], a[1], a[2]);
    const double g0 = rg(a[0], a[1], a[2]);
    const double j0 = rj(a[0], a[1], a[2], p);
    while (std::next_permutation(a.begin(), a.end())) {
      worst = std::max({worst, ulps(rf(a[0], a[1], a[2]), f0), ulps(rg(a[0], a[1], a[2]), g0),
                        ulps(rj(a[0], a[1], a[2], p), j0)});
    }
  }
  CHECK(worst <= 4);
}

TEST_CASE("carlson against quadrature on a log grid") {
  const double grid[] = {1e-6, 1e-3, 1, 1e3, 1e6};
  double worst = 0;
  for (double x : grid)
    for (double y : grid)
      for (double z : grid) {
        worst = std::max(worst, testing::rel_err(rf(x, y, z), double(oracle::rf(x, y, z))));
        worst = std::max(worst, testing::rel_err(rd(x, y, z), double(oracle::rd(x, y, z))));
        worst = std::max(worst, testing::rel_err(rg(x, y, z), double(oracle::rg(x, y, z))));
        for (double p : {1e-6, 1.0, 1e6})
          worst = std::max(worst, testing::rel_err(rj(x, y, z, p), double(oracle::rj(x, y, z, p))));
      }
  CHECK(worst <= 1e-10);
}

TEST_CASE("carlson backs the complete integral K") {
  double worst = 0;
  for (double m = -100; m <= 0.999; m += 0.37)
    worst = std::max(worst, testing::rel_err(melK(m), rf(0, 1 - m, 1)));
  CHECK(worst <= 1e-12);
}
