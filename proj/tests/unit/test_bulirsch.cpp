#include <doctest.h>

#include <random>

#include "elfun/bulirsch.hpp"
#include "elfun/integrals.hpp"
#include "support.hpp"

using namespace elfun;
using doctest::Approx;

TEST_CASE("el1") {
  CHECK(el1(1, 1) == Approx(kPi / 4).epsilon(1e-15));
  CHECK(el1(0, 0.3) == 0);
  CHECK(el1(kInf, 0.6) == Approx(cel(0.6, 1, 1, 1)).epsilon(1e-15));
  CHECK(el1(-0.8, 0.4) == -el1(0.8, 0.4));
  CHECK(el1(2.5, 0) == Approx(std::asinh(2.5)).epsilon(1e-15));
}

TEST_CASE("el2") {
  CHECK(el2(0.7, 0.8, 1, 1) == Approx(el1(0.7, 0.8)).epsilon(1e-14));
  CHECK(el2(0, 0.8, 2, 3) == 0);
  CHECK(el2(1, 1, 1, 0) == Approx(0.25 + kPi / 8).epsilon(1e-14));
  // Linear in (a, b).
  const double i1 = el2(1.3, 0.4, 1, 0), i2 = el2(1.3, 0.4, 0, 1);
  CHECK(el2(1.3, 0.4, 2, -3) == Approx(2 * i1 - 3 * i2).epsilon(1e-14));
}

TEST_CASE("el3") {
  CHECK(el3(0.6, 0.9, 1) == Approx(el1(0.6, 0.9)).epsilon(1e-14));
  CHECK(el3(0, 0.5, 3) == 0);
  CHECK(el3(1, 1, 2) == Approx(std::atan(std::sqrt(2.0)) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(el3(-0.6, 0.9, 0.2) == -el3(0.6, 0.9, 0.2));
  CHECK(std::isnan(el3(2, 0.5, -0.25)));
  CHECK(std::isnan(el3(3, 0.5, -0.5)));
}

TEST_CASE("cel") {
  CHECK(cel(1, 1, 1, 1) == Approx(kHalfPi).epsilon(1e-15));
  CHECK(cel(0.5, 1, 1, 0.25) == Approx(melE(0.75)).epsilon(1e-14));
  CHECK(cel1(0.6) == cel(0.6, 1, 1, 1));
  CHECK(cel2(0.6, 2, 3) == cel(0.6, 1, 2, 3));
  CHECK(cel3(0.6, 4) == cel(0.6, 4, 1, 1));
  CHECK(cel(0, 1, 1, 1) == kInf);
  for (double m : {-10.0, -1.0, 0.0, 0.5, 0.99})
    CHECK(testing::rel_err(cel1(std::sqrt(1 - m)), melK(m)) <= 1e-12);
  // cel(kc, p, 1, 1) = Pi(1 - p | 1 - kc^2); negative p gives the principal value.
  CHECK(cel3(std::sqrt(0.7), 0.4) == Approx(melPi(0.6, 0.3)).epsilon(1e-14));
  CHECK(cel3(std::sqrt(0.7), -0.5) == Approx(-0.21183889209293818269).epsilon(1e-14));
}

TEST_CASE("bulirsch depends on kc only through kc^2") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 500; ++i) {
    const double x = u(gen), kc = u(gen), a = u(gen), b = u(gen), p = std::abs(u(gen)) + 0.1;
    CHECK(testing::same_bits(el1(x, kc), el1(x, -kc)));
    CHECK(testing::same_bits(el2(x, kc, a, b), el2(x, -kc, a, b)));
    CHECK(testing::same_bits(el3(x, kc, p), el3(x, -kc, p)));
    CHECK(testing::same_bits(cel(kc, p, a, b), cel(-kc, p, a, b)));
  }
}

TEST_CASE("bulirsch with huge modulus stays finite") {
  const double v = el1(0.04, 1e300);
  CHECK(std::isfinite(v));
  CHECK(v == Approx(std::asinh(0.04e300) / 1e300).epsilon(1e-12));
}
