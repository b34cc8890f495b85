#include <doctest.h>

#include "elfun/integrals.hpp"
#include "elfun/jacobi.hpp"
#include "elfun/numeric.hpp"
#include "support.hpp"

using namespace elfun;

TEST_CASE("classify") {
  CHECK(classify(1.0) == ValueClass::finite);
  CHECK(classify(kInf) == ValueClass::pos_inf);
  CHECK(classify(-kInf) == ValueClass::neg_inf);
  CHECK(classify(kNaN) == ValueClass::nan);
}

TEST_CASE("default tolerances") {
  const Tolerances& t = default_tolerances();
  CHECK(t.valid());
  CHECK(t.iter_tol == doctest::Approx(std::sqrt(kEps)));
  CHECK(t.series_tol == kEps);
  CHECK(t.max_iter == 40);
  CHECK_FALSE((Tolerances{0, 1e-16, 40}).valid());
  CHECK_FALSE((Tolerances{1e-8, 1e-16, 4}).valid());
}

TEST_CASE("apply_symmetry") {
  auto kernel = [](double t) { return t * t + 1; };
  CHECK(apply_symmetry(Parity::even, -2.0, kernel) == 5);
  CHECK(apply_symmetry(Parity::odd, -2.0, kernel) == -5);
  CHECK(std::isnan(apply_symmetry(Parity::odd, kNaN, kernel)));
  // -0 reaches the kernel as +0.
  const double z = apply_symmetry(Parity::odd, -0.0, [](double t) { return t; });
  CHECK_FALSE(std::signbit(z));
}

TEST_CASE("k_wrapper") {
  auto K = [](double m) { return melK(m); };
  CHECK(k_wrapper(K, 0.0) == doctest::Approx(kHalfPi));
  CHECK(testing::same_bits(k_wrapper(K, -0.5), k_wrapper(K, 0.5)));
  auto sn = [](double x, double m) { return mjsn(x, m); };
  CHECK(k_wrapper(sn, 0.999, 0.23) == doctest::Approx(0.226032).epsilon(1e-6));
}

TEST_CASE("amplitude reduction") {
  const auto d = reduce_amplitude(10.0);
  CHECK(d.n == 3);
  CHECK(d.phi_r == doctest::Approx(10 - 3 * kPi).epsilon(1e-15));
  CHECK(std::abs(d.phi_r) <= kHalfPi);
  // Cody-Waite keeps the remainder accurate far from zero.
  const auto big = reduce_amplitude(1e6 * kPi + 0.25);
  CHECK(big.n == 1e6);
  CHECK(big.phi_r == doctest::Approx(0.25).epsilon(1e-9));
  const auto split = reduce_by(7.0, 2.0, 0.0);
  CHECK(split.n == 4);
  CHECK(split.phi_r == -1.0);
}
