#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "elfun/demos.hpp"
#include "elfun/jacobi.hpp"
#include "elfun/oracle.hpp"

using namespace elfun;

TEST_CASE("elastica curves") {
  ElasticaConfig cfg;
  const auto curves = elastica_curve(cfg);
  REQUIRE(curves.size() == cfg.k_list.size());
  for (const ElasticaCurve& c : curves) {
    REQUIRE(c.samples.size() == 101);
    CHECK(c.samples.front().x == 0);
    CHECK(c.samples.front().y == 0);
  }
  // Endpoint of k = 0.5 against the quadrature epsilon.
  const ElasticaCurve& c = curves[4];
  const double w = 5, C = 1, m = 0.25;
  const long double ref_x =
      (2 / 1.0L / w) * (oracle::jacobi_epsilon(w + C, m) - oracle::jacobi_epsilon(C, m)) - 1;
  CHECK(std::fabs(c.samples.back().x - ref_x) <= 1e-10L);
  const double ref_y = 2 * 0.5 / w * (mjcn(C, m) - mjcn(w + C, m));
  CHECK(std::abs(c.samples.back().y - ref_y) <= 1e-12);
}

TEST_CASE("elastica flat limit") {
  ElasticaConfig cfg;
  cfg.k_list = {1e-12};
  const auto curves = elastica_curve(cfg);
  for (const CurveSample& p : curves[0].samples) {
    CHECK(std::abs(p.x - p.s) <= 1e-14);
    CHECK(std::abs(p.y) <= 1e-12);
  }
}

TEST_CASE("elastica validation") {
  ElasticaConfig cfg;
  cfg.omega = 0;
  CHECK_FALSE(cfg.validate().empty());
  CHECK_THROWS_AS(elastica_curve(cfg), std::invalid_argument);
  cfg.omega = 5;
  cfg.k_list = {1.5};
  CHECK_FALSE(cfg.validate().empty());
}

TEST_CASE("cantilever") {
  CantileverConfig cfg;
  const CantileverResult r = cantilever_solve(cfg);
  REQUIRE(std::isfinite(r.L));
  CHECK(r.samples.front().x == 0);
  CHECK(r.samples.front().y == 0);
  REQUIRE(r.x_epsilon.size() == r.x_zeta.size());
  for (std::size_t i = 0; i < r.x_epsilon.size(); ++i)
    CHECK(std::abs(r.x_epsilon[i] - r.x_zeta[i]) <= 1e-12);
  CHECK(std::abs(cantilever_arclength(cfg, 10000) - r.L) <= 1e-4);
  cfg.nu = 0.8;
  CHECK(std::isnan(cantilever_solve(cfg).L));
}

TEST_CASE("CSV round trip is bitwise") {
  const auto curves = elastica_curve(ElasticaConfig{});
  for (const CurveSample& p : curves[2].samples) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p.x);
    CHECK(std::strtod(buf, nullptr) == p.x);
  }
}
