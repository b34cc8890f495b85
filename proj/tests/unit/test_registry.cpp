#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "elfun/registry.hpp"
#include "support.hpp"

using namespace elfun;

TEST_CASE("lookup") {
  CHECK(lookup("melK").name == "melK");
  CHECK(lookup("mEllipticK").name == "melK");
  CHECK(lookup("MELK").name == "melK");
  CHECK(lookup("melE").arity == 1);
  CHECK(lookup("melE", 2).arity == 2);
  CHECK_THROWS_AS(lookup("nosuch"), NotFoundError);
  try {
    lookup("melk2");
  } catch (const NotFoundError& e) {
    REQUIRE_FALSE(e.near_matches.empty());
    CHECK(e.near_matches.front() == "melK");
  }
  for (const FunctionDescriptor& d : registry()) {
    CHECK(static_cast<int>(d.arg_roles.size()) == d.arity);
    CHECK(&lookup(d.name, d.arity) == &d);
  }
}

TEST_CASE("broadcast examples") {
  const Tensor zero[] = {Tensor::scalar(0)};
  const Tensor k = broadcast_apply(lookup("melK"), zero);
  CHECK(k.is_scalar());
  CHECK(k.data[0] == kHalfPi);

  const Tensor sn_args[] = {Tensor{{2, 2}, {0.23, 0.23, 0.23, 0.23}}, Tensor::scalar(0.998001)};
  const Tensor sn = broadcast_apply(lookup("mjsn"), sn_args);
  CHECK(sn.shape == std::vector<std::size_t>{2, 2});
  for (double v : sn.data) CHECK(v == doctest::Approx(0.226032).epsilon(5e-7));

  const Tensor bad[] = {Tensor::vector({0.1, 0.2, 0.3}), Tensor::vector({0.1, 0.2, 0.3, 0.4})};
  CHECK_THROWS_AS(broadcast_apply(lookup("melF"), bad), ShapeError);
  CHECK_THROWS_AS(broadcast_apply(lookup("melF"), zero), ArityError);

  const Tensor domain[] = {Tensor::vector({0.5, 2.0})};
  const Tensor r = broadcast_apply(lookup("melK"), domain);
  CHECK(std::isfinite(r.data[0]));
  CHECK(std::isnan(r.data[1]));
}

TEST_CASE("broadcast equals scalar calls bitwise") {
  std::mt19937_64 gen(51);
  std::uniform_real_distribution<double> u(-2, 0.95);
  for (const FunctionDescriptor& d : registry()) {
    std::vector<Tensor> args;
    for (int a = 0; a < d.arity; ++a) {
      std::vector<double> v(6);
      for (double& x : v) x = u(gen);
      args.push_back(Tensor::vector(std::move(v)));
    }
    const Tensor out = broadcast_apply(d, args);
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::vector<double> point;
      for (const Tensor& t : args) point.push_back(t.data[i]);
      INFO(d.name);
      CHECK(testing::same_bits(out.data[i], d(point)));
    }
  }
}

TEST_CASE("manifest matches the committed copy") {
  std::ifstream in(ELFUN_MANIFEST_PATH);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == registry_manifest_csv());
}
