// Every registered function against high-precision values frozen from mpmath.

#include <doctest.h>

#include <sstream>
#include <vector>

#include "elfun/registry.hpp"
#include "support.hpp"

namespace {

struct Row {
  const char* name;
  std::vector<double> args;
  double value;
  double tol;
};

const Row kRows[] = {
#include "reference_values.inc"
};

std::string describe(const Row& r) {
  std::ostringstream os;
  os.precision(17);
  os << r.name << "(";
  for (std::size_t i = 0; i < r.args.size(); ++i) os << (i ? ", " : "") << r.args[i];
  os << ")";
  return os.str();
}

}  // namespace

TEST_CASE("frozen high-precision values") {
  for (const Row& r : kRows) {
    const auto& f = elfun::lookup(r.name, static_cast<int>(r.args.size()));
    const double v = f(r.args);
    INFO(describe(r), " = ", v, ", expected ", r.value);
    CHECK(testing::rel_err(v, r.value) <= r.tol);
  }
}

TEST_CASE("frozen values cover every m-form family") {
  const char* families[] = {"rf", "rd", "rj", "rg", "rc", "el1", "el2", "el3", "cel", "melK",
                            "melE", "melB", "melD", "melC", "melPi", "melCK", "melCE",
                            "melCPi", "mpelF", "mpelE", "mpelB", "mpelD", "mpelPi", "melF",
                            "mjepsilon", "mjlambda", "mJzeta", "mpJzeta", "mJomega",
                            "mHlambda", "mjam", "mjsn", "mjcs", "mijsn", "mijds", "mijam",
                            "jtheta1", "jtheta4", "nthetaS", "mnthetaN", "mnome", "elnome",
                            "ielnome", "gsl", "gcl", "igsl", "igcl", "gd", "igd"};
  for (const char* name : families) {
    bool found = false;
    for (const Row& r : kRows) found = found || std::string(r.name) == name;
    INFO(name);
    CHECK(found);
  }
}
