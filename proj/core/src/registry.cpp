#include "elfun/registry.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "elfun/bulirsch.hpp"
#include "elfun/carlson.hpp"
#include "elfun/integrals.hpp"
#include "elfun/inverse.hpp"
#include "elfun/jacobi.hpp"
#include "elfun/kforms.hpp"
#include "elfun/misc.hpp"
#include "elfun/theta.hpp"

namespace elfun {

std::string_view to_string(ArgRole role) {
  switch (role) {
    case ArgRole::argument:
      return "argument";
    case ArgRole::amplitude:
      return "amplitude";
    case ArgRole::characteristic:
      return "characteristic";
    case ArgRole::parameter:
      return "parameter";
    case ArgRole::modulus:
      return "modulus";
    case ArgRole::nome:
      return "nome";
    case ArgRole::coefficient:
      return "coefficient";
  }
  return "?";
}

namespace {

using S = std::span<const double>;

void add(std::vector<FunctionDescriptor>& v, std::string name, std::vector<std::string> aliases,
         std::vector<ArgRole> roles, std::string table, std::string note, double (*fn)(S)) {
  FunctionDescriptor d;
  d.name = std::move(name);
  d.aliases = std::move(aliases);
  d.arity = static_cast<int>(roles.size());
  d.arg_roles = std::move(roles);
  d.domain_note = std::move(note);
  d.table = std::move(table);
  d.scalar = fn;
  v.push_back(std::move(d));
}

std::vector<FunctionDescriptor> build() {
  std::vector<FunctionDescriptor> v;
  add(v, "el1", {"e1", "BulirschEL1"}, {ArgRole::argument, ArgRole::modulus}, "A1",
      "all real x and kc", [](S a) { return el1(a[0], a[1]); });
  add(v, "el2", {"e2", "BulirschEL2"},
      {ArgRole::argument, ArgRole::modulus, ArgRole::coefficient, ArgRole::coefficient}, "A1",
      "all real x and kc", [](S a) { return el2(a[0], a[1], a[2], a[3]); });
  add(v, "el3", {"e3", "BulirschEL3"},
      {ArgRole::argument, ArgRole::modulus, ArgRole::characteristic}, "A1", "1 + p x^2 > 0",
      [](S a) { return el3(a[0], a[1], a[2]); });
  add(v, "cel1", {"BulirschCEL1"}, {ArgRole::modulus}, "A1", "kc != 0",
      [](S a) { return cel1(a[0]); });
  add(v, "cel2", {"BulirschCEL2"}, {ArgRole::modulus, ArgRole::coefficient, ArgRole::coefficient},
      "A1", "kc != 0 unless b = 0", [](S a) { return cel2(a[0], a[1], a[2]); });
  add(v, "cel3", {"BulirschCEL3"}, {ArgRole::modulus, ArgRole::characteristic}, "A1",
      "p != 0; p < 0 is a principal value", [](S a) { return cel3(a[0], a[1]); });
  add(v, "cel", {"BulirschCEL"},
      {ArgRole::modulus, ArgRole::characteristic, ArgRole::coefficient, ArgRole::coefficient}, "A1",
      "p != 0; p < 0 is a principal value", [](S a) { return cel(a[0], a[1], a[2], a[3]); });
  add(v, "rc", {"CarlsonRC"}, {ArgRole::argument, ArgRole::argument}, "A2", "x >= 0; y > 0",
      [](S a) { return rc(a[0], a[1]); });
  add(v, "rd", {"CarlsonRD"}, {ArgRole::argument, ArgRole::argument, ArgRole::argument}, "A2",
      "x and y >= 0 not both zero; z > 0", [](S a) { return rd(a[0], a[1], a[2]); });
  add(v, "rf", {"CarlsonRF"}, {ArgRole::argument, ArgRole::argument, ArgRole::argument}, "A2",
      "x y z >= 0; at most one zero", [](S a) { return rf(a[0], a[1], a[2]); });
  add(v, "rg", {"CarlsonRG"}, {ArgRole::argument, ArgRole::argument, ArgRole::argument}, "A2",
      "x y z >= 0", [](S a) { return rg(a[0], a[1], a[2]); });
  add(v, "rj", {"CarlsonRJ"},
      {ArgRole::argument, ArgRole::argument, ArgRole::argument, ArgRole::argument}, "A2",
      "x y z >= 0 at most one zero; p > 0", [](S a) { return rj(a[0], a[1], a[2], a[3]); });
  add(v, "melB", {"mEllipticB"}, {ArgRole::argument, ArgRole::parameter}, "A3",
      "|x| <= 1; m x^2 <= 1", [](S a) { return melB(a[0], a[1]); });
  add(v, "melD", {"mEllipticD", "meld"}, {ArgRole::argument, ArgRole::parameter}, "A3",
      "|x| <= 1; m x^2 <= 1", [](S a) { return melD(a[0], a[1]); });
  add(v, "melE", {"mEllipticE"}, {ArgRole::argument, ArgRole::parameter}, "A3",
      "|x| <= 1; m x^2 <= 1", [](S a) { return melE(a[0], a[1]); });
  add(v, "melF", {"mEllipticF"}, {ArgRole::argument, ArgRole::parameter}, "A3",
      "|x| <= 1; m x^2 <= 1", [](S a) { return melF(a[0], a[1]); });
  add(v, "melPi", {"mEllipticPi"}, {ArgRole::argument, ArgRole::characteristic, ArgRole::parameter},
      "A3", "|x| <= 1; m x^2 <= 1; nu x^2 <= 1", [](S a) { return melPi(a[0], a[1], a[2]); });
  add(v, "mpelB", {"mpEllipticB"}, {ArgRole::amplitude, ArgRole::parameter}, "A3",
      "any phi for m <= 1; |sin phi| <= 1/sqrt(m) for m > 1",
      [](S a) { return mpelB(a[0], a[1]); });
  add(v, "mpelD", {"mpEllipticD"}, {ArgRole::amplitude, ArgRole::parameter}, "A3",
      "any phi for m <= 1; |sin phi| <= 1/sqrt(m) for m > 1",
      [](S a) { return mpelD(a[0], a[1]); });
  add(v, "mpelE", {"mpEllipticE"}, {ArgRole::amplitude, ArgRole::parameter}, "A3",
      "any phi for m <= 1; |sin phi| <= 1/sqrt(m) for m > 1",
      [](S a) { return mpelE(a[0], a[1]); });
  add(v, "mpelF", {"mpEllipticF"}, {ArgRole::amplitude, ArgRole::parameter}, "A3",
      "any phi for m <= 1; |sin phi| <= 1/sqrt(m) for m > 1",
      [](S a) { return mpelF(a[0], a[1]); });
  add(v, "mpelPi", {"mpEllipticPi"},
      {ArgRole::amplitude, ArgRole::characteristic, ArgRole::parameter}, "A3",
      "as mpelF; nu sin^2 phi <= 1", [](S a) { return mpelPi(a[0], a[1], a[2]); });
  add(v, "mjepsilon", {"mJacobiEpsilon"}, {ArgRole::argument, ArgRole::parameter}, "A3",
      "all real u and m", [](S a) { return mjepsilon(a[0], a[1]); });
  add(v, "mjlambda", {"mJacobiLambda", "mjlambd"},
      {ArgRole::argument, ArgRole::characteristic, ArgRole::parameter}, "A3",
      "nu sn^2 < 1 along the path", [](S a) { return mjlambda(a[0], a[1], a[2]); });
  add(v, "melB", {"mEllipticB"}, {ArgRole::parameter}, "A4", "m <= 1",
      [](S a) { return melB(a[0]); });
  add(v, "melC", {"mEllipticC"}, {ArgRole::parameter}, "A4", "m <= 1",
      [](S a) { return melC(a[0]); });
  add(v, "melD", {"mEllipticD"}, {ArgRole::parameter}, "A4", "m <= 1",
      [](S a) { return melD(a[0]); });
  add(v, "melE", {"mEllipticE"}, {ArgRole::parameter}, "A4", "m <= 1",
      [](S a) { return melE(a[0]); });
  add(v, "melK", {"mEllipticK"}, {ArgRole::parameter}, "A4", "m <= 1",
      [](S a) { return melK(a[0]); });
  add(v, "melPi", {"mEllipticPi"}, {ArgRole::characteristic, ArgRole::parameter}, "A4",
      "m <= 1; nu < 1", [](S a) { return melPi(a[0], a[1]); });
  add(v, "melCE", {"mEllipticCE"}, {ArgRole::parameter}, "A5", "m >= 0",
      [](S a) { return melCE(a[0]); });
  add(v, "melCK", {"mEllipticCK"}, {ArgRole::parameter}, "A5", "m >= 0",
      [](S a) { return melCK(a[0]); });
  add(v, "melCPi", {"mEllipticCPi"}, {ArgRole::characteristic, ArgRole::parameter}, "A5",
      "m >= 0; nu < 1", [](S a) { return melCPi(a[0], a[1]); });
  add(v, "mJzeta", {"mJacobiZeta"}, {ArgRole::argument, ArgRole::parameter}, "A6", "m <= 1",
      [](S a) { return mJzeta(a[0], a[1]); });
  add(v, "mpJzeta", {"mpJacobiZeta"}, {ArgRole::amplitude, ArgRole::parameter}, "A6", "m <= 1",
      [](S a) { return mpJzeta(a[0], a[1]); });
  add(v, "mJomega", {"mJacobiOmega"},
      {ArgRole::argument, ArgRole::characteristic, ArgRole::parameter}, "A6", "m <= 1; nu < 1",
      [](S a) { return mJomega(a[0], a[1], a[2]); });
  add(v, "mpJomega", {"mpJacobiOmega"},
      {ArgRole::amplitude, ArgRole::characteristic, ArgRole::parameter}, "A6", "m <= 1; nu < 1",
      [](S a) { return mpJomega(a[0], a[1], a[2]); });
  add(v, "mHlambda", {"mHeumanLambda"}, {ArgRole::amplitude, ArgRole::parameter}, "A6",
      "0 <= m <= 1", [](S a) { return mHlambda(a[0], a[1]); });
  add(v, "mjam", {"mJacobiAM"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjam(a[0], a[1]); });
  add(v, "mjcd", {"mJacobiCD"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjcd(a[0], a[1]); });
  add(v, "mjcn", {"mJacobiCN"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjcn(a[0], a[1]); });
  add(v, "mjcs", {"mJacobiCS"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjcs(a[0], a[1]); });
  add(v, "mjdc", {"mJacobiDC"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjdc(a[0], a[1]); });
  add(v, "mjdn", {"mJacobiDN"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjdn(a[0], a[1]); });
  add(v, "mjds", {"mJacobiDS"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjds(a[0], a[1]); });
  add(v, "mjnc", {"mJacobiNC"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjnc(a[0], a[1]); });
  add(v, "mjnd", {"mJacobiND"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjnd(a[0], a[1]); });
  add(v, "mjns", {"mJacobiNS"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjns(a[0], a[1]); });
  add(v, "mjsc", {"mJacobiSC"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjsc(a[0], a[1]); });
  add(v, "mjsd", {"mJacobiSD"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjsd(a[0], a[1]); });
  add(v, "mjsn", {"mJacobiSN"}, {ArgRole::argument, ArgRole::parameter}, "A7", "all real x and m",
      [](S a) { return mjsn(a[0], a[1]); });
  add(v, "mijam", {"mInverseJacobiAM"}, {ArgRole::amplitude, ArgRole::parameter}, "A8", "as mpelF",
      [](S a) { return mijam(a[0], a[1]); });
  add(v, "mijcd", {"mInverseJacobiCD"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijcd(a[0], a[1]); });
  add(v, "mijcn", {"mInverseJacobiCN"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijcn(a[0], a[1]); });
  add(v, "mijcs", {"mInverseJacobiCS"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijcs(a[0], a[1]); });
  add(v, "mijdc", {"mInverseJacobiDC"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijdc(a[0], a[1]); });
  add(v, "mijdn", {"mInverseJacobiDN"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijdn(a[0], a[1]); });
  add(v, "mijds", {"mInverseJacobiDS"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijds(a[0], a[1]); });
  add(v, "mijnc", {"mInverseJacobiNC"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijnc(a[0], a[1]); });
  add(v, "mijnd", {"mInverseJacobiND"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijnd(a[0], a[1]); });
  add(v, "mijns", {"mInverseJacobiNS"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijns(a[0], a[1]); });
  add(v, "mijsc", {"mInverseJacobiSC"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijsc(a[0], a[1]); });
  add(v, "mijsd", {"mInverseJacobiSD"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijsd(a[0], a[1]); });
  add(v, "mijsn", {"mInverseJacobiSN"}, {ArgRole::argument, ArgRole::parameter}, "A8",
      "x in the range of the function", [](S a) { return mijsn(a[0], a[1]); });
  add(v, "gcl", {"GaussCL"}, {ArgRole::argument}, "A9", "all real x",
      [](S a) { return gcl(a[0]); });
  add(v, "gsl", {"GaussSL"}, {ArgRole::argument}, "A9", "all real x",
      [](S a) { return gsl(a[0]); });
  add(v, "igcl", {"InverseGaussCL"}, {ArgRole::argument}, "A9", "|x| <= 1",
      [](S a) { return igcl(a[0]); });
  add(v, "igsl", {"InverseGaussSL", "lgsl"}, {ArgRole::argument}, "A9", "|x| <= 1",
      [](S a) { return igsl(a[0]); });
  add(v, "gd", {"GudermannGD"}, {ArgRole::argument}, "A10", "all real x",
      [](S a) { return gd(a[0]); });
  add(v, "igd", {"InverseGudermannGD"}, {ArgRole::argument}, "A10", "|x| <= pi/2",
      [](S a) { return igd(a[0]); });
  add(v, "jtheta1", {"JacobiTheta1"}, {ArgRole::argument, ArgRole::nome}, "A11", "0 <= q <= 0.999",
      [](S a) { return jtheta1(a[0], a[1]); });
  add(v, "jtheta2", {"JacobiTheta2"}, {ArgRole::argument, ArgRole::nome}, "A11", "0 <= q <= 0.999",
      [](S a) { return jtheta2(a[0], a[1]); });
  add(v, "jtheta3", {"JacobiTheta3"}, {ArgRole::argument, ArgRole::nome}, "A11", "0 <= q <= 0.999",
      [](S a) { return jtheta3(a[0], a[1]); });
  add(v, "jtheta4", {"JacobiTheta4"}, {ArgRole::argument, ArgRole::nome}, "A11", "0 <= q <= 0.999",
      [](S a) { return jtheta4(a[0], a[1]); });
  add(v, "nthetaC", {"NevilleThetaC"}, {ArgRole::argument, ArgRole::nome}, "A12", "0 <= q <= 0.999",
      [](S a) { return nthetaC(a[0], a[1]); });
  add(v, "nthetaD", {"NevilleThetaD"}, {ArgRole::argument, ArgRole::nome}, "A12", "0 <= q <= 0.999",
      [](S a) { return nthetaD(a[0], a[1]); });
  add(v, "nthetaN", {"NevilleThetaN"}, {ArgRole::argument, ArgRole::nome}, "A12", "0 <= q <= 0.999",
      [](S a) { return nthetaN(a[0], a[1]); });
  add(v, "nthetaS", {"NevilleThetaS"}, {ArgRole::argument, ArgRole::nome}, "A12", "0 <= q <= 0.999",
      [](S a) { return nthetaS(a[0], a[1]); });
  add(v, "mnthetaC", {"mNevilleThetaC"}, {ArgRole::argument, ArgRole::parameter}, "A12",
      "0 <= m < 1", [](S a) { return mnthetaC(a[0], a[1]); });
  add(v, "mnthetaD", {"mNevilleThetaD"}, {ArgRole::argument, ArgRole::parameter}, "A12",
      "0 <= m < 1", [](S a) { return mnthetaD(a[0], a[1]); });
  add(v, "mnthetaN", {"mNevilleThetaN"}, {ArgRole::argument, ArgRole::parameter}, "A12",
      "0 <= m < 1", [](S a) { return mnthetaN(a[0], a[1]); });
  add(v, "mnthetaS", {"mNevilleThetaS"}, {ArgRole::argument, ArgRole::parameter}, "A12",
      "0 <= m < 1", [](S a) { return mnthetaS(a[0], a[1]); });
  add(v, "elnome", {"EllipticNome"}, {ArgRole::modulus}, "A13", "|k| <= 1",
      [](S a) { return elnome(a[0]); });
  add(v, "ielnome", {"InverseEllipticNome"}, {ArgRole::nome}, "A13", "0 <= q <= 0.999",
      [](S a) { return ielnome(a[0]); });
  add(v, "mnome", {"mEllipticNome"}, {ArgRole::parameter}, "x", "0 <= m <= 1",
      [](S a) { return mnome(a[0]); });
  add(v, "elB", {"EllipticB"}, {ArgRole::argument, ArgRole::modulus}, "k", "|x| <= 1; k^2 x^2 <= 1",
      [](S a) { return elB(a[0], a[1]); });
  add(v, "elD", {"EllipticD"}, {ArgRole::argument, ArgRole::modulus}, "k", "|x| <= 1; k^2 x^2 <= 1",
      [](S a) { return elD(a[0], a[1]); });
  add(v, "elE", {"EllipticE"}, {ArgRole::argument, ArgRole::modulus}, "k", "|x| <= 1; k^2 x^2 <= 1",
      [](S a) { return elE(a[0], a[1]); });
  add(v, "elF", {"EllipticF"}, {ArgRole::argument, ArgRole::modulus}, "k", "|x| <= 1; k^2 x^2 <= 1",
      [](S a) { return elF(a[0], a[1]); });
  add(v, "elPi", {"EllipticPi"}, {ArgRole::argument, ArgRole::characteristic, ArgRole::modulus},
      "k", "|x| <= 1; k^2 x^2 <= 1; nu x^2 <= 1", [](S a) { return elPi(a[0], a[1], a[2]); });
  add(v, "pelB", {"pEllipticB"}, {ArgRole::amplitude, ArgRole::modulus}, "k",
      "any phi for |k| <= 1; |sin phi| <= 1/|k| for |k| > 1", [](S a) { return pelB(a[0], a[1]); });
  add(v, "pelD", {"pEllipticD"}, {ArgRole::amplitude, ArgRole::modulus}, "k",
      "any phi for |k| <= 1; |sin phi| <= 1/|k| for |k| > 1", [](S a) { return pelD(a[0], a[1]); });
  add(v, "pelE", {"pEllipticE"}, {ArgRole::amplitude, ArgRole::modulus}, "k",
      "any phi for |k| <= 1; |sin phi| <= 1/|k| for |k| > 1", [](S a) { return pelE(a[0], a[1]); });
  add(v, "pelF", {"pEllipticF"}, {ArgRole::amplitude, ArgRole::modulus}, "k",
      "any phi for |k| <= 1; |sin phi| <= 1/|k| for |k| > 1", [](S a) { return pelF(a[0], a[1]); });
  add(v, "pelPi", {"pEllipticPi"}, {ArgRole::amplitude, ArgRole::characteristic, ArgRole::modulus},
      "k", "as mpelF; nu sin^2 phi <= 1", [](S a) { return pelPi(a[0], a[1], a[2]); });
  add(v, "jepsilon", {"JacobiEpsilon"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "all real u and k", [](S a) { return jepsilon(a[0], a[1]); });
  add(v, "jlambda", {"JacobiLambda"},
      {ArgRole::argument, ArgRole::characteristic, ArgRole::modulus}, "k",
      "nu sn^2 < 1 along the path", [](S a) { return jlambda(a[0], a[1], a[2]); });
  add(v, "elB", {"EllipticB"}, {ArgRole::modulus}, "k", "|k| <= 1", [](S a) { return elB(a[0]); });
  add(v, "elC", {"EllipticC"}, {ArgRole::modulus}, "k", "|k| <= 1", [](S a) { return elC(a[0]); });
  add(v, "elD", {"EllipticD"}, {ArgRole::modulus}, "k", "|k| <= 1", [](S a) { return elD(a[0]); });
  add(v, "elE", {"EllipticE"}, {ArgRole::modulus}, "k", "|k| <= 1", [](S a) { return elE(a[0]); });
  add(v, "elK", {"EllipticK"}, {ArgRole::modulus}, "k", "|k| <= 1", [](S a) { return elK(a[0]); });
  add(v, "elPi", {"EllipticPi"}, {ArgRole::characteristic, ArgRole::modulus}, "k",
      "|k| <= 1; nu < 1", [](S a) { return elPi(a[0], a[1]); });
  add(v, "elCE", {"EllipticCE"}, {ArgRole::modulus}, "k", "any k", [](S a) { return elCE(a[0]); });
  add(v, "elCK", {"EllipticCK"}, {ArgRole::modulus}, "k", "any k", [](S a) { return elCK(a[0]); });
  add(v, "elCPi", {"EllipticCPi"}, {ArgRole::characteristic, ArgRole::modulus}, "k",
      "any k; nu < 1", [](S a) { return elCPi(a[0], a[1]); });
  add(v, "Jzeta", {"JacobiZeta"}, {ArgRole::argument, ArgRole::modulus}, "k", "|k| <= 1",
      [](S a) { return Jzeta(a[0], a[1]); });
  add(v, "pJzeta", {"pJacobiZeta"}, {ArgRole::amplitude, ArgRole::modulus}, "k", "|k| <= 1",
      [](S a) { return pJzeta(a[0], a[1]); });
  add(v, "Jomega", {"JacobiOmega"}, {ArgRole::argument, ArgRole::characteristic, ArgRole::modulus},
      "k", "|k| <= 1; nu < 1", [](S a) { return Jomega(a[0], a[1], a[2]); });
  add(v, "pJomega", {"pJacobiOmega"},
      {ArgRole::amplitude, ArgRole::characteristic, ArgRole::modulus}, "k", "|k| <= 1; nu < 1",
      [](S a) { return pJomega(a[0], a[1], a[2]); });
  add(v, "Hlambda", {"HeumanLambda"}, {ArgRole::amplitude, ArgRole::modulus}, "k", "0 <= |k| <= 1",
      [](S a) { return Hlambda(a[0], a[1]); });
  add(v, "jam", {"JacobiAM"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jam(a[0], a[1]); });
  add(v, "jcd", {"JacobiCD"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jcd(a[0], a[1]); });
  add(v, "jcn", {"JacobiCN"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jcn(a[0], a[1]); });
  add(v, "jcs", {"JacobiCS"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jcs(a[0], a[1]); });
  add(v, "jdc", {"JacobiDC"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jdc(a[0], a[1]); });
  add(v, "jdn", {"JacobiDN"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jdn(a[0], a[1]); });
  add(v, "jds", {"JacobiDS"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jds(a[0], a[1]); });
  add(v, "jnc", {"JacobiNC"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jnc(a[0], a[1]); });
  add(v, "jnd", {"JacobiND"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jnd(a[0], a[1]); });
  add(v, "jns", {"JacobiNS"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jns(a[0], a[1]); });
  add(v, "jsc", {"JacobiSC"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jsc(a[0], a[1]); });
  add(v, "jsd", {"JacobiSD"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jsd(a[0], a[1]); });
  add(v, "jsn", {"JacobiSN"}, {ArgRole::argument, ArgRole::modulus}, "k", "all real x and k",
      [](S a) { return jsn(a[0], a[1]); });
  add(v, "ijam", {"InverseJacobiAM"}, {ArgRole::amplitude, ArgRole::modulus}, "k", "as mpelF",
      [](S a) { return ijam(a[0], a[1]); });
  add(v, "ijcd", {"InverseJacobiCD"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijcd(a[0], a[1]); });
  add(v, "ijcn", {"InverseJacobiCN"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijcn(a[0], a[1]); });
  add(v, "ijcs", {"InverseJacobiCS"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijcs(a[0], a[1]); });
  add(v, "ijdc", {"InverseJacobiDC"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijdc(a[0], a[1]); });
  add(v, "ijdn", {"InverseJacobiDN"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijdn(a[0], a[1]); });
  add(v, "ijds", {"InverseJacobiDS"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijds(a[0], a[1]); });
  add(v, "ijnc", {"InverseJacobiNC"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijnc(a[0], a[1]); });
  add(v, "ijnd", {"InverseJacobiND"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijnd(a[0], a[1]); });
  add(v, "ijns", {"InverseJacobiNS"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijns(a[0], a[1]); });
  add(v, "ijsc", {"InverseJacobiSC"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijsc(a[0], a[1]); });
  add(v, "ijsd", {"InverseJacobiSD"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijsd(a[0], a[1]); });
  add(v, "ijsn", {"InverseJacobiSN"}, {ArgRole::argument, ArgRole::modulus}, "k",
      "x in the range of the function", [](S a) { return ijsn(a[0], a[1]); });
  return v;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool matches(const FunctionDescriptor& d, const std::string& key) {
  if (lower(d.name) == key) return true;
  return std::any_of(d.aliases.begin(), d.aliases.end(),
                     [&](const std::string& a) { return lower(a) == key; });
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

const std::vector<FunctionDescriptor>& registry() {
  static const std::vector<FunctionDescriptor> table = build();
  return table;
}

const FunctionDescriptor& lookup(std::string_view name, std::optional<int> arity) {
  const std::string key = lower(name);
  const FunctionDescriptor* best = nullptr;
  for (const auto& d : registry()) {
    if (!matches(d, key)) continue;
    if (arity && d.arity != *arity) continue;
    if (!best || d.arity < best->arity) best = &d;
  }
  if (best) return *best;
  std::string what = "unknown function '" + std::string(name) + "'";
  if (arity) what += " with " + std::to_string(*arity) + " argument(s)";
  throw NotFoundError(what, near_matches(name));
}

std::vector<std::string> near_matches(std::string_view name, std::size_t limit) {
  const std::string key = lower(name);
  std::vector<std::pair<std::size_t, std::string>> scored;
  auto consider = [&](const std::string& candidate) {
    const std::size_t d = edit_distance(key, lower(candidate));
    if (d <= std::max<std::size_t>(2, key.size() / 3)) scored.emplace_back(d, candidate);
  };
  for (const auto& d : registry()) {
    consider(d.name);
    for (const auto& a : d.aliases) consider(a);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (const auto& [d, s] : scored) {
    if (std::find(out.begin(), out.end(), s) != out.end()) continue;
    out.push_back(s);
    if (out.size() == limit) break;
  }
  return out;
}

Tensor broadcast_apply(const FunctionDescriptor& f, std::span<const Tensor> args) {
  if (static_cast<int>(args.size()) != f.arity)
    throw ArityError(f.name + " expects " + std::to_string(f.arity) + " argument(s), got " +
                     std::to_string(args.size()));
  const Tensor* shaped = nullptr;
  for (const Tensor& t : args) {
    if (t.is_scalar()) {
      if (t.data.size() != 1) throw ShapeError("scalar tensor must hold one value");
      continue;
    }
    std::size_t n = 1;
    for (std::size_t e : t.shape) n *= e;
    if (n != t.data.size()) throw ShapeError("tensor data does not match its shape");
    if (!shaped) {
      shaped = &t;
    } else if (t.shape != shaped->shape) {
      throw ShapeError(f.name + ": non-scalar arguments differ in shape");
    }
  }
  Tensor out;
  if (shaped) out.shape = shaped->shape;
  const std::size_t n = shaped ? shaped->data.size() : 1;
  out.data.resize(n);
  std::vector<double> buf(args.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < args.size(); ++j)
      buf[j] = args[j].is_scalar() ? args[j].data[0] : args[j].data[i];
    out.data[i] = f.scalar(buf);
  }
  return out;
}

std::string registry_manifest_csv() {
  std::ostringstream os;
  os << "name,aliases,arity,roles,table,domain\n";
  for (const auto& d : registry()) {
    std::vector<std::string> roles;
    for (ArgRole r : d.arg_roles) roles.emplace_back(to_string(r));
    os << d.name << ',' << join(d.aliases, ';') << ',' << d.arity << ',' << join(roles, ';') << ','
       << d.table << ',' << d.domain_note << '\n';
  }
  return os.str();
}

}  // namespace elfun
