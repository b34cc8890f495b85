#pragma once

// Bulirsch's incomplete integrals el1, el2, el3 and the general complete
// integral cel, parameterised by the complementary modulus kc.  Results
// depend on kc only through kc*kc.
//
//   el1(x, kc)       = int_0^x dt / sqrt((1+t^2)(1+kc^2 t^2))
//   el2(x, kc, a, b) = int_0^x (a + b t^2) dt / ((1+t^2) sqrt(...))
//   el3(x, kc, p)    = int_0^x (1+t^2) dt / ((1+p t^2) sqrt(...))
//   cel(kc, p, a, b) = int_0^inf (a + b t^2) dt / ((1+p t^2) sqrt(...))
//
// x = +-Inf selects the complete forms.

#include "elfun/numeric.hpp"

namespace elfun {

ExtReal el1(double x, double kc);
ExtReal el2(double x, double kc, double a, double b);
ExtReal el3(double x, double kc, double p);

/// General complete integral.  p < 0 gives the Cauchy principal value.
ExtReal cel(double kc, double p, double a, double b);

inline ExtReal cel1(double kc) { return cel(kc, 1, 1, 1); }
inline ExtReal cel2(double kc, double a, double b) { return cel(kc, 1, a, b); }
inline ExtReal cel3(double kc, double p) { return cel(kc, p, 1, 1); }

}  // namespace elfun
