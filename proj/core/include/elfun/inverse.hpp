#pragma once

// Inverse Jacobian elliptic functions.  Every inverse is an algebraic
// reduction to the Jacobi-form integral F(y|m); nothing is iterated.
//
// Branches: odd codes (sn, sc, sd, cs, ds, ns) return u in [-K, K].  Even
// codes return u in [0, K] for x >= 0; for m < 1 the codes cn, cd, dc and nc
// also take negative x, which lies on [K, 2K].

#include "elfun/jacobi.hpp"
#include "elfun/numeric.hpp"

namespace elfun {

ExtReal inverse_glaisher(GlaisherCode code, double x, double m);

/// am^-1(x|m) = F(x|m) with x read as an amplitude.
ExtReal mijam(double x, double m);

inline ExtReal mijsn(double x, double m) { return inverse_glaisher(GlaisherCode::sn, x, m); }
inline ExtReal mijcn(double x, double m) { return inverse_glaisher(GlaisherCode::cn, x, m); }
inline ExtReal mijdn(double x, double m) { return inverse_glaisher(GlaisherCode::dn, x, m); }
inline ExtReal mijcd(double x, double m) { return inverse_glaisher(GlaisherCode::cd, x, m); }
inline ExtReal mijcs(double x, double m) { return inverse_glaisher(GlaisherCode::cs, x, m); }
inline ExtReal mijdc(double x, double m) { return inverse_glaisher(GlaisherCode::dc, x, m); }
inline ExtReal mijds(double x, double m) { return inverse_glaisher(GlaisherCode::ds, x, m); }
inline ExtReal mijnc(double x, double m) { return inverse_glaisher(GlaisherCode::nc, x, m); }
inline ExtReal mijnd(double x, double m) { return inverse_glaisher(GlaisherCode::nd, x, m); }
inline ExtReal mijns(double x, double m) { return inverse_glaisher(GlaisherCode::ns, x, m); }
inline ExtReal mijsc(double x, double m) { return inverse_glaisher(GlaisherCode::sc, x, m); }
inline ExtReal mijsd(double x, double m) { return inverse_glaisher(GlaisherCode::sd, x, m); }

}  // namespace elfun
