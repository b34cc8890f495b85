#pragma once

// Legendre, Jacobi and Jacobi-second-form elliptic integrals of real
// arguments in parameter (m) form, plus the complete, complementary and
// related functions.  All are backed by the Carlson integrals.
//
// Legendre and second-form integrals are quasi-periodic: the amplitude (or
// u) is reduced first, so F(phi + n pi | m) = F(phi | m) + 2 n K(m) holds to
// rounding for large arguments.  k-form wrappers live in elfun/kforms.hpp.

#include "elfun/numeric.hpp"

namespace elfun {

enum class IntegralKind { B, C, D, E, F, Pi };

// ---- complete integrals, -inf <= m <= 1 -----------------------------------

ExtReal melK(double m);
ExtReal melE(double m);
ExtReal melB(double m);
ExtReal melC(double m);
ExtReal melD(double m);
ExtReal melPi(double nu, double m);

// ---- complementary complete integrals, 0 <= m <= inf ----------------------

ExtReal melCK(double m);
ExtReal melCE(double m);
ExtReal melCPi(double nu, double m);

// ---- incomplete, Legendre form (amplitude phi) ----------------------------

/// Throws std::invalid_argument for IntegralKind::C, which has no
/// incomplete form.  `nu` is ignored unless kind == Pi.
ExtReal incomplete_legendre(IntegralKind kind, double phi, double nu, double m);

ExtReal mpelB(double phi, double m);
ExtReal mpelD(double phi, double m);
ExtReal mpelE(double phi, double m);
ExtReal mpelF(double phi, double m);
ExtReal mpelPi(double phi, double nu, double m);

// ---- incomplete, Jacobi form (x = sin phi) --------------------------------

ExtReal incomplete_jacobi(IntegralKind kind, double x, double nu, double m);

ExtReal melB(double x, double m);
ExtReal melD(double x, double m);
ExtReal melE(double x, double m);
ExtReal melF(double x, double m);
ExtReal melPi(double x, double nu, double m);

// ---- Jacobi's second form (argument u) ------------------------------------

/// Jacobi epsilon: int_0^u dn^2(t|m) dt.  Defined for every real m.
ExtReal mjepsilon(double u, double m);

/// Lawden's Lambda: int_0^u dt / (1 - nu sn^2(t|m)).
ExtReal mjlambda(double u, double nu, double m);

// ---- related functions, m <= 1 --------------------------------------------

ExtReal mJzeta(double u, double m);
ExtReal mpJzeta(double phi, double m);
ExtReal mJomega(double u, double nu, double m);
ExtReal mpJomega(double phi, double nu, double m);

/// Heuman's complete Lambda_0(beta | m), 0 <= m <= 1.
ExtReal mHlambda(double beta, double m);

}  // namespace elfun
