#pragma once

// Carlson symmetric elliptic integrals of real non-negative arguments,
// computed by the duplication theorem with the fifth-order Taylor tail.
//
// Domain violations return NaN.  Cauchy principal values (negative y in RC,
// negative p in RJ) are not provided and also return NaN.

#include "elfun/numeric.hpp"

namespace elfun {

/// R_C(x, y) = R_F(x, y, y);  x >= 0, y > 0.
ExtReal rc(double x, double y);

/// R_F(x, y, z);  all >= 0, at most one zero.  An infinite argument gives 0.
ExtReal rf(double x, double y, double z);

/// R_D(x, y, z) = R_J(x, y, z, z);  x, y >= 0 not both zero, z > 0.
ExtReal rd(double x, double y, double z);

/// R_J(x, y, z, p);  x, y, z >= 0 with at most one zero, p > 0.
ExtReal rj(double x, double y, double z, double p);

/// R_G(x, y, z);  all >= 0.  rg(0, 0, 0) == 0.
ExtReal rg(double x, double y, double z);

}  // namespace elfun
