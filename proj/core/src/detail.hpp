#pragma once

// Internal helpers shared between the integral and Jacobi-function kernels.

#include "elfun/jacobi.hpp"
#include "elfun/numeric.hpp"

namespace elfun::detail {

/// K(m) for m < 1 in extended precision, returned as hi + lo.
struct SplitValue {
  double hi;
  double lo;
};
SplitValue two_k_split(double m);

/// u reduced to |r| <= K(m) for m < 1, with sn, cn, dn at r.
struct ReducedArgument {
  double n;  // u = 2 n K + r
  double r;
  SnCnDn at_r;
};
ReducedArgument reduce_jacobi(double u, double m);

/// Integral kernels on the principal range.  s >= 0, c >= 0 are sin and cos
/// of an amplitude in [0, pi/2]; dn2 = 1 - m s^2 >= 0.
double kernel_F(double s, double c, double dn2);
double kernel_E(double s, double c, double dn2, double m);
double kernel_B(double s, double c, double dn2, double m);
double kernel_D(double s, double c, double dn2);
double kernel_Pi(double s, double c, double dn2, double nu);

}  // namespace elfun::detail
