#pragma once

// Jacobi theta functions by q-series, Neville theta functions and the
// elliptic nome.  Nomes above kMaxNome give NaN.

#include "elfun/numeric.hpp"

namespace elfun {

inline constexpr double kMaxNome = 0.999;

/// theta_j(x, q), j in 1..4.  Any other j gives NaN.
ExtReal jtheta(int j, double x, double q);

inline ExtReal jtheta1(double x, double q) { return jtheta(1, x, q); }
inline ExtReal jtheta2(double x, double q) { return jtheta(2, x, q); }
inline ExtReal jtheta3(double x, double q) { return jtheta(3, x, q); }
inline ExtReal jtheta4(double x, double q) { return jtheta(4, x, q); }

enum class NevilleKind { c, d, n, s };

/// Neville theta in nome form.
ExtReal neville_theta(NevilleKind kind, double x, double q);
/// Neville theta in parameter form, 0 <= m < 1.
ExtReal neville_theta_m(NevilleKind kind, double x, double m);

inline ExtReal nthetaC(double x, double q) { return neville_theta(NevilleKind::c, x, q); }
inline ExtReal nthetaD(double x, double q) { return neville_theta(NevilleKind::d, x, q); }
inline ExtReal nthetaN(double x, double q) { return neville_theta(NevilleKind::n, x, q); }
inline ExtReal nthetaS(double x, double q) { return neville_theta(NevilleKind::s, x, q); }
inline ExtReal mnthetaC(double x, double m) { return neville_theta_m(NevilleKind::c, x, m); }
inline ExtReal mnthetaD(double x, double m) { return neville_theta_m(NevilleKind::d, x, m); }
inline ExtReal mnthetaN(double x, double m) { return neville_theta_m(NevilleKind::n, x, m); }
inline ExtReal mnthetaS(double x, double m) { return neville_theta_m(NevilleKind::s, x, m); }

/// q(m) = exp(-pi K(1-m) / K(m)), 0 <= m <= 1.
ExtReal mnome(double m);
/// q as a function of the modulus k, |k| <= 1.
inline ExtReal elnome(double k) { return mnome(k * k); }
/// Modulus k in [0, 1) with elnome(k) = q.
ExtReal ielnome(double q);

}  // namespace elfun
