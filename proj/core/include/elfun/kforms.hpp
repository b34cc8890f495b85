#pragma once

// Modulus forms: Q(..., k) = Q(... | k^2).  All go through k_wrapper.

#include "elfun/integrals.hpp"
#include "elfun/inverse.hpp"
#include "elfun/jacobi.hpp"
#include "elfun/numeric.hpp"

namespace elfun {

inline ExtReal elB(double k) {
  return k_wrapper([](double m) { return melB(m); }, k);
}
inline ExtReal elC(double k) {
  return k_wrapper([](double m) { return melC(m); }, k);
}
inline ExtReal elD(double k) {
  return k_wrapper([](double m) { return melD(m); }, k);
}
inline ExtReal elE(double k) {
  return k_wrapper([](double m) { return melE(m); }, k);
}
inline ExtReal elK(double k) {
  return k_wrapper([](double m) { return melK(m); }, k);
}
inline ExtReal elPi(double nu, double k) {
  return k_wrapper([](double nu, double m) { return melPi(nu, m); }, k, nu);
}
inline ExtReal elCE(double k) {
  return k_wrapper([](double m) { return melCE(m); }, k);
}
inline ExtReal elCK(double k) {
  return k_wrapper([](double m) { return melCK(m); }, k);
}
inline ExtReal elCPi(double nu, double k) {
  return k_wrapper([](double nu, double m) { return melCPi(nu, m); }, k, nu);
}
inline ExtReal elB(double x, double k) {
  return k_wrapper([](double x, double m) { return melB(x, m); }, k, x);
}
inline ExtReal elD(double x, double k) {
  return k_wrapper([](double x, double m) { return melD(x, m); }, k, x);
}
inline ExtReal elE(double x, double k) {
  return k_wrapper([](double x, double m) { return melE(x, m); }, k, x);
}
inline ExtReal elF(double x, double k) {
  return k_wrapper([](double x, double m) { return melF(x, m); }, k, x);
}
inline ExtReal elPi(double x, double nu, double k) {
  return k_wrapper([](double x, double nu, double m) { return melPi(x, nu, m); }, k, x, nu);
}
inline ExtReal pelB(double phi, double k) {
  return k_wrapper([](double phi, double m) { return mpelB(phi, m); }, k, phi);
}
inline ExtReal pelD(double phi, double k) {
  return k_wrapper([](double phi, double m) { return mpelD(phi, m); }, k, phi);
}
inline ExtReal pelE(double phi, double k) {
  return k_wrapper([](double phi, double m) { return mpelE(phi, m); }, k, phi);
}
inline ExtReal pelF(double phi, double k) {
  return k_wrapper([](double phi, double m) { return mpelF(phi, m); }, k, phi);
}
inline ExtReal pelPi(double phi, double nu, double k) {
  return k_wrapper([](double phi, double nu, double m) { return mpelPi(phi, nu, m); }, k, phi, nu);
}
inline ExtReal jepsilon(double u, double k) {
  return k_wrapper([](double u, double m) { return mjepsilon(u, m); }, k, u);
}
inline ExtReal jlambda(double u, double nu, double k) {
  return k_wrapper([](double u, double nu, double m) { return mjlambda(u, nu, m); }, k, u, nu);
}
inline ExtReal Jzeta(double u, double k) {
  return k_wrapper([](double u, double m) { return mJzeta(u, m); }, k, u);
}
inline ExtReal pJzeta(double phi, double k) {
  return k_wrapper([](double phi, double m) { return mpJzeta(phi, m); }, k, phi);
}
inline ExtReal Jomega(double u, double nu, double k) {
  return k_wrapper([](double u, double nu, double m) { return mJomega(u, nu, m); }, k, u, nu);
}
inline ExtReal pJomega(double phi, double nu, double k) {
  return k_wrapper([](double phi, double nu, double m) { return mpJomega(phi, nu, m); }, k, phi, nu);
}
inline ExtReal Hlambda(double beta, double k) {
  return k_wrapper([](double beta, double m) { return mHlambda(beta, m); }, k, beta);
}
inline ExtReal jam(double x, double k) {
  return k_wrapper([](double x, double m) { return mjam(x, m); }, k, x);
}
inline ExtReal jcd(double x, double k) {
  return k_wrapper([](double x, double m) { return mjcd(x, m); }, k, x);
}
inline ExtReal jcn(double x, double k) {
  return k_wrapper([](double x, double m) { return mjcn(x, m); }, k, x);
}
inline ExtReal jcs(double x, double k) {
  return k_wrapper([](double x, double m) { return mjcs(x, m); }, k, x);
}
inline ExtReal jdc(double x, double k) {
  return k_wrapper([](double x, double m) { return mjdc(x, m); }, k, x);
}
inline ExtReal jdn(double x, double k) {
  return k_wrapper([](double x, double m) { return mjdn(x, m); }, k, x);
}
inline ExtReal jds(double x, double k) {
  return k_wrapper([](double x, double m) { return mjds(x, m); }, k, x);
}
inline ExtReal jnc(double x, double k) {
  return k_wrapper([](double x, double m) { return mjnc(x, m); }, k, x);
}
inline ExtReal jnd(double x, double k) {
  return k_wrapper([](double x, double m) { return mjnd(x, m); }, k, x);
}
inline ExtReal jns(double x, double k) {
  return k_wrapper([](double x, double m) { return mjns(x, m); }, k, x);
}
inline ExtReal jsc(double x, double k) {
  return k_wrapper([](double x, double m) { return mjsc(x, m); }, k, x);
}
inline ExtReal jsd(double x, double k) {
  return k_wrapper([](double x, double m) { return mjsd(x, m); }, k, x);
}
inline ExtReal jsn(double x, double k) {
  return k_wrapper([](double x, double m) { return mjsn(x, m); }, k, x);
}
inline ExtReal ijam(double x, double k) {
  return k_wrapper([](double x, double m) { return mijam(x, m); }, k, x);
}
inline ExtReal ijcd(double x, double k) {
  return k_wrapper([](double x, double m) { return mijcd(x, m); }, k, x);
}
inline ExtReal ijcn(double x, double k) {
  return k_wrapper([](double x, double m) { return mijcn(x, m); }, k, x);
}
inline ExtReal ijcs(double x, double k) {
  return k_wrapper([](double x, double m) { return mijcs(x, m); }, k, x);
}
inline ExtReal ijdc(double x, double k) {
  return k_wrapper([](double x, double m) { return mijdc(x, m); }, k, x);
}
inline ExtReal ijdn(double x, double k) {
  return k_wrapper([](double x, double m) { return mijdn(x, m); }, k, x);
}
inline ExtReal ijds(double x, double k) {
  return k_wrapper([](double x, double m) { return mijds(x, m); }, k, x);
}
inline ExtReal ijnc(double x, double k) {
  return k_wrapper([](double x, double m) { return mijnc(x, m); }, k, x);
}
inline ExtReal ijnd(double x, double k) {
  return k_wrapper([](double x, double m) { return mijnd(x, m); }, k, x);
}
inline ExtReal ijns(double x, double k) {
  return k_wrapper([](double x, double m) { return mijns(x, m); }, k, x);
}
inline ExtReal ijsc(double x, double k) {
  return k_wrapper([](double x, double m) { return mijsc(x, m); }, k, x);
}
inline ExtReal ijsd(double x, double k) {
  return k_wrapper([](double x, double m) { return mijsd(x, m); }, k, x);
}
inline ExtReal ijsn(double x, double k) {
  return k_wrapper([](double x, double m) { return mijsn(x, m); }, k, x);
}

}  // namespace elfun
