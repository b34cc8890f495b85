#pragma once

// Closed-form elastica shapes.
//
// elastica_curve: Euler's flexural elastica,
//   x(s) = (2/w)[eps(w s + C | k^2) - eps(C | k^2)] - s,
//   y(s) = (2k/w)[cn(C | k^2) - cn(w s + C | k^2)].
//
// cantilever_solve: planar finite-strain (Reissner) cantilever under a
// follower force with end angle psi1, slenderness lambda, stiffness ratio nu
// and load factor omega.  The deformed length L exists only for the
// shearless case nu = 1; otherwise it is NaN.

#include <string>
#include <vector>

namespace elfun {

struct CurveSample {
  double s;
  double x;
  double y;
  double phi;  // rotation of the cross section
};

struct ElasticaConfig {
  double omega = 5;
  double C = 1;
  std::vector<double> k_list{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> s_grid;  // empty: 0, 0.01, ..., 1

  /// Empty string when valid, otherwise the reason.
  std::string validate() const;
};

struct ElasticaCurve {
  double k;
  std::vector<CurveSample> samples;
};

/// Throws std::invalid_argument for an invalid configuration.
std::vector<ElasticaCurve> elastica_curve(const ElasticaConfig& cfg);

struct CantileverConfig {
  double psi1 = 1.0471975511965976;  // pi/3
  double lambda = 10;
  double nu = 1;
  double omega = 4;
  std::vector<double> s_grid;  // empty: 0, 0.01, ..., 1

  std::string validate() const;
};

struct CantileverResult {
  double k = 0;        // sin(psi1 / 2)
  double m2 = 0;       // m^2
  double omega_t = 0;  // omega tilde
  double m_t = 0;      // parameter k-tilde^2
  double C = 0;
  double alpha = 0;
  double L = 0;
  std::vector<CurveSample> samples;  // rotated base curve (X, Y)
  // Unrotated x along the grid by the epsilon form and by the zeta form.
  std::vector<double> x_epsilon;
  std::vector<double> x_zeta;
  std::string diagnostic;  // non-empty when an intermediate is not real
};

/// Throws std::invalid_argument for an invalid configuration.
CantileverResult cantilever_solve(const CantileverConfig& cfg);

/// Length of the deformed base curve as a polyline on n + 1 equal steps.
double cantilever_arclength(const CantileverConfig& cfg, int n);

/// 0, 0.01, ..., 1.
std::vector<double> default_s_grid();

}  // namespace elfun
