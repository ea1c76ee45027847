#pragma once

// Direct numerical evaluation of the orientation average that every gain
// closed form must reproduce. The molecular axis is distributed with weight
// proportional to exp(p cos(theta0) + q cos^2(theta0)) relative to the
// control field; the probe polarization sits at angle psi to the control
// field, so the axis-to-probe projection obeys
//   cos(theta) = cos(psi) cos(theta0) + sin(psi) sin(theta0) cos(phi).
// The phi average is carried out analytically (the cross term vanishes),
// leaving one adaptive integral over u = cos(theta0).

#include <cstddef>

namespace aligngain {

struct OracleRequest {
  double p_g = 0.0;
  double q_g = 0.0;
  double p_m = 0.0;
  double q_m = 0.0;
  double eta_n = 0.0; // upper/lower population ratio
  double psi = 0.0;   // probe-control angle, radians, in [0, pi/2]
};

struct OracleResult {
  double value = 0.0;
  double est_error = 0.0;
  long evaluations = 0;
};

inline constexpr double kOracleDefaultTolerance = 1e-10;
inline constexpr double kOracleMinTolerance = 1e-12;
inline constexpr double kOracleMaxTolerance = 1e-4;

/// Normalized <cos^2 theta> of the axis-to-probe angle for one level.
/// Tolerance is an absolute bound on the returned moment and must lie in
/// [1e-12, 1e-4]. Throws NumericalError if the quadrature cannot deliver it.
OracleResult projection_moment(double p, double q, double psi,
                               double tolerance = kOracleDefaultTolerance);

/// Scaled gain from the defining integral:
///   eta_n * <cos^2 theta>_upper - <cos^2 theta>_lower,
/// with the per-level error estimates combined additively.
OracleResult oracle_gain(const OracleRequest& request,
                         double tolerance = kOracleDefaultTolerance);

/// Validation path that keeps the explicit phi average (spectrally exact
/// trapezoid in phi on top of the same adaptive u integral) instead of the
/// reduced integrand. Slower; used to cross-check the reduction itself.
OracleResult projection_moment_full2d(double p, double q, double psi,
                                      double tolerance = kOracleDefaultTolerance);

} // namespace aligngain
