#pragma once

// Orientation-averaging special functions for molecules aligned by an
// external field: the Langevin function and its relatives for a permanent
// dipole in a dc field, and the second-moment (generalized Langevin)
// function for an induced dipole in an ac field, plus the Dawson integral
// which the latter's closed form is built on.
//
// All functions are pure, deterministic and thread-safe. Accuracy target is
// 1e-12 relative unless stated otherwise.

namespace aligngain {

/// Mean orientation of the molecular axis relative to the control field,
/// <cos theta0> and <cos^2 theta0>, under one Boltzmann weight.
struct OrientationMoment {
  double mean_cos = 0.0;  // in (-1, 1)
  double mean_cos2 = 0.0; // in (0, 1), >= mean_cos^2
};

/// Langevin function L(p) = coth(p) - 1/p. Odd; |L| < 1.
/// Evaluated by the Taylor series p/3 - p^3/45 + 2p^5/945 for |p| < 1e-2,
/// where the direct form loses digits to cancellation.
double langevin(double p);

/// L(p)/p with the removable singularity at p = 0 filled by its series
/// limit 1/3 - p^2/45 + 2p^4/945. Strictly decreasing; range (0, 1/3].
/// Requires p >= 0.
double langevin_over_p(double p);

/// <cos^2 theta0> of a permanent dipole in a dc field: 1 - 2 L(p)/p.
/// Increases monotonically from 1/3 at p = 0 toward 1. Requires p >= 0.
double mean_cos2_dc(double p);

/// Dawson integral D(x) = exp(-x^2) * integral_0^x exp(t^2) dt for x >= 0.
/// Series for x <= 0.5, a sampled-Gaussian (Rybicki) ladder on (0.5, 8),
/// and the asymptotic expansion in 1/(2x^2) for x >= 8.
double dawson(double x);

/// Second orientation moment under the induced-dipole weight exp(q cos^2):
///   L2(q) = integral_0^1 u^2 e^{q u^2} du / integral_0^1 e^{q u^2} du.
/// Monotone increasing, range (0, 1); L2(0) = 1/3. For q above the series
/// region the closed form 1/(2 sqrt(q) D(sqrt(q))) - 1/(2q) is used; for
/// negative q the defining ratio is integrated adaptively.
double gen_langevin(double q);

/// Both dc-field moments at once. Requires p >= 0.
OrientationMoment orientation_moments_dc(double p);

} // namespace aligngain
