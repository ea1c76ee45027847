#include "aligngain/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "aligngain/constants.hpp"
#include "aligngain/errors.hpp"
#include "aligngain/integrate.hpp"

namespace aligngain {

namespace {

// Shape of the Boltzmann exponent h(u) = p u + q u^2 on u in [-1, 1]:
// its maximum (factored out of the weight so huge parameters cannot
// overflow) and seed breakpoints that resolve every boundary layer.
struct WeightShape {
  double h_max = 0.0;
  std::vector<double> seeds;
};

WeightShape analyze_weight(double p, double q) {
  auto h = [&](double u) { return p * u + q * u * u; };

  std::vector<double> extrema = {-1.0, 1.0};
  if (q != 0.0) {
    const double u_star = -p / (2.0 * q);
    if (u_star > -1.0 && u_star < 1.0) extrema.push_back(u_star);
  }

  WeightShape shape;
  shape.h_max = h(extrema[0]);
  for (double u : extrema) shape.h_max = std::max(shape.h_max, h(u));

  // Ladder of panel edges around each local maximum of h. The weight drops
  // by e^-35 within d35 of the peak, so panels at d35/16, d35/4, d35, 4*d35
  // guarantee the first Kronrod sweep samples the mass region.
  for (double m : extrema) {
    if (h(m) < shape.h_max) continue;
    double d35 = 2.0;
    const double slope = std::abs(p + 2.0 * q * m);
    if (slope > 0.0) d35 = std::min(d35, 35.0 / slope);
    if (q != 0.0) d35 = std::min(d35, std::sqrt(35.0 / std::abs(q)));
    for (double d = d35 / 16.0; d <= 4.0 * d35; d *= 4.0) {
      shape.seeds.push_back(m - d);
      shape.seeds.push_back(m + d);
    }
  }
  if (q != 0.0) {
    const double u_star = -p / (2.0 * q);
    if (u_star > -1.0 && u_star < 1.0) shape.seeds.push_back(u_star);
  }
  return shape;
}

void validate_inputs(double p, double q, double psi, double tolerance) {
  if (!std::isfinite(p) || !std::isfinite(q))
    throw DomainError("projection_moment: alignment parameters must be finite");
  if (!(psi >= 0.0 && psi <= constants::pi / 2.0 + 1e-12))
    throw DomainError("projection_moment: psi must lie in [0, pi/2]");
  if (!(tolerance >= kOracleMinTolerance && tolerance <= kOracleMaxTolerance))
    throw DomainError("projection_moment: tolerance must lie in [1e-12, 1e-4]");
}

// <cos^2 theta0> for weight exp(p u + q u^2), with error estimate relative
// to the moment (not the raw integrals) and a normalization cross-check:
// the weight integral is computed twice, once alone and once alongside the
// numerator on panels refined for the numerator, and the two must agree.
struct Theta0Moment {
  double value = 0.0;
  double est_error = 0.0;
  long evaluations = 0;
};

Theta0Moment theta0_cos2_moment(double p, double q, double tolerance) {
  const WeightShape shape = analyze_weight(p, q);
  auto weight = [&](double u) { return std::exp(p * u + q * u * u - shape.h_max); };

  // Crude scale pass: accept every seed panel unrefined.
  const auto crude = quad::integrate_n<1>(
      [&](double u) { return std::array<double, 1>{weight(u)}; }, -1.0, 1.0,
      {std::numeric_limits<double>::max()}, shape.seeds);
  const double den_scale = std::max(crude.value[0], 1e-300);

  const double tol_part = 0.25 * tolerance * den_scale;

  const auto den = quad::integrate_n<1>(
      [&](double u) { return std::array<double, 1>{weight(u)}; }, -1.0, 1.0,
      {tol_part}, shape.seeds);

  const auto num = quad::integrate_n<2>(
      [&](double u) {
        const double w = weight(u);
        return std::array<double, 2>{u * u * w, w};
      },
      -1.0, 1.0, {tol_part, tol_part}, shape.seeds);

  Theta0Moment m;
  m.evaluations = crude.evaluations + den.evaluations + num.evaluations;
  m.value = num.value[0] / den.value[0];
  m.est_error =
      (num.est_error[0] + std::abs(m.value) * den.est_error[0]) / den.value[0];

  if (!den.converged || !num.converged || m.est_error > tolerance)
    throw NumericalError("projection_moment: quadrature did not converge",
                         m.value, m.est_error);

  const double norm_dev = std::abs(num.value[1] / den.value[0] - 1.0);
  if (norm_dev > std::max(1e-10, tolerance))
    throw NumericalError(
        "projection_moment: normalization cross-check failed", m.value,
        norm_dev);
  return m;
}

double project(double moment_theta0, double psi) {
  const double c = std::cos(psi);
  const double s = std::sin(psi);
  return c * c * moment_theta0 + 0.5 * s * s * (1.0 - moment_theta0);
}

} // namespace

OracleResult projection_moment(double p, double q, double psi, double tolerance) {
  validate_inputs(p, q, psi, tolerance);
  const Theta0Moment m = theta0_cos2_moment(p, q, tolerance);
  OracleResult out;
  out.value = project(m.value, psi);
  // |d project / d moment| = |cos^2 psi - sin^2 psi / 2| <= 1
  const double c = std::cos(psi);
  const double s = std::sin(psi);
  out.est_error = std::abs(c * c - 0.5 * s * s) * m.est_error;
  out.evaluations = m.evaluations;
  return out;
}

OracleResult oracle_gain(const OracleRequest& request, double tolerance) {
  if (!std::isfinite(request.eta_n) || request.eta_n < 0.0)
    throw DomainError("oracle_gain: eta_n must be finite and >= 0");
  const double tol_upper =
      0.5 * tolerance / std::max(1.0, request.eta_n);
  const double tol_lower = 0.5 * tolerance;

  const OracleResult upper = projection_moment(
      request.p_m, request.q_m, request.psi,
      std::clamp(tol_upper, kOracleMinTolerance, kOracleMaxTolerance));
  const OracleResult lower = projection_moment(
      request.p_g, request.q_g, request.psi,
      std::clamp(tol_lower, kOracleMinTolerance, kOracleMaxTolerance));

  OracleResult out;
  out.value = request.eta_n * upper.value - lower.value;
  out.est_error = request.eta_n * upper.est_error + lower.est_error;
  out.evaluations = upper.evaluations + lower.evaluations;
  return out;
}

OracleResult projection_moment_full2d(double p, double q, double psi,
                                      double tolerance) {
  validate_inputs(p, q, psi, tolerance);
  const WeightShape shape = analyze_weight(p, q);
  auto weight = [&](double u) { return std::exp(p * u + q * u * u - shape.h_max); };

  // Equispaced trapezoid in phi is spectrally exact here (the integrand is a
  // trigonometric polynomial of degree 2 in phi); 16 nodes leave only
  // rounding error.
  constexpr int n_phi = 16;
  const double cpsi = std::cos(psi);
  const double spsi = std::sin(psi);
  auto cos2_phi_avg = [&](double u) {
    const double sin_theta0 = std::sqrt(std::max(0.0, 1.0 - u * u));
    double acc = 0.0;
    for (int k = 0; k < n_phi; ++k) {
      const double phi = 2.0 * constants::pi * k / n_phi;
      const double ct = cpsi * u + spsi * sin_theta0 * std::cos(phi);
      acc += ct * ct;
    }
    return acc / n_phi;
  };

  const auto crude = quad::integrate_n<1>(
      [&](double u) { return std::array<double, 1>{weight(u)}; }, -1.0, 1.0,
      {std::numeric_limits<double>::max()}, shape.seeds);
  const double tol_part = 0.25 * tolerance * std::max(crude.value[0], 1e-300);

  const auto both = quad::integrate_n<2>(
      [&](double u) {
        const double w = weight(u);
        return std::array<double, 2>{cos2_phi_avg(u) * w, w};
      },
      -1.0, 1.0, {tol_part, tol_part}, shape.seeds);

  OracleResult out;
  out.value = both.value[0] / both.value[1];
  out.est_error = (both.est_error[0] + std::abs(out.value) * both.est_error[1]) /
                  both.value[1];
  out.evaluations = crude.evaluations + both.evaluations;
  if (!both.converged || out.est_error > tolerance)
    throw NumericalError("projection_moment_full2d: quadrature did not converge",
                         out.value, out.est_error);
  return out;
}

} // namespace aligngain
