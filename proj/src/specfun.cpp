#include "aligngain/specfun.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "aligngain/errors.hpp"
#include "aligngain/integrate.hpp"

namespace aligngain {

namespace {

// Below this the series is exact to ~1e-15 while coth(p) - 1/p starts losing
// digits (cancellation error ~ 3*eps/p^2 relative).
constexpr double kLangevinSeriesCutoff = 1e-2;

// gen_langevin series region; through q^3 the truncation error at the cutoff
// is ~3e-16, while the dawson closed form still holds ~3e-13 relative there.
constexpr double kGenLangevinSeriesCutoff = 1e-3;

constexpr double kDawsonSeriesCutoff = 0.5;
constexpr double kDawsonAsymptoticCutoff = 8.0;

void require_finite(double x, const char* who) {
  if (!std::isfinite(x))
    throw DomainError(std::string(who) + ": argument must be finite");
}

// Rybicki's sampled-Gaussian evaluation of the Dawson integral,
//   D(x) = lim_{h->0} (1/sqrt(pi)) sum_{n odd} exp(-(x - n h)^2) / n,
// with the sampling error O(exp(-(pi/2h)^2)): ~7e-18 for h = 1/4. Thirteen
// ladder rungs put the truncated Gaussian tail below 2e-20.
double dawson_rybicki(double x) {
  constexpr double h = 0.25;
  constexpr int terms = 13;
  static const std::array<double, terms> gauss = [] {
    std::array<double, terms> g{};
    for (int i = 0; i < terms; ++i) {
      const double kh = (2 * i + 1) * h;
      g[static_cast<std::size_t>(i)] = std::exp(-kh * kh);
    }
    return g;
  }();

  const double n0 = 2.0 * std::floor(0.5 * x / h + 0.5);
  const double xp = x - n0 * h;
  double e1 = std::exp(2.0 * xp * h);
  const double e2 = e1 * e1;
  double d_up = n0 + 1.0;
  double d_dn = n0 - 1.0;
  double sum = 0.0;
  for (int i = 0; i < terms; ++i) {
    sum += gauss[static_cast<std::size_t>(i)] * (e1 / d_up + 1.0 / (d_dn * e1));
    d_up += 2.0;
    d_dn -= 2.0;
    e1 *= e2;
  }
  constexpr double inv_sqrt_pi = 0.564189583547756286948;
  return inv_sqrt_pi * std::exp(-xp * xp) * sum;
}

// L2(q) for q < 0 by adaptive quadrature of the defining ratio on u in [0,1].
// The weight peaks at u = 0 with width ~1/sqrt(|q|); seed panels there so the
// first Kronrod sweep already sees the mass.
double gen_langevin_ratio_quad(double q) {
  const double width = 1.0 / std::sqrt(-q);
  std::vector<double> seeds;
  for (double w = 0.25 * width; w < 1.0; w *= 4.0) seeds.push_back(w);

  auto integrand = [q](double u) {
    const double w = std::exp(q * u * u);
    return std::array<double, 2>{u * u * w, w};
  };

  // Scale of the denominator: min(1, sqrt(pi)/(2 sqrt(|q|))) up to O(1).
  const double den_scale = std::min(1.0, 0.8862269254527580 * width);
  const double tol = 2.5e-13 * den_scale;
  const auto r = quad::integrate_n<2>(integrand, 0.0, 1.0, {tol, tol}, seeds);
  if (!r.converged)
    throw NumericalError("gen_langevin: ratio quadrature did not converge",
                         r.value[0] / r.value[1],
                         (r.est_error[0] + r.est_error[1]) / r.value[1]);
  return r.value[0] / r.value[1];
}

} // namespace

double langevin(double p) {
  require_finite(p, "langevin");
  const double a = std::abs(p);
  double value;
  if (a < kLangevinSeriesCutoff) {
    const double a2 = a * a;
    value = a * (1.0 / 3.0 + a2 * (-1.0 / 45.0 + a2 * (2.0 / 945.0)));
  } else {
    value = 1.0 / std::tanh(a) - 1.0 / a;
  }
  return p < 0 ? -value : value; // odd by construction
}

double langevin_over_p(double p) {
  require_finite(p, "langevin_over_p");
  if (p < 0.0) throw DomainError("langevin_over_p: requires p >= 0");
  if (p < kLangevinSeriesCutoff) {
    const double p2 = p * p;
    return 1.0 / 3.0 + p2 * (-1.0 / 45.0 + p2 * (2.0 / 945.0));
  }
  return (1.0 / std::tanh(p) - 1.0 / p) / p;
}

double mean_cos2_dc(double p) {
  if (!std::isfinite(p)) throw DomainError("mean_cos2_dc: argument must be finite");
  if (p < 0.0) throw DomainError("mean_cos2_dc: requires p >= 0");
  return 1.0 - 2.0 * langevin_over_p(p);
}

double dawson(double x) {
  require_finite(x, "dawson");
  if (x < 0.0) throw DomainError("dawson: requires x >= 0");

  if (x <= kDawsonSeriesCutoff) {
    // Maclaurin series: sum_n (-2)^n x^(2n+1) / (2n+1)!!
    const double m2x2 = -2.0 * x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 40; ++n) {
      term *= m2x2 / (2 * n + 1);
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
  }

  if (x >= kDawsonAsymptoticCutoff) {
    // 1/(2x) * sum_n (2n-1)!!/(2x^2)^n, summed to its smallest term.
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 200; ++n) {
      const double next = term * (2 * n - 1) * inv2x2;
      if (next >= term) break;
      term = next;
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return sum / (2.0 * x);
  }

  return dawson_rybicki(x);
}

double gen_langevin(double q) {
  require_finite(q, "gen_langevin");
  if (std::abs(q) <= kGenLangevinSeriesCutoff) {
    return 1.0 / 3.0 +
           q * (4.0 / 45.0 + q * (8.0 / 945.0 + q * (-16.0 / 14175.0)));
  }
  if (q > 0.0) {
    const double s = std::sqrt(q);
    return 1.0 / (2.0 * s * dawson(s)) - 1.0 / (2.0 * q);
  }
  return gen_langevin_ratio_quad(q);
}

OrientationMoment orientation_moments_dc(double p) {
  return OrientationMoment{langevin(p), mean_cos2_dc(p)};
}

} // namespace aligngain
