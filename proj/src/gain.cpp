#include "aligngain/gain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "aligngain/constants.hpp"
#include "aligngain/errors.hpp"
#include "aligngain/specfun.hpp"

namespace aligngain {

namespace {

void require_eta(double eta_n) {
  if (!std::isfinite(eta_n) || eta_n < 0.0)
    throw DomainError("gain: eta_n must be finite and >= 0");
}

void require_dc_only(const AlignmentParams& ap, const char* who) {
  if (ap.q_g != 0.0 || ap.q_m != 0.0)
    throw DomainError(std::string(who) +
                      ": closed form requires q_g = q_m = 0; "
                      "use gain_general for mixed alignment weights");
  if (!(ap.p_g >= 0.0) || !(ap.p_m >= 0.0) || !std::isfinite(ap.p_g) ||
      !std::isfinite(ap.p_m))
    throw DomainError(std::string(who) + ": requires finite p_g, p_m >= 0");
}

void require_ac_only(const AlignmentParams& ap, const char* who) {
  if (ap.p_g != 0.0 || ap.p_m != 0.0)
    throw DomainError(std::string(who) +
                      ": closed form requires p_g = p_m = 0; "
                      "use gain_general for mixed alignment weights");
  if (!std::isfinite(ap.q_g) || !std::isfinite(ap.q_m))
    throw DomainError(std::string(who) + ": requires finite q_g, q_m");
}

GainResult pack(double value, double eta_n, const char* branch) {
  // Each orientation average lies in [0,1], so the scaled gain cannot leave
  // [-1, max(1, eta_n)] for legal inputs.
  if (std::abs(value) > std::max(1.0, eta_n) + 1e-9)
    throw std::logic_error("gain: result outside its physical bound");
  GainResult r;
  r.scaled_gain = value;
  r.branch = branch;
  return r;
}

} // namespace

Geometry Geometry::orthogonal() { return Geometry{constants::pi / 2.0}; }

Geometry Geometry::from_radians(double psi) {
  if (!(psi >= 0.0 && psi <= constants::pi / 2.0 + 1e-12))
    throw DomainError("Geometry: psi must lie in [0, pi/2]");
  return Geometry{std::min(psi, constants::pi / 2.0)};
}

AlignmentParams alignment_params(const MolecularSpecies& species,
                                 const ControlField& field) {
  if (!(field.temperature_T > 0.0) || !std::isfinite(field.temperature_T))
    throw DomainError("alignment_params: temperature must be > 0");
  if (!(field.amplitude_E0 >= 0.0) || !std::isfinite(field.amplitude_E0))
    throw DomainError("alignment_params: field amplitude must be >= 0");
  if (species.mu_g < 0.0 || species.mu_m < 0.0)
    throw DomainError("alignment_params: dipole magnitudes must be >= 0");

  const double kT = constants::boltzmann_J_per_K * field.temperature_T;
  const double e0 = field.amplitude_E0;
  AlignmentParams ap;
  ap.p_g = species.mu_g * constants::debye_Cm * e0 / kT;
  ap.p_m = species.mu_m * constants::debye_Cm * e0 / kT;
  ap.q_g = species.dalpha_g * constants::polarizability_cm3_to_SI * e0 * e0 /
           (2.0 * kT);
  ap.q_m = species.dalpha_m * constants::polarizability_cm3_to_SI * e0 * e0 /
           (2.0 * kT);
  return ap;
}

double field_for_p(double mu_debye, double temperature_K, double p) {
  if (!(mu_debye > 0.0) || !(temperature_K > 0.0))
    throw DomainError("field_for_p: requires mu > 0 and T > 0");
  return p * constants::boltzmann_J_per_K * temperature_K /
         (mu_debye * constants::debye_Cm);
}

double field_for_q(double dalpha_cm3, double temperature_K, double q) {
  if (dalpha_cm3 == 0.0 || !(temperature_K > 0.0))
    throw DomainError("field_for_q: requires dalpha != 0 and T > 0");
  const double ratio = 2.0 * constants::boltzmann_J_per_K * temperature_K * q /
                       (dalpha_cm3 * constants::polarizability_cm3_to_SI);
  if (ratio < 0.0)
    throw DomainError("field_for_q: q and dalpha must have the same sign");
  return std::sqrt(ratio);
}

GainResult gain_dc_orthogonal(const AlignmentParams& ap, double eta_n) {
  require_eta(eta_n);
  require_dc_only(ap, "gain_dc_orthogonal");
  const double v =
      eta_n * langevin_over_p(ap.p_m) - langevin_over_p(ap.p_g);
  return pack(v, eta_n, "dc-orthogonal");
}

GainResult gain_dc_parallel(const AlignmentParams& ap, double eta_n) {
  require_eta(eta_n);
  require_dc_only(ap, "gain_dc_parallel");
  const double v = eta_n * mean_cos2_dc(ap.p_m) - mean_cos2_dc(ap.p_g);
  return pack(v, eta_n, "dc-parallel");
}

GainResult gain_ac_orthogonal(const AlignmentParams& ap, double eta_n) {
  require_eta(eta_n);
  require_ac_only(ap, "gain_ac_orthogonal");
  const double v = 0.5 * (eta_n * (1.0 - gen_langevin(ap.q_m)) -
                          (1.0 - gen_langevin(ap.q_g)));
  return pack(v, eta_n, "ac-orthogonal");
}

double gain_ac_orthogonal_unhalved(const AlignmentParams& ap, double eta_n) {
  require_eta(eta_n);
  require_ac_only(ap, "gain_ac_orthogonal_unhalved");
  return eta_n * (1.0 - gen_langevin(ap.q_m)) - (1.0 - gen_langevin(ap.q_g));
}

GainResult gain_ac_parallel(const AlignmentParams& ap, double eta_n) {
  require_eta(eta_n);
  require_ac_only(ap, "gain_ac_parallel");
  const double v = eta_n * gen_langevin(ap.q_m) - gen_langevin(ap.q_g);
  return pack(v, eta_n, "ac-parallel");
}

GainResult gain_general(const AlignmentParams& ap, double eta_n,
                        const Geometry& geometry, double tolerance) {
  require_eta(eta_n);
  OracleRequest req;
  req.p_g = ap.p_g;
  req.q_g = ap.q_g;
  req.p_m = ap.p_m;
  req.q_m = ap.q_m;
  req.eta_n = eta_n;
  req.psi = geometry.psi;
  const OracleResult r = oracle_gain(req, tolerance);
  return pack(r.value, eta_n, "oracle");
}

GainResult with_absolute_gain(GainResult result, double sigma0_cm2,
                              double n_g_per_cm3) {
  if (!(sigma0_cm2 > 0.0) || !(n_g_per_cm3 > 0.0))
    throw DomainError("with_absolute_gain: requires sigma0 > 0 and n_g > 0");
  result.absolute_gain = result.scaled_gain * sigma0_cm2 * n_g_per_cm3;
  return result;
}

} // namespace aligngain
