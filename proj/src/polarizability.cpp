#include "aligngain/polarizability.hpp"

#include <cmath>
#include <string>

#include "aligngain/constants.hpp"
#include "aligngain/errors.hpp"

namespace aligngain {

namespace {

void validate_entry(const TransitionEntry& e, std::size_t index) {
  if (!(e.omega_lj > 0.0) || !std::isfinite(e.omega_lj))
    throw DomainError("polarizability: transition " + std::to_string(index) +
                      " must have omega_lj > 0");
  const bool has_d = e.dipoles_debye.has_value();
  const bool has_f = e.oscillator_strengths.has_value();
  if (has_d == has_f)
    throw DomainError("polarizability: transition " + std::to_string(index) +
                      " must supply exactly one of dipoles or oscillator "
                      "strengths");
}

void check_resonance(const TransitionEntry& e, std::size_t index, double omega0,
                     double guard) {
  if (std::abs(omega0 - e.omega_lj) / e.omega_lj <= guard)
    throw DomainError("polarizability: omega0 within the resonance guard of "
                      "transition " +
                      std::to_string(index) + " (omega_lj = " +
                      std::to_string(e.omega_lj) + " rad/s)");
}

} // namespace

TransitionEntry TransitionEntry::from_dipoles(double omega_lj, double d_par,
                                              double d_perp) {
  TransitionEntry e;
  e.omega_lj = omega_lj;
  e.dipoles_debye = {d_par, d_perp};
  return e;
}

TransitionEntry TransitionEntry::from_strengths(double omega_lj, double f_par,
                                                double f_perp) {
  TransitionEntry e;
  e.omega_lj = omega_lj;
  e.oscillator_strengths = {f_par, f_perp};
  return e;
}

double polarizability_component(std::span<const TransitionEntry> entries,
                                double omega0, PolarizabilityAxis axis,
                                double resonance_guard) {
  if (entries.empty())
    throw DomainError("polarizability: transition list is empty");
  if (!(omega0 >= 0.0) || !std::isfinite(omega0))
    throw DomainError("polarizability: omega0 must be finite and >= 0");

  double alpha = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const TransitionEntry& e = entries[i];
    validate_entry(e, i);
    check_resonance(e, i, omega0, resonance_guard);
    const double detuning = e.omega_lj * e.omega_lj - omega0 * omega0;
    if (e.dipoles_debye) {
      const double d_debye = axis == PolarizabilityAxis::parallel
                                 ? e.dipoles_debye->first
                                 : e.dipoles_debye->second;
      const double d_cgs = d_debye * constants::debye_statC_cm;
      alpha += 2.0 / constants::hbar_erg_s * e.omega_lj * d_cgs * d_cgs /
               detuning;
    } else {
      const double f = axis == PolarizabilityAxis::parallel
                           ? e.oscillator_strengths->first
                           : e.oscillator_strengths->second;
      alpha += constants::electron_charge_statC *
               constants::electron_charge_statC /
               constants::electron_mass_g * f / detuning;
    }
  }
  return alpha;
}

Anisotropy anisotropy(std::span<const TransitionEntry> entries, double omega0,
                      double resonance_guard) {
  Anisotropy a;
  a.alpha_par = polarizability_component(entries, omega0,
                                         PolarizabilityAxis::parallel,
                                         resonance_guard);
  a.alpha_perp = polarizability_component(entries, omega0,
                                          PolarizabilityAxis::perpendicular,
                                          resonance_guard);
  a.dalpha = a.alpha_par - a.alpha_perp;
  return a;
}

double sum_over_states_reduced(
    std::span<const std::pair<double, double>> omega_d, double omega0) {
  if (omega_d.empty())
    throw DomainError("sum_over_states_reduced: transition list is empty");
  double alpha = 0.0;
  for (const auto& [omega, d] : omega_d)
    alpha += 2.0 * omega * d * d / (omega * omega - omega0 * omega0);
  return alpha;
}

} // namespace aligngain
