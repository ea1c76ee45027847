#pragma once

// Sum-over-states polarizability of an axially symmetric molecule from a
// list of transitions,
//   alpha = (2/hbar) sum_l omega_l |d_l|^2 / (omega_l^2 - omega0^2)
//         = (e^2/m)  sum_l f_l / (omega_l^2 - omega0^2),
// evaluated per principal axis. Dipoles are in Debye, frequencies in rad/s,
// the result is a Gaussian polarizability volume in cm^3. omega0 = 0 gives
// the static value. Entries may specify either transition dipoles or
// oscillator strengths; each entry is summed by its own form of the formula.

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace aligngain {

struct TransitionEntry {
  double omega_lj = 0.0; // transition angular frequency, rad/s, > 0
  // exactly one of the two pairs (parallel, perpendicular) must be set
  std::optional<std::pair<double, double>> dipoles_debye;
  std::optional<std::pair<double, double>> oscillator_strengths;

  static TransitionEntry from_dipoles(double omega_lj, double d_par_debye,
                                      double d_perp_debye);
  static TransitionEntry from_strengths(double omega_lj, double f_par,
                                        double f_perp);
};

enum class PolarizabilityAxis { parallel, perpendicular };

inline constexpr double kDefaultResonanceGuard = 1e-3;

/// One principal component of the polarizability tensor, in cm^3. Every
/// transition must be detuned from omega0 by more than the relative guard
/// (near resonance the undamped formula is meaningless). Empty lists are an
/// error.
double polarizability_component(std::span<const TransitionEntry> entries,
                                double omega0, PolarizabilityAxis axis,
                                double resonance_guard = kDefaultResonanceGuard);

struct Anisotropy {
  double alpha_par = 0.0;  // alpha33, cm^3
  double alpha_perp = 0.0; // alpha11, cm^3
  double dalpha = 0.0;     // alpha33 - alpha11, cm^3
};

/// Parallel-minus-perpendicular convenience wrapper.
Anisotropy anisotropy(std::span<const TransitionEntry> entries, double omega0,
                      double resonance_guard = kDefaultResonanceGuard);

/// Reduced-units kernel (hbar = 1, dipoles and frequencies dimensionless):
/// 2 * sum omega d^2 / (omega^2 - omega0^2). Exposed for direct checks of
/// the sum's structure without the unit chain.
double sum_over_states_reduced(std::span<const std::pair<double, double>> omega_d,
                               double omega0);

} // namespace aligngain
