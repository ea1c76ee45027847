#pragma once

// Scaled amplification index alpha/(sigma0 * n_g) of a weak linearly
// polarized probe through an ensemble of axially symmetric molecules whose
// orientation distribution differs between the two levels of the probed
// transition. Closed forms cover the pure permanent-dipole (dc) and pure
// induced-dipole (ac) alignment cases in parallel and orthogonal probe
// geometry; everything else goes through the quadrature oracle.

#include <optional>
#include <string>

#include "aligngain/oracle.hpp"

namespace aligngain {

struct MolecularSpecies {
  std::string name;
  double mu_g = 0.0;     // permanent dipole, lower level (Debye, >= 0)
  double mu_m = 0.0;     // permanent dipole, upper level (Debye, >= 0)
  double dalpha_g = 0.0; // polarizability anisotropy alpha33 - alpha11, lower level (cm^3)
  double dalpha_m = 0.0; // same, upper level (cm^3); either sign
};

enum class FieldKind { dc, ac };

struct ControlField {
  FieldKind kind = FieldKind::dc;
  double amplitude_E0 = 0.0;  // V/m, >= 0 (for ac: the field amplitude in |E0|^2)
  double temperature_T = 0.0; // K, > 0

  static ControlField dc(double amplitude_V_per_m, double temperature_K) {
    return {FieldKind::dc, amplitude_V_per_m, temperature_K};
  }
  static ControlField ac(double amplitude_V_per_m, double temperature_K) {
    return {FieldKind::ac, amplitude_V_per_m, temperature_K};
  }
};

/// Dimensionless alignment parameters: p_j = mu_j E0 / kT for the permanent
/// dipole, q_j = dalpha_j |E0|^2 / (2 kT) for the induced dipole.
struct AlignmentParams {
  double p_g = 0.0;
  double p_m = 0.0;
  double q_g = 0.0;
  double q_m = 0.0;
};

struct Populations {
  double n_g = 0.0; // lower-level number density, > 0
  double n_m = 0.0; // upper-level number density, >= 0
  double eta_n() const { return n_m / n_g; }
};

/// Probe-control geometry; psi is the angle between the probe polarization
/// and the control field, restricted to [0, pi/2].
struct Geometry {
  double psi = 0.0;

  static Geometry parallel() { return Geometry{0.0}; }
  static Geometry orthogonal();
  static Geometry from_radians(double psi);
};

struct GainResult {
  double scaled_gain = 0.0;                 // alpha/(sigma0 n_g)
  std::optional<double> absolute_gain;      // alpha in 1/cm, when sigma0 and n_g known
  std::string branch;                       // code path that produced the value
};

/// Alignment parameters from species and field data. The q_j are computed
/// for both field kinds (a dc field induces dipoles too); pass zero
/// anisotropies to isolate the permanent-dipole case.
AlignmentParams alignment_params(const MolecularSpecies& species,
                                 const ControlField& field);

/// Analytic inverses of the parameter map, for round trips and for sizing a
/// field to a target parameter.
double field_for_p(double mu_debye, double temperature_K, double p);
double field_for_q(double dalpha_cm3, double temperature_K, double q);

/// dc alignment, probe orthogonal to the control field:
///   eta_n L(p_m)/p_m - L(p_g)/p_g.
/// Requires q_g = q_m = 0 (use gain_general for mixed weights).
GainResult gain_dc_orthogonal(const AlignmentParams& params, double eta_n);

/// dc alignment, probe parallel to the control field:
///   eta_n [1 - 2 L(p_m)/p_m] - [1 - 2 L(p_g)/p_g].
GainResult gain_dc_parallel(const AlignmentParams& params, double eta_n);

/// ac alignment, probe orthogonal to the control field:
///   (1/2) { eta_n [1 - L2(q_m)] - [1 - L2(q_g)] }.
/// The factor 1/2 is the azimuthal average of cos^2(phi); it makes the
/// zero-alignment limit agree with every other geometry, and the quadrature
/// oracle confirms it. Requires p_g = p_m = 0.
GainResult gain_ac_orthogonal(const AlignmentParams& params, double eta_n);

/// Same expression without the azimuthal 1/2, kept only so the discrepancy
/// against the oracle can be demonstrated (see the oracle CLI subcommand).
double gain_ac_orthogonal_unhalved(const AlignmentParams& params, double eta_n);

/// ac alignment, probe parallel to the control field:
///   eta_n L2(q_m) - L2(q_g).
GainResult gain_ac_parallel(const AlignmentParams& params, double eta_n);

/// Arbitrary geometry and mixed permanent+induced weights, evaluated by the
/// quadrature oracle. Exact for a dc field acting on a polarizable dipolar
/// molecule, where both p and q are nonzero.
GainResult gain_general(const AlignmentParams& params, double eta_n,
                        const Geometry& geometry,
                        double tolerance = kOracleDefaultTolerance);

/// Attach the absolute index alpha = scaled_gain * sigma0 * n_g (1/cm).
GainResult with_absolute_gain(GainResult result, double sigma0_cm2,
                              double n_g_per_cm3);

} // namespace aligngain
