#pragma once

// Parameter-space tooling over the gain closed forms: transparency-threshold
// search, 1D gain maximization, and 1D/2D sweeps, including the built-in
// figure presets used for dataset reproduction.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aligngain/gain.hpp"

namespace aligngain {

enum class GainForm { dc_orthogonal, dc_parallel, ac_orthogonal, ac_parallel };

GainForm gain_form_from_name(std::string_view name); // "dc-orth", "dc-par", ...
std::string to_string(GainForm form);

/// One gain closed form plus the parameter set it is evaluated on.
/// Upper-level parameters may be tied to the lower-level ones through
/// ratios: eta_mu (p_m = eta_mu * p_g), inv_eta_mu (p_m = p_g / inv_eta_mu),
/// eta_q (q_m = eta_q * q_g), or set directly via p_m / q_m. Legal parameter
/// names for set(): p_g, p_m, eta_mu, inv_eta_mu, eta_n, q_g, q_m, eta_q.
struct GainModel {
  GainForm form = GainForm::dc_orthogonal;
  double eta_n = 0.0;
  double p_g = 0.0;
  double q_g = 0.0;
  std::optional<double> eta_mu;
  std::optional<double> inv_eta_mu;
  std::optional<double> p_m;
  std::optional<double> eta_q;
  std::optional<double> q_m;

  void set(std::string_view name, double value); // ConfigError on unknown name
  GainModel with(std::string_view name, double value) const;
  AlignmentParams resolve() const;
  double evaluate() const; // scaled gain at the current parameters
};

struct ThresholdResult {
  double crossing = 0.0;   // parameter value where the gain crosses zero
  double bracket_lo = 0.0; // final bracket, endpoints of opposite sign
  double bracket_hi = 0.0;
  double residual = 0.0;   // |gain| at the crossing
  int iterations = 0;
};

/// All sign changes of the model gain as `sweep_var` scans [lo, hi]:
/// a uniform pre-grid locates brackets, bisection polishes each one to
/// |gain| <= residual_tol. No sign change means an empty list.
std::vector<ThresholdResult> find_threshold(
    const GainModel& model, std::string_view sweep_var, double lo, double hi,
    int pregrid_points = 256, double residual_tol = 1e-10);

struct MaxResult {
  double argmax = 0.0;
  double max_value = 0.0;
};

/// Largest model gain on [lo, hi]: best pre-grid point refined by
/// golden-section search to a location error below 1e-6 of the range width.
MaxResult find_max_gain(const GainModel& model, std::string_view sweep_var,
                        double lo, double hi, int pregrid_points = 256);

enum class AxisSpacing { linear, log };

struct SweepAxis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  AxisSpacing spacing = AxisSpacing::linear;

  double at(int i) const;
  void validate() const;
};

/// Axis definitions plus the evaluated gain matrix, row-major with axis1 as
/// the slow index.
struct SweepGrid {
  SweepAxis axis1;
  std::optional<SweepAxis> axis2;
  GainModel model; // fixed parameters; axis values override per point
  std::vector<double> values;

  std::size_t rows() const { return static_cast<std::size_t>(axis1.count); }
  std::size_t cols() const {
    return axis2 ? static_cast<std::size_t>(axis2->count) : 1;
  }
  double value_at(int i1, int i2 = 0) const;
};

/// Evaluate the model over the grid. Points are independent; evaluation may
/// be spread over threads (capped by the ALIGN_GAIN_THREADS environment
/// variable, 0 or unset meaning auto) and the result is bit-identical for
/// any schedule.
SweepGrid run_sweep(const SweepAxis& axis1,
                    const std::optional<SweepAxis>& axis2,
                    const GainModel& model);

/// Built-in dataset presets fig1..fig6 with all fixed parameters and axis
/// ranges baked in; ConfigError for unknown names.
struct FigurePreset {
  std::string name;
  std::string description;
  GainModel model;
  SweepAxis axis1;
  std::optional<SweepAxis> axis2;

  bool is_1d() const { return !axis2.has_value(); }
};

FigurePreset figure_preset(std::string_view name);
const std::vector<std::string>& figure_preset_names();

/// Convenience: run the preset's sweep.
SweepGrid run_figure(const FigurePreset& preset);

} // namespace aligngain
