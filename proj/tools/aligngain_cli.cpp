// aligngain: scaled gain of a polarized probe through field-aligned
// anisotropic molecules -- closed forms, the defining-integral oracle,
// threshold/maximum searches, and dataset generation.
//
// Exit codes: 0 success, 2 domain/computation error, 64 usage error,
// 74 I/O error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aligngain/analysis.hpp"
#include "aligngain/constants.hpp"
#include "aligngain/csv.hpp"
#include "aligngain/errors.hpp"
#include "aligngain/gain.hpp"
#include "aligngain/oracle.hpp"
#include "aligngain/polarizability.hpp"
#include "aligngain/species.hpp"
#include "aligngain/svg.hpp"
#include "aligngain/version.hpp"

namespace {

using namespace aligngain;

// flag conflicts and other command-line misuse (exit 64)
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kDegToRad = constants::pi / 180.0;

struct ParamFlags {
  double pg = 0.0, pm = 0.0, qg = 0.0, qm = 0.0;
  CLI::Option* pg_opt = nullptr;
  CLI::Option* pm_opt = nullptr;
  CLI::Option* qg_opt = nullptr;
  CLI::Option* qm_opt = nullptr;

  void add_to(CLI::App* cmd) {
    pg_opt = cmd->add_option("--pg", pg, "Permanent-dipole alignment parameter p_g");
    pm_opt = cmd->add_option("--pm", pm, "Permanent-dipole alignment parameter p_m");
    qg_opt = cmd->add_option("--qg", qg, "Induced-dipole alignment parameter q_g");
    qm_opt = cmd->add_option("--qm", qm, "Induced-dipole alignment parameter q_m");
  }
  bool any_given() const {
    return pg_opt->count() || pm_opt->count() || qg_opt->count() || qm_opt->count();
  }
  AlignmentParams params() const { return AlignmentParams{pg, pm, qg, qm}; }
};

struct SpeciesFlags {
  std::string path;
  double e0_kv_mm = 0.0;
  double t_kelvin = 0.0;
  CLI::Option* path_opt = nullptr;
  CLI::Option* e0_opt = nullptr;
  CLI::Option* t_opt = nullptr;

  void add_to(CLI::App* cmd) {
    path_opt = cmd->add_option("--species", path, "Species config file");
    e0_opt = cmd->add_option("--E0-kv-mm", e0_kv_mm,
                             "Control field amplitude in kV/mm");
    t_opt = cmd->add_option("--T-kelvin", t_kelvin, "Temperature in K");
  }
  bool given() const { return path_opt->count() > 0; }

  AlignmentParams resolve(bool ac_kind) const {
    if (!e0_opt->count() || !t_opt->count())
      throw UsageError("--species requires both --E0-kv-mm and --T-kelvin");
    const SpeciesConfig cfg = load_species_file(path);
    const double e0 = e0_kv_mm * 1e6; // kV/mm -> V/m
    const ControlField field = ac_kind ? ControlField::ac(e0, t_kelvin)
                                       : ControlField::dc(e0, t_kelvin);
    return alignment_params(cfg.species, field);
  }
};

GainResult dispatch_closed_form(const std::string& mode,
                                const AlignmentParams& ap, double eta_n) {
  switch (gain_form_from_name(mode)) {
    case GainForm::dc_orthogonal: return gain_dc_orthogonal(ap, eta_n);
    case GainForm::dc_parallel: return gain_dc_parallel(ap, eta_n);
    case GainForm::ac_orthogonal: return gain_ac_orthogonal(ap, eta_n);
    case GainForm::ac_parallel: return gain_ac_parallel(ap, eta_n);
  }
  throw std::logic_error("unreachable");
}

void print_params(const AlignmentParams& ap) {
  std::cout << "# p_g = " << format_sci12(ap.p_g)
            << "  p_m = " << format_sci12(ap.p_m)
            << "  q_g = " << format_sci12(ap.q_g)
            << "  q_m = " << format_sci12(ap.q_m) << '\n';
}

// --- gain ------------------------------------------------------------

struct GainCmd {
  std::string mode;
  ParamFlags params;
  SpeciesFlags species;
  double eta_n = 0.0;
  double psi_deg = 0.0;
  CLI::Option* psi_opt = nullptr;
  bool verbose = false;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("gain", "Evaluate one scaled gain value");
    cmd->add_option("--mode", mode, "dc-orth, dc-par, ac-orth, ac-par or general")
        ->required()
        ->check(CLI::IsMember({"dc-orth", "dc-par", "ac-orth", "ac-par", "general"}));
    params.add_to(cmd);
    species.add_to(cmd);
    cmd->add_option("--eta-n", eta_n, "Population ratio n_m/n_g")->required();
    psi_opt = cmd->add_option("--psi-deg", psi_deg,
                              "Probe-control angle in degrees (general mode)");
    cmd->add_flag("--verbose", verbose, "Also print the alignment parameters");
    cmd->callback([this] { run(); });
  }

  void run() {
    if (params.any_given() && species.given())
      throw UsageError("--species conflicts with explicit --pg/--pm/--qg/--qm");
    if (mode != "general" && psi_opt->count())
      throw UsageError("--psi-deg applies to --mode general only");
    if (mode == "general" && !psi_opt->count())
      throw UsageError("--mode general requires --psi-deg");

    const bool ac_kind = mode.rfind("ac-", 0) == 0;
    const AlignmentParams ap =
        species.given() ? species.resolve(ac_kind) : params.params();
    if (verbose) print_params(ap);

    const GainResult r =
        mode == "general"
            ? gain_general(ap, eta_n, Geometry::from_radians(psi_deg * kDegToRad))
            : dispatch_closed_form(mode, ap, eta_n);
    std::cout << format_sci12(r.scaled_gain) << '\n';
  }
};

// --- oracle ----------------------------------------------------------

struct OracleCmd {
  std::string mode;
  ParamFlags params;
  double eta_n = 0.0;
  double psi_deg = 0.0;
  CLI::Option* psi_opt = nullptr;
  double tolerance = kOracleDefaultTolerance;
  bool full2d = false;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "oracle", "Compare a closed form against the defining integral");
    cmd->add_option("--mode", mode, "dc-orth, dc-par, ac-orth, ac-par or general")
        ->required()
        ->check(CLI::IsMember({"dc-orth", "dc-par", "ac-orth", "ac-par", "general"}));
    params.add_to(cmd);
    cmd->add_option("--eta-n", eta_n, "Population ratio n_m/n_g")->required();
    psi_opt = cmd->add_option("--psi-deg", psi_deg,
                              "Probe-control angle in degrees (general mode)");
    cmd->add_option("--tolerance", tolerance, "Oracle absolute tolerance");
    cmd->add_flag("--full-2d", full2d,
                  "Also evaluate the unreduced two-dimensional integral");
    cmd->callback([this] { run(); });
  }

  void run() {
    if (mode != "general" && psi_opt->count())
      throw UsageError("--psi-deg applies to --mode general only");
    if (mode == "general" && !psi_opt->count())
      throw UsageError("--mode general requires --psi-deg");

    const AlignmentParams ap = params.params();
    double psi = psi_deg * kDegToRad;
    if (mode == "dc-orth" || mode == "ac-orth") psi = constants::pi / 2.0;
    if (mode == "dc-par" || mode == "ac-par") psi = 0.0;

    std::optional<double> closed;
    if (mode != "general")
      closed = dispatch_closed_form(mode, ap, eta_n).scaled_gain;

    OracleRequest req{ap.p_g, ap.q_g, ap.p_m, ap.q_m, eta_n, psi};
    const OracleResult oracle = oracle_gain(req, tolerance);

    if (closed) std::cout << "closed-form " << format_sci12(*closed) << '\n';
    std::cout << "oracle " << format_sci12(oracle.value) << '\n';
    if (closed)
      std::cout << "abs-difference " << format_sci6(std::abs(*closed - oracle.value))
                << '\n';
    if (mode == "ac-orth")
      std::cout << "unhalved-form "
                << format_sci12(gain_ac_orthogonal_unhalved(ap, eta_n)) << '\n';
    if (full2d) {
      const double upper =
          projection_moment_full2d(ap.p_m, ap.q_m, psi, tolerance).value;
      const double lower =
          projection_moment_full2d(ap.p_g, ap.q_g, psi, tolerance).value;
      std::cout << "full-2d " << format_sci12(eta_n * upper - lower) << '\n';
    }
  }
};

// --- shared model flags for threshold / optimize / sweep --------------

struct ModelFlags {
  std::string mode;
  double eta_n = 0.8;
  double pg = 0.0, qg = 0.0;
  double eta_mu = 0.0, inv_eta_mu = 0.0, pm = 0.0, eta_q = 0.0, qm = 0.0;
  CLI::Option* mode_opt = nullptr;
  CLI::Option* eta_mu_opt = nullptr;
  CLI::Option* inv_eta_mu_opt = nullptr;
  CLI::Option* pm_opt = nullptr;
  CLI::Option* eta_q_opt = nullptr;
  CLI::Option* qm_opt = nullptr;

  void add_to(CLI::App* cmd, bool mode_required) {
    mode_opt = cmd->add_option("--mode", mode, "dc-orth, dc-par, ac-orth or ac-par")
                   ->check(CLI::IsMember({"dc-orth", "dc-par", "ac-orth", "ac-par"}));
    if (mode_required) mode_opt->required();
    cmd->add_option("--eta-n", eta_n, "Population ratio n_m/n_g");
    cmd->add_option("--pg", pg, "Fixed p_g");
    cmd->add_option("--qg", qg, "Fixed q_g");
    eta_mu_opt = cmd->add_option("--eta-mu", eta_mu, "mu_m/mu_g (ties p_m to p_g)");
    inv_eta_mu_opt =
        cmd->add_option("--inv-eta-mu", inv_eta_mu, "mu_g/mu_m (ties p_m to p_g)");
    pm_opt = cmd->add_option("--pm", pm, "Fixed p_m");
    eta_q_opt = cmd->add_option("--eta-q", eta_q, "q_m/q_g (ties q_m to q_g)");
    qm_opt = cmd->add_option("--qm", qm, "Fixed q_m");
  }

  GainModel build() const {
    GainModel m;
    m.form = gain_form_from_name(mode);
    m.eta_n = eta_n;
    m.p_g = pg;
    m.q_g = qg;
    if (eta_mu_opt->count()) m.eta_mu = eta_mu;
    if (inv_eta_mu_opt->count()) m.inv_eta_mu = inv_eta_mu;
    if (pm_opt->count()) m.p_m = pm;
    if (eta_q_opt->count()) m.eta_q = eta_q;
    if (qm_opt->count()) m.q_m = qm;
    return m;
  }
};

GainModel preset_1d_model(const std::string& preset_name) {
  const FigurePreset preset = figure_preset(preset_name);
  if (!preset.is_1d())
    throw UsageError("preset '" + preset_name +
                     "' is a 2D sweep; threshold/optimize need a 1D model "
                     "(fig1 or fig4)");
  return preset.model;
}

// --- threshold / optimize ---------------------------------------------

struct ThresholdCmd {
  std::string preset;
  ModelFlags model;
  std::string var = "p_g";
  double lo = 0.1, hi = 20.0;

  void setup(CLI::App& app, bool maximize) {
    auto* cmd = maximize
                    ? app.add_subcommand("optimize", "Locate the maximum gain")
                    : app.add_subcommand("threshold",
                                         "Locate transparency (zero-gain) points");
    cmd->add_option("--preset", preset, "Use a 1D figure preset model (fig1, fig4)")
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"}));
    model.add_to(cmd, /*mode_required=*/false);
    cmd->add_option("--var", var, "Swept parameter name");
    cmd->add_option("--min", lo, "Range lower end");
    cmd->add_option("--max", hi, "Range upper end");
    cmd->callback([this, maximize] { run(maximize); });
  }

  void run(bool maximize) const {
    if (preset.empty() && !model.mode_opt->count())
      throw UsageError("give either --preset or --mode with model flags");
    if (!preset.empty() && model.mode_opt->count())
      throw UsageError("--preset conflicts with --mode");
    const GainModel m = preset.empty() ? model.build() : preset_1d_model(preset);

    if (maximize) {
      const MaxResult r = find_max_gain(m, var, lo, hi);
      std::cout << "argmax " << format_sci12(r.argmax) << '\n'
                << "max " << format_sci12(r.max_value) << '\n';
      return;
    }
    const auto crossings = find_threshold(m, var, lo, hi);
    if (crossings.empty()) {
      std::cout << "no sign change in [" << format_sci6(lo) << ", "
                << format_sci6(hi) << "]\n";
      return;
    }
    for (const auto& c : crossings)
      std::cout << "crossing " << format_sci12(c.crossing) << " bracket ["
                << format_sci12(c.bracket_lo) << ", "
                << format_sci12(c.bracket_hi) << "] residual "
                << format_sci6(c.residual) << " iterations " << c.iterations
                << '\n';
  }
};

// --- figure ------------------------------------------------------------

struct FigureCmd {
  std::string preset;
  std::string out;
  std::string svg;

  void setup(CLI::App& app) {
    auto* cmd =
        app.add_subcommand("figure", "Write a built-in preset dataset to CSV");
    cmd->add_option("--preset", preset, "fig1 .. fig6")
        ->required()
        ->check(CLI::IsMember(figure_preset_names()));
    cmd->add_option("--out", out, "Output CSV path (default <preset>.csv)");
    cmd->add_option("--svg", svg, "Also write a line plot (1D presets only)");
    cmd->callback([this] { run(); });
  }

  void run() const {
    const FigurePreset p = figure_preset(preset);
    if (!svg.empty() && !p.is_1d())
      throw UsageError("--svg is available for 1D presets only");
    const SweepGrid grid = run_figure(p);
    const std::string csv_path = out.empty() ? preset + ".csv" : out;
    const std::string companion = write_figure_files(p, grid, csv_path);
    std::cout << "wrote " << csv_path << '\n';
    if (!companion.empty()) std::cout << "wrote " << companion << '\n';
    if (!svg.empty()) {
      write_svg_file(grid, p.name + ": " + p.description, svg);
      std::cout << "wrote " << svg << '\n';
    }
  }
};

// --- sweep -------------------------------------------------------------

struct SweepCmd {
  ModelFlags model;
  std::string var1, var2;
  std::string out;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "sweep", "Evaluate a closed form over a custom 1D/2D grid");
    model.add_to(cmd, /*mode_required=*/true);
    cmd->add_option("--var1", var1,
                    "Axis spec name,min,max,count[,linear|log]")
        ->required();
    cmd->add_option("--var2", var2, "Optional second axis spec");
    cmd->add_option("--out", out, "Output CSV path")->required();
    cmd->callback([this] { run(); });
  }

  static SweepAxis parse_axis(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = spec.find(',', pos);
      parts.push_back(spec.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (parts.size() != 4 && parts.size() != 5)
      throw UsageError("axis spec must be name,min,max,count[,linear|log]: '" +
                       spec + "'");
    SweepAxis axis;
    axis.name = parts[0];
    try {
      axis.min = std::stod(parts[1]);
      axis.max = std::stod(parts[2]);
      axis.count = std::stoi(parts[3]);
    } catch (const std::exception&) {
      throw UsageError("bad number in axis spec '" + spec + "'");
    }
    if (parts.size() == 5) {
      if (parts[4] == "log") axis.spacing = AxisSpacing::log;
      else if (parts[4] == "linear") axis.spacing = AxisSpacing::linear;
      else throw UsageError("axis spacing must be linear or log: '" + spec + "'");
    }
    return axis;
  }

  void run() const {
    const SweepAxis a1 = parse_axis(var1);
    std::optional<SweepAxis> a2;
    if (!var2.empty()) a2 = parse_axis(var2);
    const SweepGrid grid = run_sweep(a1, a2, model.build());
    const CsvDataset dataset = to_dataset(grid, "sweep");
    std::ofstream file(out, std::ios::binary);
    if (!file) throw IoError("cannot write '" + out + "'");
    file << emit_csv(dataset);
    if (!file) throw IoError("write failed for '" + out + "'");
    std::cout << "wrote " << out << '\n';
  }
};

// --- polarizability ------------------------------------------------------

struct PolarizabilityCmd {
  std::string species_path;
  double omega0 = 0.0;
  double guard = kDefaultResonanceGuard;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "polarizability",
        "Sum-over-states polarizability from a species transition list");
    cmd->add_option("--species", species_path, "Species config file")->required();
    cmd->add_option("--omega0", omega0, "Control-field frequency in rad/s (0 = static)");
    cmd->add_option("--guard", guard, "Relative resonance guard");
    cmd->callback([this] { run(); });
  }

  void run() const {
    const SpeciesConfig cfg = load_species_file(species_path);
    if (cfg.transitions.empty())
      throw DomainError("species file has no [transition] blocks");
    for (const Level level : {Level::g, Level::m}) {
      const auto entries = cfg.transitions_for(level);
      if (entries.empty()) continue;
      const Anisotropy a = anisotropy(entries, omega0, guard);
      std::cout << "level " << (level == Level::g ? 'g' : 'm') << " alpha33 "
                << format_sci12(a.alpha_par) << " alpha11 "
                << format_sci12(a.alpha_perp) << " dalpha "
                << format_sci12(a.dalpha) << '\n';
    }
  }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optical gain of aligned anisotropic molecules"};
  app.set_version_flag("--version", ALIGNGAIN_VERSION);
  app.require_subcommand(1);

  GainCmd gain_cmd;
  OracleCmd oracle_cmd;
  ThresholdCmd threshold_cmd;
  ThresholdCmd optimize_cmd;
  FigureCmd figure_cmd;
  SweepCmd sweep_cmd;
  PolarizabilityCmd polarizability_cmd;

  gain_cmd.setup(app);
  oracle_cmd.setup(app);
  threshold_cmd.setup(app, /*maximize=*/false);
  optimize_cmd.setup(app, /*maximize=*/true);
  figure_cmd.setup(app);
  sweep_cmd.setup(app);
  polarizability_cmd.setup(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 64;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 74;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
