#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "aligngain/analysis.hpp"
#include "aligngain/csv.hpp"
#include "aligngain/errors.hpp"
#include "aligngain/gain.hpp"
#include "aligngain/oracle.hpp"
#include "aligngain/polarizability.hpp"
#include "aligngain/specfun.hpp"
#include "aligngain/species.hpp"
#include "aligngain/version.hpp"

namespace py = pybind11;
using namespace aligngain;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Optical switching and inversionless gain of field-aligned "
            "anisotropic molecules";
  m.attr("__version__") = ALIGNGAIN_VERSION;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_IOError);

  // special functions
  m.def("langevin", &langevin, py::arg("p"),
        "Langevin function coth(p) - 1/p");
  m.def("langevin_over_p", &langevin_over_p, py::arg("p"),
        "L(p)/p with the p = 0 limit 1/3");
  m.def("mean_cos2_dc", &mean_cos2_dc, py::arg("p"),
        "<cos^2> of a permanent dipole in a dc field, 1 - 2 L(p)/p");
  m.def("dawson", &dawson, py::arg("x"), "Dawson integral for x >= 0");
  m.def("gen_langevin", &gen_langevin, py::arg("q"),
        "<cos^2> under the induced-dipole weight exp(q cos^2)");

  py::class_<OrientationMoment>(m, "OrientationMoment")
      .def_readonly("mean_cos", &OrientationMoment::mean_cos)
      .def_readonly("mean_cos2", &OrientationMoment::mean_cos2);
  m.def("orientation_moments_dc", &orientation_moments_dc, py::arg("p"));

  // gain types and closed forms
  py::class_<MolecularSpecies>(m, "MolecularSpecies")
      .def(py::init([](std::string name, double mu_g, double mu_m,
                       double dalpha_g, double dalpha_m) {
             return MolecularSpecies{std::move(name), mu_g, mu_m, dalpha_g,
                                     dalpha_m};
           }),
           py::arg("name"), py::arg("mu_g") = 0.0, py::arg("mu_m") = 0.0,
           py::arg("dalpha_g") = 0.0, py::arg("dalpha_m") = 0.0,
           "Dipoles in Debye, polarizability anisotropies in cm^3")
      .def_readwrite("name", &MolecularSpecies::name)
      .def_readwrite("mu_g", &MolecularSpecies::mu_g)
      .def_readwrite("mu_m", &MolecularSpecies::mu_m)
      .def_readwrite("dalpha_g", &MolecularSpecies::dalpha_g)
      .def_readwrite("dalpha_m", &MolecularSpecies::dalpha_m);

  py::class_<ControlField>(m, "ControlField")
      .def_static("dc", &ControlField::dc, py::arg("amplitude_V_per_m"),
                  py::arg("temperature_K"))
      .def_static("ac", &ControlField::ac, py::arg("amplitude_V_per_m"),
                  py::arg("temperature_K"))
      .def_readonly("amplitude_E0", &ControlField::amplitude_E0)
      .def_readonly("temperature_T", &ControlField::temperature_T);

  py::class_<AlignmentParams>(m, "AlignmentParams")
      .def(py::init([](double p_g, double p_m, double q_g, double q_m) {
             return AlignmentParams{p_g, p_m, q_g, q_m};
           }),
           py::arg("p_g") = 0.0, py::arg("p_m") = 0.0, py::arg("q_g") = 0.0,
           py::arg("q_m") = 0.0)
      .def_readwrite("p_g", &AlignmentParams::p_g)
      .def_readwrite("p_m", &AlignmentParams::p_m)
      .def_readwrite("q_g", &AlignmentParams::q_g)
      .def_readwrite("q_m", &AlignmentParams::q_m)
      .def("__repr__", [](const AlignmentParams& a) {
        return "AlignmentParams(p_g=" + std::to_string(a.p_g) +
               ", p_m=" + std::to_string(a.p_m) +
               ", q_g=" + std::to_string(a.q_g) +
               ", q_m=" + std::to_string(a.q_m) + ")";
      });

  py::class_<Populations>(m, "Populations")
      .def(py::init([](double n_g, double n_m) {
             return Populations{n_g, n_m};
           }),
           py::arg("n_g"), py::arg("n_m"))
      .def_readwrite("n_g", &Populations::n_g)
      .def_readwrite("n_m", &Populations::n_m)
      .def("eta_n", &Populations::eta_n);

  py::class_<Geometry>(m, "Geometry")
      .def_static("parallel", &Geometry::parallel)
      .def_static("orthogonal", &Geometry::orthogonal)
      .def_static("from_radians", &Geometry::from_radians, py::arg("psi"))
      .def_readonly("psi", &Geometry::psi);

  py::class_<GainResult>(m, "GainResult")
      .def_readonly("scaled_gain", &GainResult::scaled_gain)
      .def_readonly("absolute_gain", &GainResult::absolute_gain)
      .def_readonly("branch", &GainResult::branch)
      .def("__repr__", [](const GainResult& r) {
        return "GainResult(scaled_gain=" + std::to_string(r.scaled_gain) +
               ", branch='" + r.branch + "')";
      });

  m.def("alignment_params", &alignment_params, py::arg("species"),
        py::arg("field"));
  m.def("field_for_p", &field_for_p, py::arg("mu_debye"),
        py::arg("temperature_K"), py::arg("p"));
  m.def("field_for_q", &field_for_q, py::arg("dalpha_cm3"),
        py::arg("temperature_K"), py::arg("q"));

  m.def("gain_dc_orthogonal", &gain_dc_orthogonal, py::arg("params"),
        py::arg("eta_n"));
  m.def("gain_dc_parallel", &gain_dc_parallel, py::arg("params"),
        py::arg("eta_n"));
  m.def("gain_ac_orthogonal", &gain_ac_orthogonal, py::arg("params"),
        py::arg("eta_n"));
  m.def("gain_ac_orthogonal_unhalved", &gain_ac_orthogonal_unhalved,
        py::arg("params"), py::arg("eta_n"));
  m.def("gain_ac_parallel", &gain_ac_parallel, py::arg("params"),
        py::arg("eta_n"));
  m.def("gain_general", &gain_general, py::arg("params"), py::arg("eta_n"),
        py::arg("geometry"), py::arg("tolerance") = kOracleDefaultTolerance);
  m.def("with_absolute_gain", &with_absolute_gain, py::arg("result"),
        py::arg("sigma0_cm2"), py::arg("n_g_per_cm3"));

  // oracle
  py::class_<OracleRequest>(m, "OracleRequest")
      .def(py::init([](double p_g, double q_g, double p_m, double q_m,
                       double eta_n, double psi) {
             return OracleRequest{p_g, q_g, p_m, q_m, eta_n, psi};
           }),
           py::arg("p_g") = 0.0, py::arg("q_g") = 0.0, py::arg("p_m") = 0.0,
           py::arg("q_m") = 0.0, py::arg("eta_n") = 0.0, py::arg("psi") = 0.0)
      .def_readwrite("p_g", &OracleRequest::p_g)
      .def_readwrite("q_g", &OracleRequest::q_g)
      .def_readwrite("p_m", &OracleRequest::p_m)
      .def_readwrite("q_m", &OracleRequest::q_m)
      .def_readwrite("eta_n", &OracleRequest::eta_n)
      .def_readwrite("psi", &OracleRequest::psi);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("value", &OracleResult::value)
      .def_readonly("est_error", &OracleResult::est_error)
      .def_readonly("evaluations", &OracleResult::evaluations);

  m.def("projection_moment", &projection_moment, py::arg("p"), py::arg("q"),
        py::arg("psi"), py::arg("tolerance") = kOracleDefaultTolerance);
  m.def("oracle_gain", &oracle_gain, py::arg("request"),
        py::arg("tolerance") = kOracleDefaultTolerance);
  m.def("projection_moment_full2d", &projection_moment_full2d, py::arg("p"),
        py::arg("q"), py::arg("psi"),
        py::arg("tolerance") = kOracleDefaultTolerance);

  // polarizability
  py::class_<TransitionEntry>(m, "TransitionEntry")
      .def_static("from_dipoles", &TransitionEntry::from_dipoles,
                  py::arg("omega_lj"), py::arg("d_par_debye"),
                  py::arg("d_perp_debye"))
      .def_static("from_strengths", &TransitionEntry::from_strengths,
                  py::arg("omega_lj"), py::arg("f_par"), py::arg("f_perp"))
      .def_readonly("omega_lj", &TransitionEntry::omega_lj);

  py::enum_<PolarizabilityAxis>(m, "PolarizabilityAxis")
      .value("parallel", PolarizabilityAxis::parallel)
      .value("perpendicular", PolarizabilityAxis::perpendicular);

  py::class_<Anisotropy>(m, "Anisotropy")
      .def_readonly("alpha_par", &Anisotropy::alpha_par)
      .def_readonly("alpha_perp", &Anisotropy::alpha_perp)
      .def_readonly("dalpha", &Anisotropy::dalpha);

  m.def(
      "polarizability_component",
      [](const std::vector<TransitionEntry>& entries, double omega0,
         PolarizabilityAxis axis, double resonance_guard) {
        return polarizability_component(entries, omega0, axis, resonance_guard);
      },
      py::arg("entries"), py::arg("omega0"), py::arg("axis"),
      py::arg("resonance_guard") = kDefaultResonanceGuard);
  m.def(
      "anisotropy",
      [](const std::vector<TransitionEntry>& entries, double omega0,
         double resonance_guard) {
        return anisotropy(entries, omega0, resonance_guard);
      },
      py::arg("entries"), py::arg("omega0"),
      py::arg("resonance_guard") = kDefaultResonanceGuard);

  // analysis
  py::enum_<GainForm>(m, "GainForm")
      .value("dc_orthogonal", GainForm::dc_orthogonal)
      .value("dc_parallel", GainForm::dc_parallel)
      .value("ac_orthogonal", GainForm::ac_orthogonal)
      .value("ac_parallel", GainForm::ac_parallel);
  m.def("gain_form_from_name", &gain_form_from_name, py::arg("name"));

  py::class_<GainModel>(m, "GainModel")
      .def(py::init<>())
      .def_readwrite("form", &GainModel::form)
      .def_readwrite("eta_n", &GainModel::eta_n)
      .def_readwrite("p_g", &GainModel::p_g)
      .def_readwrite("q_g", &GainModel::q_g)
      .def_readwrite("eta_mu", &GainModel::eta_mu)
      .def_readwrite("inv_eta_mu", &GainModel::inv_eta_mu)
      .def_readwrite("p_m", &GainModel::p_m)
      .def_readwrite("eta_q", &GainModel::eta_q)
      .def_readwrite("q_m", &GainModel::q_m)
      .def("set", &GainModel::set, py::arg("name"), py::arg("value"))
      .def("with_", &GainModel::with, py::arg("name"), py::arg("value"))
      .def("evaluate", &GainModel::evaluate);

  py::class_<ThresholdResult>(m, "ThresholdResult")
      .def_readonly("crossing", &ThresholdResult::crossing)
      .def_readonly("bracket_lo", &ThresholdResult::bracket_lo)
      .def_readonly("bracket_hi", &ThresholdResult::bracket_hi)
      .def_readonly("residual", &ThresholdResult::residual)
      .def_readonly("iterations", &ThresholdResult::iterations);

  py::class_<MaxResult>(m, "MaxResult")
      .def_readonly("argmax", &MaxResult::argmax)
      .def_readonly("max_value", &MaxResult::max_value);

  m.def("find_threshold", &find_threshold, py::arg("model"),
        py::arg("sweep_var"), py::arg("lo"), py::arg("hi"),
        py::arg("pregrid_points") = 256, py::arg("residual_tol") = 1e-10);
  m.def("find_max_gain", &find_max_gain, py::arg("model"), py::arg("sweep_var"),
        py::arg("lo"), py::arg("hi"), py::arg("pregrid_points") = 256);

  py::enum_<AxisSpacing>(m, "AxisSpacing")
      .value("linear", AxisSpacing::linear)
      .value("log", AxisSpacing::log);

  py::class_<SweepAxis>(m, "SweepAxis")
      .def(py::init([](std::string name, double min, double max, int count,
                       AxisSpacing spacing) {
             return SweepAxis{std::move(name), min, max, count, spacing};
           }),
           py::arg("name"), py::arg("min"), py::arg("max"), py::arg("count"),
           py::arg("spacing") = AxisSpacing::linear)
      .def_readwrite("name", &SweepAxis::name)
      .def_readwrite("min", &SweepAxis::min)
      .def_readwrite("max", &SweepAxis::max)
      .def_readwrite("count", &SweepAxis::count)
      .def_readwrite("spacing", &SweepAxis::spacing)
      .def("at", &SweepAxis::at, py::arg("i"));

  py::class_<SweepGrid>(m, "SweepGrid")
      .def_readonly("axis1", &SweepGrid::axis1)
      .def_readonly("axis2", &SweepGrid::axis2)
      .def_readonly("model", &SweepGrid::model)
      .def_readonly("values", &SweepGrid::values)
      .def("value_at", &SweepGrid::value_at, py::arg("i1"), py::arg("i2") = 0)
      .def("rows", &SweepGrid::rows)
      .def("cols", &SweepGrid::cols);

  m.def("run_sweep", &run_sweep, py::arg("axis1"), py::arg("axis2"),
        py::arg("model"));

  py::class_<FigurePreset>(m, "FigurePreset")
      .def_readonly("name", &FigurePreset::name)
      .def_readonly("description", &FigurePreset::description)
      .def_readonly("model", &FigurePreset::model)
      .def_readonly("axis1", &FigurePreset::axis1)
      .def_readonly("axis2", &FigurePreset::axis2)
      .def("is_1d", &FigurePreset::is_1d);

  m.def("figure_preset", &figure_preset, py::arg("name"));
  m.def("figure_preset_names", &figure_preset_names);
  m.def("run_figure", &run_figure, py::arg("preset"));
  m.def(
      "write_figure_files",
      [](const std::string& preset_name, const std::string& csv_path) {
        const FigurePreset preset = figure_preset(preset_name);
        return write_figure_files(preset, run_figure(preset), csv_path);
      },
      py::arg("preset_name"), py::arg("csv_path"),
      "Write a preset dataset; returns the companion path for 1D presets");

  // species files
  py::enum_<Level>(m, "Level").value("g", Level::g).value("m", Level::m);
  py::class_<LevelTransition>(m, "LevelTransition")
      .def_readonly("level", &LevelTransition::level)
      .def_readonly("entry", &LevelTransition::entry);
  py::class_<SpeciesConfig>(m, "SpeciesConfig")
      .def_readonly("species", &SpeciesConfig::species)
      .def_readonly("transitions", &SpeciesConfig::transitions)
      .def("transitions_for", &SpeciesConfig::transitions_for, py::arg("level"));
  m.def("load_species_file", &load_species_file, py::arg("path"));
}
