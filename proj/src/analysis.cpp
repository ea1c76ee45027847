#include "aligngain/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "aligngain/errors.hpp"

namespace aligngain {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

double evaluate_at(const GainModel& model, std::string_view var, double value) {
  GainModel m = model;
  m.set(var, value);
  return m.evaluate();
}

unsigned sweep_thread_count(std::size_t points) {
  unsigned n = 0;
  if (const char* env = std::getenv("ALIGN_GAIN_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 0) n = static_cast<unsigned>(parsed);
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, 16);
  // no point spinning threads for tiny grids
  return static_cast<unsigned>(
      std::min<std::size_t>(n, std::max<std::size_t>(1, points / 64)));
}

} // namespace

GainForm gain_form_from_name(std::string_view name) {
  if (name == "dc-orth") return GainForm::dc_orthogonal;
  if (name == "dc-par") return GainForm::dc_parallel;
  if (name == "ac-orth") return GainForm::ac_orthogonal;
  if (name == "ac-par") return GainForm::ac_parallel;
  throw ConfigError("unknown gain form '" + std::string(name) +
                    "' (expected dc-orth, dc-par, ac-orth or ac-par)");
}

std::string to_string(GainForm form) {
  switch (form) {
    case GainForm::dc_orthogonal: return "dc-orth";
    case GainForm::dc_parallel: return "dc-par";
    case GainForm::ac_orthogonal: return "ac-orth";
    case GainForm::ac_parallel: return "ac-par";
  }
  return "?";
}

void GainModel::set(std::string_view name, double value) {
  if (name == "p_g") p_g = value;
  else if (name == "q_g") q_g = value;
  else if (name == "eta_n") eta_n = value;
  else if (name == "eta_mu") eta_mu = value;
  else if (name == "inv_eta_mu") inv_eta_mu = value;
  else if (name == "p_m") p_m = value;
  else if (name == "eta_q") eta_q = value;
  else if (name == "q_m") q_m = value;
  else
    throw ConfigError("unknown parameter name '" + std::string(name) + "'");
}

GainModel GainModel::with(std::string_view name, double value) const {
  GainModel m = *this;
  m.set(name, value);
  return m;
}

AlignmentParams GainModel::resolve() const {
  if (eta_mu && inv_eta_mu)
    throw ConfigError("GainModel: eta_mu and inv_eta_mu are mutually exclusive");
  if (p_m && (eta_mu || inv_eta_mu))
    throw ConfigError("GainModel: p_m conflicts with a dipole-ratio parameter");
  if (q_m && eta_q)
    throw ConfigError("GainModel: q_m conflicts with eta_q");

  AlignmentParams ap;
  ap.p_g = p_g;
  ap.q_g = q_g;
  if (p_m) ap.p_m = *p_m;
  else if (eta_mu) ap.p_m = p_g * *eta_mu;
  else if (inv_eta_mu) {
    if (*inv_eta_mu == 0.0)
      throw ConfigError("GainModel: inv_eta_mu must be nonzero");
    ap.p_m = p_g / *inv_eta_mu;
  }
  if (q_m) ap.q_m = *q_m;
  else if (eta_q) ap.q_m = q_g * *eta_q;
  return ap;
}

double GainModel::evaluate() const {
  const AlignmentParams ap = resolve();
  switch (form) {
    case GainForm::dc_orthogonal: return gain_dc_orthogonal(ap, eta_n).scaled_gain;
    case GainForm::dc_parallel: return gain_dc_parallel(ap, eta_n).scaled_gain;
    case GainForm::ac_orthogonal: return gain_ac_orthogonal(ap, eta_n).scaled_gain;
    case GainForm::ac_parallel: return gain_ac_parallel(ap, eta_n).scaled_gain;
  }
  throw std::logic_error("GainModel: bad form");
}

std::vector<ThresholdResult> find_threshold(const GainModel& model,
                                            std::string_view sweep_var,
                                            double lo, double hi,
                                            int pregrid_points,
                                            double residual_tol) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw DomainError("find_threshold: requires a finite range with lo < hi");
  if (pregrid_points < 2)
    throw DomainError("find_threshold: pre-grid needs at least 2 points");

  const int n = pregrid_points;
  std::vector<double> x(static_cast<std::size_t>(n)), f(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    f[static_cast<std::size_t>(i)] =
        evaluate_at(model, sweep_var, x[static_cast<std::size_t>(i)]);
  }

  std::vector<ThresholdResult> crossings;
  for (int i = 0; i + 1 < n; ++i) {
    double a = x[static_cast<std::size_t>(i)], b = x[static_cast<std::size_t>(i + 1)];
    double fa = f[static_cast<std::size_t>(i)];
    const double fb = f[static_cast<std::size_t>(i + 1)];
    if (sign_of(fa) * sign_of(fb) >= 0) continue; // strict sign change only

    double mid = 0.5 * (a + b);
    double fm = evaluate_at(model, sweep_var, mid);
    int it = 1;
    while (std::abs(fm) > residual_tol && it < 200) {
      if (sign_of(fm) == sign_of(fa)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
      const double next = 0.5 * (a + b);
      if (next <= a || next >= b) break; // bracket at machine resolution
      mid = next;
      fm = evaluate_at(model, sweep_var, mid);
      ++it;
    }

    ThresholdResult r;
    r.crossing = mid;
    r.bracket_lo = a;
    r.bracket_hi = b;
    r.residual = std::abs(fm);
    r.iterations = it;
    crossings.push_back(r);
  }
  return crossings;
}

MaxResult find_max_gain(const GainModel& model, std::string_view sweep_var,
                        double lo, double hi, int pregrid_points) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw DomainError("find_max_gain: requires a finite range with lo < hi");
  if (pregrid_points < 2)
    throw DomainError("find_max_gain: pre-grid needs at least 2 points");

  const int n = pregrid_points;
  int best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    const double v = evaluate_at(model, sweep_var, x[static_cast<std::size_t>(i)]);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  double a = x[static_cast<std::size_t>(std::max(0, best - 1))];
  double b = x[static_cast<std::size_t>(std::min(n - 1, best + 1))];

  // Golden-section refinement of the bracket.
  constexpr double inv_phi = 0.6180339887498948482;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = evaluate_at(model, sweep_var, c);
  double fd = evaluate_at(model, sweep_var, d);
  const double width_target = 1e-6 * (hi - lo) * 0.25;
  while (b - a > width_target) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = evaluate_at(model, sweep_var, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = evaluate_at(model, sweep_var, d);
    }
    if (c >= d) break; // interval at machine resolution
  }

  MaxResult r;
  r.argmax = fc >= fd ? c : d;
  r.max_value = std::max(fc, fd);
  if (best_val > r.max_value) { // pre-grid edge point can win at range edges
    r.argmax = x[static_cast<std::size_t>(best)];
    r.max_value = best_val;
  }
  return r;
}

double SweepAxis::at(int i) const {
  if (i == 0) return min;
  if (i == count - 1) return max;
  if (spacing == AxisSpacing::linear)
    return min + (max - min) * i / (count - 1);
  return std::exp(std::log(min) + (std::log(max) - std::log(min)) * i / (count - 1));
}

void SweepAxis::validate() const {
  if (name.empty()) throw ConfigError("sweep axis: missing parameter name");
  if (count < 2) throw ConfigError("sweep axis: count must be >= 2");
  if (!(min < max)) throw ConfigError("sweep axis: requires min < max");
  if (spacing == AxisSpacing::log && !(min > 0.0))
    throw ConfigError("sweep axis: log spacing requires min > 0");
}

double SweepGrid::value_at(int i1, int i2) const {
  return values[static_cast<std::size_t>(i1) * cols() +
                static_cast<std::size_t>(i2)];
}

SweepGrid run_sweep(const SweepAxis& axis1,
                    const std::optional<SweepAxis>& axis2,
                    const GainModel& model) {
  axis1.validate();
  if (axis2) axis2->validate();
  // surface bad parameter names / conflicts before spawning work
  (void)model.with(axis1.name, axis1.min);
  if (axis2) (void)model.with(axis2->name, axis2->min);

  SweepGrid grid;
  grid.axis1 = axis1;
  grid.axis2 = axis2;
  grid.model = model;
  const std::size_t n1 = static_cast<std::size_t>(axis1.count);
  const std::size_t n2 = axis2 ? static_cast<std::size_t>(axis2->count) : 1;
  grid.values.assign(n1 * n2, 0.0);

  auto fill_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const int i1 = static_cast<int>(idx / n2);
      const int i2 = static_cast<int>(idx % n2);
      GainModel m = model;
      m.set(axis1.name, axis1.at(i1));
      if (axis2) m.set(axis2->name, axis2->at(i2));
      grid.values[idx] = m.evaluate();
    }
  };

  const std::size_t total = n1 * n2;
  const unsigned workers = sweep_thread_count(total);
  if (workers <= 1) {
    fill_range(0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(fill_range, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  return grid;
}

FigurePreset figure_preset(std::string_view name) {
  FigurePreset p;
  p.name = std::string(name);

  GainModel m;
  m.eta_n = 0.8;

  const SweepAxis pg_axis{"p_g", 0.01, 20.0, 200, AxisSpacing::log};
  const SweepAxis pg_axis_2d{"p_g", 0.01, 20.0, 100, AxisSpacing::log};
  const SweepAxis eta_mu_axis{"eta_mu", 0.01, 1.0, 100, AxisSpacing::linear};

  if (name == "fig1") {
    m.form = GainForm::dc_orthogonal;
    m.eta_mu = 0.25;
    p.model = m;
    p.axis1 = pg_axis;
    p.description = "dc alignment, orthogonal probe, mu_g = 4 mu_m, eta_n = 0.8";
  } else if (name == "fig2") {
    m.form = GainForm::dc_orthogonal;
    p.model = m;
    p.axis1 = pg_axis_2d;
    p.axis2 = eta_mu_axis;
    p.description = "dc alignment, orthogonal probe, p_g x eta_mu, eta_n = 0.8";
  } else if (name == "fig3") {
    m.form = GainForm::dc_orthogonal;
    m.p_g = 8.0;
    p.model = m;
    p.axis1 = eta_mu_axis;
    p.axis2 = SweepAxis{"eta_n", 0.01, 1.0, 100, AxisSpacing::linear};
    p.description = "dc alignment, orthogonal probe, eta_mu x eta_n, p_g = 8";
  } else if (name == "fig4") {
    m.form = GainForm::dc_parallel;
    m.inv_eta_mu = 0.25;
    p.model = m;
    p.axis1 = pg_axis;
    p.description = "dc alignment, parallel probe, mu_m = 4 mu_g, eta_n = 0.8";
  } else if (name == "fig5") {
    m.form = GainForm::dc_parallel;
    p.model = m;
    p.axis1 = pg_axis_2d;
    p.axis2 = SweepAxis{"inv_eta_mu", 0.01, 1.0, 100, AxisSpacing::linear};
    p.description = "dc alignment, parallel probe, p_g x inv_eta_mu, eta_n = 0.8";
  } else if (name == "fig6") {
    m.form = GainForm::dc_parallel;
    m.p_g = 2.0;
    p.model = m;
    p.axis1 = SweepAxis{"inv_eta_mu", 0.01, 1.0, 100, AxisSpacing::linear};
    p.axis2 = SweepAxis{"eta_n", 0.01, 1.0, 100, AxisSpacing::linear};
    p.description = "dc alignment, parallel probe, inv_eta_mu x eta_n, p_g = 2";
  } else {
    throw ConfigError("unknown figure preset '" + std::string(name) +
                      "' (expected fig1..fig6)");
  }
  return p;
}

const std::vector<std::string>& figure_preset_names() {
  static const std::vector<std::string> names = {"fig1", "fig2", "fig3",
                                                 "fig4", "fig5", "fig6"};
  return names;
}

SweepGrid run_figure(const FigurePreset& preset) {
  return run_sweep(preset.axis1, preset.axis2, preset.model);
}

} // namespace aligngain
