#pragma once

// Adaptive Gauss-Kronrod (7,15) quadrature on finite intervals.
//
// Panels are bisected until each one meets a length-proportional share of the
// absolute tolerance, so the accepted-panel errors sum to at most the request.
// Segments are processed left to right and accumulated in that order, which
// makes results bit-stable across runs.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "aligngain/errors.hpp"

namespace aligngain::quad {

template <std::size_t N>
struct ResultN {
  std::array<double, N> value{};
  std::array<double, N> est_error{};
  long evaluations = 0;
  bool converged = true;
};

struct Result {
  double value = 0.0;
  double est_error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

namespace detail {

// 15-point Kronrod abscissae; entries 1,3,5,7 are the embedded 7-point Gauss
// nodes. Standard QUADPACK dqk15 constants.
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

// One (7,15) panel over [a,b] for an N-component integrand. `resabs` gets
// the panel integral of |f|, which scales the rounding-error floor.
template <std::size_t N, class F>
void kronrod_panel(F&& f, double a, double b, std::array<double, N>& value,
                   std::array<double, N>& error, std::array<double, N>& resabs_out,
                   long& evaluations) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<std::array<double, N>, 15> fv{};
  // fv[2*i] = f(mid - half*node_i), fv[2*i+1] = f(mid + half*node_i), center last
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[static_cast<std::size_t>(i)];
    fv[static_cast<std::size_t>(2 * i)] = f(mid - dx);
    fv[static_cast<std::size_t>(2 * i + 1)] = f(mid + dx);
  }
  fv[14] = f(mid);
  evaluations += 15;

  for (std::size_t c = 0; c < N; ++c) {
    double resk = kKronrodW[7] * fv[14][c];
    double resg = kGaussW[3] * fv[14][c];
    double resabs = std::abs(resk);
    for (int i = 0; i < 7; ++i) {
      const double sum = fv[static_cast<std::size_t>(2 * i)][c] +
                         fv[static_cast<std::size_t>(2 * i + 1)][c];
      resk += kKronrodW[static_cast<std::size_t>(i)] * sum;
      resabs += kKronrodW[static_cast<std::size_t>(i)] *
                (std::abs(fv[static_cast<std::size_t>(2 * i)][c]) +
                 std::abs(fv[static_cast<std::size_t>(2 * i + 1)][c]));
      if (i % 2 == 1) resg += kGaussW[static_cast<std::size_t>(i / 2)] * sum;
    }
    const double mean = 0.5 * resk;
    double resasc = kKronrodW[7] * std::abs(fv[14][c] - mean);
    for (int i = 0; i < 7; ++i) {
      resasc += kKronrodW[static_cast<std::size_t>(i)] *
                (std::abs(fv[static_cast<std::size_t>(2 * i)][c] - mean) +
                 std::abs(fv[static_cast<std::size_t>(2 * i + 1)][c] - mean));
    }
    resasc *= std::abs(half);
    resabs *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
      err = std::max(err, eps50 * resabs);
    value[c] = resk * half;
    error[c] = err;
    resabs_out[c] = resabs;
  }
}

} // namespace detail

/// Adaptively integrate an N-component f over [a,b] to per-component absolute
/// tolerances. `breakpoints` seeds the initial subdivision (values outside
/// (a,b) are ignored); callers use it to pre-split known boundary layers.
/// On tolerance failure the best estimate is still returned, with
/// `converged = false`.
template <std::size_t N, class F>
ResultN<N> integrate_n(F&& f, double a, double b,
                       const std::array<double, N>& abs_tol,
                       std::span<const double> breakpoints = {},
                       int max_depth = 55, long max_evaluations = 5000000) {
  struct Segment {
    double a, b;
    int depth;
  };

  std::vector<double> cuts;
  cuts.push_back(a);
  for (double x : breakpoints)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  std::vector<Segment> stack;
  for (std::size_t i = cuts.size() - 1; i > 0; --i)
    if (cuts[i] > cuts[i - 1]) stack.push_back({cuts[i - 1], cuts[i], 0});

  ResultN<N> out;
  const double total_len = b - a;
  while (!stack.empty()) {
    const Segment s = stack.back();
    stack.pop_back();

    std::array<double, N> v{}, e{}, resabs{};
    detail::kronrod_panel<N>(f, s.a, s.b, v, e, resabs, out.evaluations);

    // A panel is done when it meets its length-proportional budget or its
    // estimate is at the rounding floor, where splitting cannot help.
    const double share = (s.b - s.a) / total_len;
    constexpr double floor_factor =
        75.0 * std::numeric_limits<double>::epsilon();
    bool within_budget = true;
    for (std::size_t c = 0; c < N; ++c)
      if (e[c] > std::max(abs_tol[c] * share, floor_factor * resabs[c]))
        within_budget = false;

    const double width_floor =
        4.0 * std::numeric_limits<double>::epsilon() *
        std::max({std::abs(s.a), std::abs(s.b), 1.0});
    const bool splittable = s.depth < max_depth && (s.b - s.a) > width_floor &&
                            out.evaluations < max_evaluations;

    if (within_budget || !splittable) {
      for (std::size_t c = 0; c < N; ++c) {
        out.value[c] += v[c];
        out.est_error[c] += e[c];
      }
    } else {
      const double mid = 0.5 * (s.a + s.b);
      stack.push_back({mid, s.b, s.depth + 1});
      stack.push_back({s.a, mid, s.depth + 1});
    }
  }

  for (std::size_t c = 0; c < N; ++c)
    if (out.est_error[c] > abs_tol[c]) out.converged = false;
  return out;
}

/// Scalar convenience wrapper.
template <class F>
Result integrate(F&& f, double a, double b, double abs_tol,
                 std::span<const double> breakpoints = {}, int max_depth = 55) {
  auto wrapped = [&f](double x) { return std::array<double, 1>{f(x)}; };
  const ResultN<1> r = integrate_n<1>(wrapped, a, b, {abs_tol}, breakpoints, max_depth);
  return Result{r.value[0], r.est_error[0], r.evaluations, r.converged};
}

/// As integrate(), but throws NumericalError when the tolerance is not met.
template <class F>
Result integrate_or_throw(F&& f, double a, double b, double abs_tol,
                          std::span<const double> breakpoints = {},
                          int max_depth = 55) {
  Result r = integrate(f, a, b, abs_tol, breakpoints, max_depth);
  if (!r.converged)
    throw NumericalError("quadrature did not reach the requested tolerance",
                         r.value, r.est_error);
  return r;
}

} // namespace aligngain::quad
