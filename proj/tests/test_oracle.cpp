#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "aligngain/errors.hpp"
#include "aligngain/integrate.hpp"
#include "aligngain/oracle.hpp"
#include "aligngain/specfun.hpp"
#include "doctest.h"
#include "reference_values.hpp"

using namespace aligngain;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kPsiOrth = kPi / 2.0;
} // namespace

TEST_CASE("quad engine: polynomial and exponential sanity") {
  const auto r1 = quad::integrate_or_throw([](double x) { return x * x; }, 0.0,
                                           1.0, 1e-13);
  CHECK(std::abs(r1.value - 1.0 / 3.0) <= 1e-14);
  const auto r2 = quad::integrate_or_throw([](double x) { return std::exp(x); },
                                           -2.0, 3.0, 1e-12);
  CHECK(std::abs(r2.value - (std::exp(3.0) - std::exp(-2.0))) <= 1e-11);
  CHECK(r2.est_error <= 1e-12);
  CHECK(r2.evaluations >= 15);
}

TEST_CASE("quad engine: narrow spike is caught through seed points") {
  // Gaussian of width 1e-4 at x = 1; without the seeds a 15-point sweep of
  // [-1, 1] would miss it entirely.
  const double w = 1e-4;
  auto spike = [w](double x) { return std::exp(-(x - 1.0) * (x - 1.0) / (w * w)); };
  const std::vector<double> seeds = {1.0 - 8.0 * w, 1.0 - 4.0 * w, 1.0 - w,
                                     1.0 - w / 4.0};
  const auto r = quad::integrate_or_throw(spike, -1.0, 1.0, 1e-16, seeds);
  const double half_gauss = 0.5 * std::sqrt(kPi) * w;
  CHECK(std::abs(r.value - half_gauss) <= 1e-12 * half_gauss);
}

TEST_CASE("quad engine: reports non-convergence with best estimate") {
  // Integrable endpoint singularity; bisection stalls at depth limit well
  // before 1e-13 absolute.
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  CHECK_THROWS_AS(quad::integrate_or_throw(f, 1e-300, 1.0, 1e-13),
                  NumericalError);
  try {
    quad::integrate_or_throw(f, 1e-300, 1.0, 1e-13);
  } catch (const NumericalError& e) {
    CHECK(std::abs(e.best_value() - 2.0) < 0.1); // estimate still sane
    CHECK(e.achieved_error() > 1e-13);
  }
}

TEST_CASE("projection_moment: isotropic limit is 1/3 for any psi") {
  for (double psi : {0.0, 0.3, kPi / 4.0, kPsiOrth}) {
    const auto r = projection_moment(0.0, 0.0, psi, 1e-10);
    CHECK(std::abs(r.value - 1.0 / 3.0) <= 1e-10);
    CHECK(r.est_error <= 1e-10);
  }
}

TEST_CASE("projection_moment: matches the dc and ac closed forms") {
  const auto dc = projection_moment(5.0, 0.0, 0.0, 1e-10);
  CHECK(std::abs(dc.value - mean_cos2_dc(5.0)) <= 1e-10);
  CHECK(std::abs(dc.value - refv::kMeanCos2Dc5) <= 1e-10);

  const auto ac = projection_moment(0.0, 3.0, 0.0, 1e-10);
  CHECK(std::abs(ac.value - gen_langevin(3.0)) <= 1e-10);
}

TEST_CASE("projection_moment: frozen mixed-weight moment table") {
  for (const auto& row : refv::kMomentTable) {
    const auto r = projection_moment(row[0], row[1], 0.0, 1e-10);
    CHECK(std::abs(r.value - row[2]) <= 1e-10);
  }
}

TEST_CASE("projection_moment: psi decomposition identity") {
  const double psis[] = {0.2, kPi / 4.0, 1.1};
  const double params[][2] = {{2.0, 1.0}, {8.0, 0.0}, {0.0, -5.0}, {0.5, 5.0}};
  for (const auto& pq : params) {
    const double par = projection_moment(pq[0], pq[1], 0.0, 1e-11).value;
    const double orth = projection_moment(pq[0], pq[1], kPsiOrth, 1e-11).value;
    for (double psi : psis) {
      const double mixed = projection_moment(pq[0], pq[1], psi, 1e-11).value;
      const double c = std::cos(psi), s = std::sin(psi);
      CHECK(std::abs(mixed - (c * c * par + s * s * orth)) <= 1e-9);
    }
  }
}

TEST_CASE("projection_moment: p -> -p symmetry at psi = 0") {
  for (const auto& pq : {std::pair{3.0, 0.0}, std::pair{7.0, -2.0}, std::pair{0.4, 6.0}}) {
    const double plus = projection_moment(pq.first, pq.second, 0.0, 1e-11).value;
    const double minus = projection_moment(-pq.first, pq.second, 0.0, 1e-11).value;
    CHECK(std::abs(plus - minus) <= 1e-10);
  }
}

TEST_CASE("projection_moment: boundary layers at large parameters") {
  CHECK(std::abs(projection_moment(1e4, 0.0, 0.0, 1e-10).value - 0.99980002) <= 1e-9);
  CHECK(std::abs(projection_moment(0.0, 1e4, 0.0, 1e-10).value -
                 0.9998999949987495) <= 1e-9);
  CHECK(std::abs(projection_moment(0.0, -1e4, 0.0, 1e-10).value - 5e-5) <= 1e-10);
  CHECK(std::abs(projection_moment(700.0, 300.0, 0.0, 1e-10).value -
                 0.9984616296567890) <= 1e-9);
}

TEST_CASE("projection_moment: halving the tolerance never hurts the true error") {
  for (const auto& row : refv::kMomentTable) {
    double tol = 1e-5;
    double prev_err = std::abs(projection_moment(row[0], row[1], 0.0, tol).value - row[2]);
    for (int k = 0; k < 12; ++k) {
      tol *= 0.5;
      const double err =
          std::abs(projection_moment(row[0], row[1], 0.0, tol).value - row[2]);
      CHECK(err <= prev_err + 1e-15); // floor for double rounding noise
      prev_err = err;
    }
  }
}

TEST_CASE("projection_moment: domain errors") {
  CHECK_THROWS_AS(projection_moment(0.0, 0.0, -0.1), DomainError);
  CHECK_THROWS_AS(projection_moment(0.0, 0.0, 2.0), DomainError);
  CHECK_THROWS_AS(projection_moment(0.0, 0.0, 0.0, 1e-13), DomainError);
  CHECK_THROWS_AS(projection_moment(0.0, 0.0, 0.0, 1e-3), DomainError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(projection_moment(nan, 0.0, 0.0), DomainError);
}

TEST_CASE("oracle_gain: isotropic and reference points") {
  OracleRequest req;
  req.eta_n = 0.8;
  req.psi = kPsiOrth;
  const auto iso = oracle_gain(req, 1e-10);
  CHECK(std::abs(iso.value - (-1.0 / 15.0)) <= 1e-10);

  req.p_g = 8.0;
  req.p_m = 2.0;
  const auto fig1_point = oracle_gain(req, 1e-10);
  CHECK(std::abs(fig1_point.value - refv::kGainDcOrth_8_2_08) <= 1e-6);
  CHECK(fig1_point.est_error <= 1e-10);
  CHECK(fig1_point.evaluations > 0);
}

TEST_CASE("oracle_gain: opposite-sign induced weights match the closed forms") {
  // the strongest switching configuration: q changes sign between levels
  OracleRequest orth{0.0, 5.0, 0.0, -5.0, 0.8, kPsiOrth};
  CHECK(std::abs(oracle_gain(orth, 1e-10).value -
                 refv::kGainAcOrthHalved_5_m5_08) <= 1e-8);
  OracleRequest par{0.0, -3.0, 0.0, 3.0, 0.8, 0.0};
  CHECK(std::abs(oracle_gain(par, 1e-10).value - refv::kGainAcPar_m3_3_08) <=
        1e-8);
}

TEST_CASE("oracle_gain: arbitrates the halved ac-orthogonal form") {
  OracleRequest req;
  req.q_g = 2.0;
  req.q_m = 0.5;
  req.eta_n = 0.8;
  req.psi = kPsiOrth;
  const auto r = oracle_gain(req, 1e-10);
  CHECK(std::abs(r.value - refv::kGainAcOrthHalved_2_05_08) <= 1e-8);
  const double unhalved = 2.0 * refv::kGainAcOrthHalved_2_05_08;
  const double factor = unhalved / r.value;
  CHECK(factor > 1.99);
  CHECK(factor < 2.01);
}

TEST_CASE("full 2d path agrees with the reduced integrand") {
  const double cases[][3] = {{2.0, 1.0, 0.7}, {8.0, 0.0, kPsiOrth},
                             {0.0, -5.0, 0.3}, {0.5, 5.0, 0.0}};
  for (const auto& c : cases) {
    const auto reduced = projection_moment(c[0], c[1], c[2], 1e-10);
    const auto full = projection_moment_full2d(c[0], c[1], c[2], 1e-10);
    CHECK(std::abs(reduced.value - full.value) <= 1e-9);
  }
}
