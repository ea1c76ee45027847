#include <cmath>
#include <random>

#include "aligngain/errors.hpp"
#include "aligngain/gain.hpp"
#include "aligngain/specfun.hpp"
#include "doctest.h"
#include "reference_values.hpp"

using namespace aligngain;

namespace {
constexpr double kPi = 3.14159265358979323846;

AlignmentParams dc(double p_g, double p_m) {
  AlignmentParams ap;
  ap.p_g = p_g;
  ap.p_m = p_m;
  return ap;
}

AlignmentParams ac(double q_g, double q_m) {
  AlignmentParams ap;
  ap.q_g = q_g;
  ap.q_m = q_m;
  return ap;
}
} // namespace

TEST_CASE("alignment_params: zero field and frozen unit chain") {
  MolecularSpecies sp{"test", 10.0, 0.0, 0.0, 0.0};

  const AlignmentParams zero = alignment_params(sp, ControlField::dc(0.0, 300.0));
  CHECK(zero.p_g == 0.0);
  CHECK(zero.p_m == 0.0);
  CHECK(zero.q_g == 0.0);
  CHECK(zero.q_m == 0.0);

  // mu = 10 D, T = 70 K, E0 = 28 kV/mm
  const AlignmentParams ap = alignment_params(sp, ControlField::dc(2.8e7, 70.0));
  CHECK(std::abs(ap.p_g - refv::kAlignP_10D_70K_28kVmm) <= 1e-12);
  CHECK(ap.p_g == doctest::Approx(0.9664).epsilon(5.2e-4));
  CHECK(ap.p_m == 0.0);

  // p = 1 exactly at the inverse field
  CHECK(std::abs(field_for_p(10.0, 70.0, 1.0) - refv::kFieldForP1_10D_70K) <= 1e-4);
  const AlignmentParams unit =
      alignment_params(sp, ControlField::dc(field_for_p(10.0, 70.0, 1.0), 70.0));
  CHECK(std::abs(unit.p_g - 1.0) <= 1e-14);
}

TEST_CASE("alignment_params: induced-dipole unit chain, q = 1 inversion") {
  MolecularSpecies sp{"stretched", 0.0, 0.0, 1e-23, -1e-23};
  const double e0 = field_for_q(1e-23, 300.0, 1.0);
  CHECK(std::abs(e0 - refv::kFieldForQ1_1em23_300K) <= 1.0);
  const AlignmentParams ap = alignment_params(sp, ControlField::ac(e0, 300.0));
  CHECK(std::abs(ap.q_g - 1.0) <= 1e-14);
  CHECK(std::abs(ap.q_m + 1.0) <= 1e-14); // opposite anisotropy sign
}

TEST_CASE("alignment_params: dc fields induce dipoles too") {
  MolecularSpecies sp{"mixed", 5.0, 1.0, 1e-23, 2e-24};
  const AlignmentParams ap = alignment_params(sp, ControlField::dc(1e8, 200.0));
  CHECK(ap.p_g > 0.0);
  CHECK(ap.q_g > 0.0);
  CHECK(ap.q_m > 0.0);
}

TEST_CASE("alignment_params: round trip E0 -> params -> E0") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> e0_dist(1e3, 1e9);
  std::uniform_real_distribution<double> t_dist(4.0, 600.0);
  MolecularSpecies sp{"rt", 6.5, 2.0, 3e-24, -5e-24};
  for (int i = 0; i < 50; ++i) {
    const double e0 = e0_dist(rng);
    const double t = t_dist(rng);
    const AlignmentParams ap = alignment_params(sp, ControlField::dc(e0, t));
    CHECK(std::abs(field_for_p(sp.mu_g, t, ap.p_g) - e0) <= 1e-10 * e0);
    CHECK(std::abs(field_for_p(sp.mu_m, t, ap.p_m) - e0) <= 1e-10 * e0);
    CHECK(std::abs(field_for_q(sp.dalpha_g, t, ap.q_g) - e0) <= 1e-10 * e0);
    CHECK(std::abs(field_for_q(sp.dalpha_m, t, ap.q_m) - e0) <= 1e-10 * e0);
  }
}

TEST_CASE("alignment_params: domain errors") {
  MolecularSpecies sp{"x", 1.0, 1.0, 0.0, 0.0};
  CHECK_THROWS_AS(alignment_params(sp, ControlField::dc(1e6, 0.0)), DomainError);
  CHECK_THROWS_AS(alignment_params(sp, ControlField::dc(1e6, -5.0)), DomainError);
  CHECK_THROWS_AS(alignment_params(sp, ControlField::dc(-1.0, 300.0)), DomainError);
  MolecularSpecies bad{"x", -1.0, 1.0, 0.0, 0.0};
  CHECK_THROWS_AS(alignment_params(bad, ControlField::dc(1e6, 300.0)), DomainError);
}

TEST_CASE("closed forms: zero-field neutrality (eta_n - 1)/3") {
  for (double eta : {0.0, 0.8, 1.0, 2.0}) {
    const double expect = (eta - 1.0) / 3.0;
    CHECK(std::abs(gain_dc_orthogonal(dc(0, 0), eta).scaled_gain - expect) <= 1e-14);
    CHECK(std::abs(gain_dc_parallel(dc(0, 0), eta).scaled_gain - expect) <= 1e-14);
    CHECK(std::abs(gain_ac_orthogonal(ac(0, 0), eta).scaled_gain - expect) <= 1e-14);
    CHECK(std::abs(gain_ac_parallel(ac(0, 0), eta).scaled_gain - expect) <= 1e-14);
  }
}

TEST_CASE("closed forms: equal distributions cancel exactly at eta_n = 1") {
  for (double p : {0.0, 0.4, 3.0, 42.0}) {
    CHECK(gain_dc_orthogonal(dc(p, p), 1.0).scaled_gain == 0.0);
    CHECK(gain_dc_parallel(dc(p, p), 1.0).scaled_gain == 0.0);
  }
  for (double q : {-7.0, 0.0, 2.5}) {
    CHECK(gain_ac_orthogonal(ac(q, q), 1.0).scaled_gain == 0.0);
    CHECK(gain_ac_parallel(ac(q, q), 1.0).scaled_gain == 0.0);
  }
}

TEST_CASE("gain_dc_orthogonal: frozen values and decoupling limit") {
  CHECK(std::abs(gain_dc_orthogonal(dc(8, 2), 0.8).scaled_gain -
                 refv::kGainDcOrth_8_2_08) <= 1e-15);
  CHECK(gain_dc_orthogonal(dc(8, 2), 0.8).branch == "dc-orthogonal");

  // fully aligned lower level, isotropic upper level
  const double v = gain_dc_orthogonal(dc(1e4, 0), 0.8).scaled_gain;
  CHECK(std::abs(v - refv::kGainDcOrth_1e4_0_08) <= 1e-15);
  CHECK(v == doctest::Approx(0.26657).epsilon(4e-5));
  CHECK(v < 0.8 / 3.0);
}

TEST_CASE("gain_dc_orthogonal: monotone approach to eta_n/3 at p_m = 0") {
  double prev = -1.0;
  for (double pg : {1.0, 10.0, 1e2, 1e3, 1e4, 1e6}) {
    const double v = gain_dc_orthogonal(dc(pg, 0), 0.8).scaled_gain;
    CHECK(v > prev);
    CHECK(v < 0.8 / 3.0);
    prev = v;
  }
}

TEST_CASE("gain_dc_parallel: frozen values and sign structure") {
  CHECK(std::abs(gain_dc_parallel(dc(1, 4), 0.8).scaled_gain -
                 refv::kGainDcPar_1_4_08) <= 1e-15);
  // near the second transparency point of the mu_m = 4 mu_g configuration
  const double v = gain_dc_parallel(dc(6.5, 26), 0.8).scaled_gain;
  CHECK(std::abs(v - refv::kGainDcPar_65_26_08) <= 1e-15);
  CHECK(v == doctest::Approx(0.0012).epsilon(0.17));
  CHECK(gain_dc_parallel(dc(0.2, 0.8), 0.8).scaled_gain < 0.0);
}

TEST_CASE("gain_ac closed forms: frozen values") {
  CHECK(std::abs(gain_ac_orthogonal(ac(2, 0.5), 0.8).scaled_gain -
                 refv::kGainAcOrthHalved_2_05_08) <= 1e-15);
  CHECK(std::abs(gain_ac_orthogonal(ac(5, -5), 0.8).scaled_gain -
                 refv::kGainAcOrthHalved_5_m5_08) <= 1e-13);
  CHECK(std::abs(gain_ac_parallel(ac(-3, 3), 0.8).scaled_gain -
                 refv::kGainAcPar_m3_3_08) <= 1e-13);
  CHECK(std::abs(gain_ac_parallel(ac(0, 1e4), 0.8).scaled_gain -
                 refv::kGainAcPar_0_1e4_08) <= 1e-12);
  CHECK(2.0 * gain_ac_orthogonal(ac(2, 0.5), 0.8).scaled_gain ==
        doctest::Approx(gain_ac_orthogonal_unhalved(ac(2, 0.5), 0.8)).epsilon(1e-15));
}

TEST_CASE("gain_ac_orthogonal: aligned lower level decouples") {
  const double v = gain_ac_orthogonal(ac(1e4, 0), 0.8).scaled_gain;
  CHECK(std::abs(v - 0.8 / 3.0) <= 1e-4);
  CHECK(std::abs(v - 0.26661666) <= 1e-6);
}

TEST_CASE("closed forms: mixed weights are rejected with guidance") {
  AlignmentParams mixed;
  mixed.p_g = 1.0;
  mixed.q_g = 0.5;
  CHECK_THROWS_WITH_AS(gain_dc_orthogonal(mixed, 0.8),
                       doctest::Contains("gain_general"), DomainError);
  CHECK_THROWS_WITH_AS(gain_dc_parallel(mixed, 0.8),
                       doctest::Contains("gain_general"), DomainError);
  CHECK_THROWS_WITH_AS(gain_ac_orthogonal(mixed, 0.8),
                       doctest::Contains("gain_general"), DomainError);
  CHECK_THROWS_WITH_AS(gain_ac_parallel(mixed, 0.8),
                       doctest::Contains("gain_general"), DomainError);
  CHECK_THROWS_AS(gain_dc_orthogonal(dc(-1, 0), 0.8), DomainError);
  CHECK_THROWS_AS(gain_dc_orthogonal(dc(1, 0), -0.1), DomainError);
}

TEST_CASE("gain_general: reduces to each closed form") {
  const auto orth = gain_general(dc(8, 2), 0.8, Geometry::orthogonal());
  CHECK(orth.branch == "oracle");
  CHECK(std::abs(orth.scaled_gain -
                 gain_dc_orthogonal(dc(8, 2), 0.8).scaled_gain) <= 1e-8);

  CHECK(std::abs(gain_general(dc(1, 4), 0.8, Geometry::parallel()).scaled_gain -
                 gain_dc_parallel(dc(1, 4), 0.8).scaled_gain) <= 1e-8);
  CHECK(std::abs(gain_general(ac(2, 0.5), 0.8, Geometry::orthogonal()).scaled_gain -
                 gain_ac_orthogonal(ac(2, 0.5), 0.8).scaled_gain) <= 1e-8);
  CHECK(std::abs(gain_general(ac(-3, 3), 0.8, Geometry::parallel()).scaled_gain -
                 gain_ac_parallel(ac(-3, 3), 0.8).scaled_gain) <= 1e-8);
}

TEST_CASE("gain_general: psi decomposition, dc example at psi = pi/4") {
  const AlignmentParams ap = dc(2.0, 0.5);
  const double par = gain_dc_parallel(ap, 0.8).scaled_gain;
  const double orth = gain_dc_orthogonal(ap, 0.8).scaled_gain;
  const double mixed =
      gain_general(ap, 0.8, Geometry::from_radians(kPi / 4.0)).scaled_gain;
  CHECK(std::abs(mixed - 0.5 * (par + orth)) <= 1e-8);
}

TEST_CASE("gain_general: psi decomposition for random mixed weights") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> p_dist(0.0, 10.0);
  std::uniform_real_distribution<double> q_dist(-8.0, 8.0);
  std::uniform_real_distribution<double> eta_dist(0.0, 1.5);
  std::uniform_real_distribution<double> psi_dist(0.0, kPi / 2.0);
  for (int i = 0; i < 10; ++i) {
    AlignmentParams ap;
    ap.p_g = p_dist(rng);
    ap.p_m = p_dist(rng);
    ap.q_g = q_dist(rng);
    ap.q_m = q_dist(rng);
    const double eta = eta_dist(rng);
    const double psi = psi_dist(rng);
    const double par = gain_general(ap, eta, Geometry::parallel()).scaled_gain;
    const double orth = gain_general(ap, eta, Geometry::orthogonal()).scaled_gain;
    const double mixed =
        gain_general(ap, eta, Geometry::from_radians(psi)).scaled_gain;
    const double c = std::cos(psi), s = std::sin(psi);
    CHECK(std::abs(mixed - (c * c * par + s * s * orth)) <= 1e-8);
    CHECK(std::abs(mixed) <= std::max(1.0, eta));
  }
}

TEST_CASE("geometry: psi range validation") {
  CHECK(Geometry::parallel().psi == 0.0);
  CHECK(Geometry::orthogonal().psi == doctest::Approx(kPi / 2.0));
  CHECK_THROWS_AS(Geometry::from_radians(-0.2), DomainError);
  CHECK_THROWS_AS(Geometry::from_radians(kPi), DomainError);
}

TEST_CASE("populations and absolute gain") {
  const Populations pops{1e15, 8e14};
  CHECK(pops.eta_n() == doctest::Approx(0.8));
  const GainResult r =
      with_absolute_gain(gain_dc_orthogonal(dc(8, 2), pops.eta_n()), 1e-16, 1e15);
  REQUIRE(r.absolute_gain.has_value());
  CHECK(*r.absolute_gain ==
        doctest::Approx(refv::kGainDcOrth_8_2_08 * 1e-16 * 1e15).epsilon(1e-12));
  CHECK_THROWS_AS(with_absolute_gain(GainResult{}, -1.0, 1.0), DomainError);
}
