#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "blochtherm/cycles.hpp"

using namespace blochtherm;

namespace {

constexpr double kPi = std::numbers::pi;

OttoSpec benchmark_otto() { return {1.0, kPi / 3, kPi / 6, 0.4, 0.8, 1.0}; }
CarnotSpec benchmark_carnot() { return {1.0, 0.6, 0.3, 0.4, 0.8, 1.0}; }

}  // namespace

TEST_CASE("otto plan geometry chains and closes") {
  const CyclePlan plan = build_otto(benchmark_otto());
  REQUIRE(plan.strokes.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec3 gap =
        plan.stroke_end(i).vec() - plan.stroke_start((i + 1) % 4).vec();
    CHECK(gap.norm() < 1e-12);
  }
  CHECK(plan.strokes[1].reservoir_temperature.has_value());
  CHECK(plan.strokes[3].reservoir_temperature.has_value());
  CHECK(*plan.strokes[1].reservoir_temperature ==
        doctest::Approx(std::cos(kPi / 6) / std::atanh(0.4)).epsilon(1e-12));
  CHECK(*plan.strokes[3].reservoir_temperature ==
        doctest::Approx(0.4551196).epsilon(1e-7));
}

TEST_CASE("otto spec validation") {
  OttoSpec degenerate_angles = benchmark_otto();
  degenerate_angles.theta2 = degenerate_angles.theta1;
  CHECK_THROWS_AS(build_otto(degenerate_angles), InvalidSpec);

  OttoSpec degenerate_moduli = benchmark_otto();
  degenerate_moduli.b0 = degenerate_moduli.b1;
  CHECK_THROWS_AS(build_otto(degenerate_moduli), InvalidSpec);
}

TEST_CASE("carnot plan derives the four angles from the surfaces") {
  const CyclePlan plan = build_carnot(benchmark_carnot());
  const double expected_cos[4] = {0.3295837, 0.6591674, 0.2541894, 0.1270947};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::cos(plan.strokes[i].theta_from) ==
          doctest::Approx(expected_cos[i]).epsilon(1e-6));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK((plan.stroke_end(i).vec() - plan.stroke_start((i + 1) % 4).vec())
              .norm() < 1e-9);
  }

  CarnotSpec equal_temps = benchmark_carnot();
  equal_temps.t_cold = equal_temps.t_hot;
  CHECK_THROWS_AS(build_carnot(equal_temps), InvalidSpec);

  CarnotSpec too_hot = benchmark_carnot();
  too_hot.t_hot = 1.0 / std::atanh(0.8) + 0.01;  // cos(theta2) > 1
  CHECK_THROWS_AS(build_carnot(too_hot), InfeasibleGeometry);
}

TEST_CASE("otto analytics reproduce the closed-form benchmark") {
  const CycleReport rep = otto_analytics(benchmark_otto());
  CHECK(rep.eta_analytic == doctest::Approx(0.4226497).epsilon(1e-7));
  CHECK(rep.q_hot_analytic == doctest::Approx(0.3464102).epsilon(1e-7));
  CHECK(std::abs(rep.c_net_analytic) == doctest::Approx(0.1464102).epsilon(1e-6));
  CHECK(rep.s_gen_analytic == doctest::Approx(0.2699853).epsilon(1e-6));
  CHECK(rep.t_cold == doctest::Approx(0.4551196).epsilon(1e-7));
  CHECK(rep.t_hot == doctest::Approx(2.0442053).epsilon(1e-7));
  CHECK(rep.eta_carnot_bound == doctest::Approx(0.7773611).epsilon(1e-6));
  CHECK(std::abs(rep.identity_alpha_residual) < 1e-12);
  CHECK(std::abs(rep.identity_gap_residual) < 1e-12);
}

TEST_CASE("otto analytics limits") {
  // theta1 -> theta2: efficiency vanishes linearly with slope tan(theta2)
  OttoSpec near_degenerate = benchmark_otto();
  near_degenerate.theta1 = near_degenerate.theta2 + 1e-6;
  const CycleReport rep = otto_analytics(near_degenerate);
  CHECK(rep.eta_analytic ==
        doctest::Approx(std::tan(kPi / 6) * 1e-6).epsilon(1e-5));
  CHECK(std::abs(rep.c_net_analytic) < 1e-6);

  // B1 -> B0: entropy production vanishes quadratically
  OttoSpec thin = benchmark_otto();
  thin.b1 = thin.b0 + 1e-9;
  const CycleReport thin_rep = otto_analytics(thin);
  CHECK(thin_rep.s_gen_analytic <= 1e-17);
  CHECK(thin_rep.eta_carnot_bound - thin_rep.eta_analytic <= 1e-8);
}

TEST_CASE("carnot analytics reproduce the closed-form benchmark") {
  const CycleReport rep = carnot_analytics(benchmark_carnot());
  CHECK(rep.eta_analytic == 0.5);
  CHECK(rep.q_hot_analytic == doctest::Approx(0.1714688).epsilon(1e-6));
  CHECK(std::abs(rep.c_net_analytic) ==
        doctest::Approx(0.0857344).epsilon(1e-5));
  CHECK(rep.coh_analytic[1] == doctest::Approx(0.2541894).epsilon(1e-6));
  CHECK(rep.s_gen_analytic == 0.0);

  CarnotSpec close = benchmark_carnot();
  close.t_cold = close.t_hot * (1.0 - 1e-9);
  CHECK(carnot_analytics(close).eta_analytic <= 1.1e-9);
}

TEST_CASE("simulated otto cycle matches the analytics") {
  const CycleReport rep = run_cycle(build_otto(benchmark_otto()), 10001);
  CHECK(std::abs(rep.eta_simulated - 0.4226497) < 1e-6);
  CHECK(rep.max_heat_delta < 1e-6);
  CHECK(rep.max_coh_delta < 1e-6);
  CHECK(std::abs(rep.closure_energy) < 1e-8);
  CHECK(std::abs(rep.closure_entropy) < 1e-8);
  CHECK(std::abs(rep.q_hot_simulated + rep.c_net_simulated +
                 rep.strokes[3].ledger.heat) < 1e-7);
  CHECK(rep.s_gen_simulated == doctest::Approx(0.2699853).epsilon(1e-6));
}

TEST_CASE("simulated carnot cycle matches the analytics") {
  const CycleReport rep = run_cycle(build_carnot(benchmark_carnot()), 10001);
  CHECK(std::abs(rep.eta_simulated - 0.5) < 1e-6);
  CHECK(rep.max_heat_delta < 1e-6);
  CHECK(rep.max_coh_delta < 1e-6);
  CHECK(std::abs(rep.s_gen_simulated) < 1e-8);
  // reversibility
  CHECK(std::abs(rep.strokes[1].ledger.heat / rep.t_hot +
                 rep.strokes[3].ledger.heat / rep.t_cold) < 1e-9);
}

TEST_CASE("both isochoric realizations yield the same ledger") {
  const CycleReport purify = run_cycle(build_otto(benchmark_otto()), 10001);
  const CycleReport spectral = run_cycle(
      build_otto(benchmark_otto(), IsochoricRealization::Spectral), 10001);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(purify.strokes[i].ledger.heat -
                   spectral.strokes[i].ledger.heat) < 1e-8);
    CHECK(std::abs(purify.strokes[i].ledger.coh_work -
                   spectral.strokes[i].ledger.coh_work) < 1e-8);
  }
}

TEST_CASE("identity suite over random otto specs") {
  std::mt19937 rng(31415);
  auto uniform = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  for (int i = 0; i < 1000; ++i) {
    OttoSpec spec;
    spec.epsilon = uniform(0.2, 3.0);
    spec.theta2 = uniform(0.01, 1.30);
    spec.theta1 = uniform(spec.theta2 + 0.01, 1.55);
    spec.b0 = uniform(0.02, 0.90);
    spec.b1 = uniform(spec.b0 + 0.01, 0.98);
    const CycleReport rep = otto_analytics(spec);
    CHECK(rep.eta_carnot_bound >= rep.eta_analytic - 1e-15);
    CHECK(rep.s_gen_analytic >= 0.0);
    CHECK(std::abs(rep.identity_gap_residual) < 1e-9);
    CHECK(std::abs(rep.identity_alpha_residual) < 1e-9);
  }
}

TEST_CASE("otto efficiency ignores the isentropic radii") {
  OttoSpec a = benchmark_otto();
  OttoSpec b = benchmark_otto();
  b.b0 = 0.11;
  b.b1 = 0.77;
  CHECK(std::abs(otto_analytics(a).eta_analytic -
                 otto_analytics(b).eta_analytic) < 1e-12);
}

TEST_CASE("entropy production needs the reservoir temperatures") {
  CycleReport rep = run_cycle(build_otto(benchmark_otto()), 2001);
  rep.strokes[1].reservoir_temperature.reset();
  CHECK_THROWS_AS(entropy_production(rep), MissingReservoir);
}
