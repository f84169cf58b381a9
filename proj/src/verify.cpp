#include "blochtherm/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "blochtherm/cycles.hpp"
#include "blochtherm/io.hpp"

namespace blochtherm {

namespace {

constexpr double kPi = std::numbers::pi;

OttoSpec benchmark_otto() {
  return {1.0, kPi / 3.0, kPi / 6.0, 0.4, 0.8, 1.0};
}

CarnotSpec benchmark_carnot() { return {1.0, 0.6, 0.3, 0.4, 0.8, 1.0}; }

struct Checker {
  std::vector<CheckResult> results;

  void add(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, detail});
  }

  /// Passes when |value - expected| <= tol.
  void near(const std::string& name, double value, double expected,
            double tol) {
    const double err = std::abs(value - expected);
    std::ostringstream os;
    os.precision(12);
    os << "value=" << value << " expected=" << expected << " |err|=" << err
       << " tol=" << tol;
    add(name, err <= tol, os.str());
  }

  void below(const std::string& name, double value, double bound) {
    std::ostringstream os;
    os.precision(12);
    os << "value=" << value << " bound=" << bound;
    add(name, value <= bound, os.str());
  }
};

Vec3 bloch_of(const DensityMatrix& rho) {
  return Vec3(2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(),
              rho(0, 0).real() - rho(1, 1).real());
}

double random_in(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

OttoSpec random_otto(std::mt19937& rng) {
  OttoSpec spec;
  spec.epsilon = random_in(rng, 0.2, 3.0);
  spec.k_B = 1.0;
  spec.theta2 = random_in(rng, 0.01, 1.30);
  spec.theta1 = random_in(rng, spec.theta2 + 0.01, 1.55);
  spec.b0 = random_in(rng, 0.02, 0.90);
  spec.b1 = random_in(rng, spec.b0 + 0.01, 0.98);
  return spec;
}

BlochState random_yz_state(std::mt19937& rng) {
  const double modulus = random_in(rng, 0.1, 0.95);
  const double phi = random_in(rng, -kPi / 2.0 + 0.1, kPi / 2.0 - 0.1);
  return BlochState(0.0, modulus * std::sin(phi), modulus * std::cos(phi));
}

/// Max pointwise trace distance between the Bloch-coordinate evolution and
/// the density-matrix oracle on the shared step grid.
double cross_validate(const GeneratorSpec& gen, const BlochState& start,
                      double duration, double step) {
  const Trajectory traj = evolve_lindblad(gen, start, duration, step);
  const auto oracle = evolve_density_oracle(gen, to_density(start), duration, step);
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const Vec3 diff = traj.states[k].vec() - bloch_of(oracle[k].second);
    worst = std::max(worst, 0.5 * diff.norm());
  }
  return worst;
}

void check_integrator(Checker& chk) {
  std::mt19937 rng(20240811);
  const char* names[4] = {"unitary-rotation", "sigma-x-dissipator",
                          "purifying-dissipator", "spectral-dissipator"};
  double worst[4] = {0.0, 0.0, 0.0, 0.0};
  for (int trial = 0; trial < 100; ++trial) {
    const BlochState start = random_yz_state(rng);
    const double sign = rng() % 2 ? 1.0 : -1.0;
    const GeneratorSpec gens[4] = {
        UnitaryRotation{Vec3::UnitX(), sign * random_in(rng, 0.5, 3.0)},
        SigmaXDissipator{random_in(rng, 0.3, 2.0)},
        PurifyingDissipator{random_yz_state(rng).direction(),
                            random_in(rng, 0.3, 2.0)},
        SpectralDissipator{to_density(random_yz_state(rng)),
                           random_in(rng, 0.3, 2.0)},
    };
    for (int g = 0; g < 4; ++g) {
      worst[g] = std::max(worst[g], cross_validate(gens[g], start, 1.0, 1e-3));
    }
  }
  for (int g = 0; g < 4; ++g) {
    chk.below(std::string("integrator cross-validation: ") + names[g],
              worst[g], 1e-8);
  }

  // 4th-order convergence: endpoint error against the exact rotation
  const BlochState start(0.0, 0.0, 0.8);
  const GeneratorSpec rot = UnitaryRotation{Vec3::UnitX(), 1.3};
  auto endpoint_error = [&](double step) {
    const Trajectory traj = evolve_lindblad(rot, start, 1.0, step);
    const double phi = std::atan2(start.vec().y(), start.vec().z()) - 1.3;
    const Vec3 exact(0.0, 0.8 * std::sin(phi), 0.8 * std::cos(phi));
    return (traj.back().vec() - exact).norm();
  };
  const double ratio = endpoint_error(0.05) / endpoint_error(0.025);
  std::ostringstream os;
  os << "error ratio on step halving = " << ratio;
  chk.add("integrator convergence order", ratio >= 12.0 && ratio <= 20.0,
          os.str());
}

void check_structural(Checker& chk, int samples) {
  const CycleReport purify = run_cycle(build_otto(benchmark_otto()), samples);
  const CycleReport spectral = run_cycle(
      build_otto(benchmark_otto(), IsochoricRealization::Spectral), samples);

  double entropy_drift = 0.0;
  double angular_drift = 0.0;
  for (std::size_t i = 0; i < purify.trajectories.size(); ++i) {
    const Trajectory& traj = purify.trajectories[i];
    const bool isentropic = (i == 0 || i == 2);
    const double s0 = entropy(traj.front());
    const Vec3 dir0 = traj.front().direction();
    for (const BlochState& state : traj.states) {
      if (isentropic) {
        entropy_drift = std::max(entropy_drift, std::abs(entropy(state) - s0));
      } else {
        // sin of the angle to the initial direction; acos(dot) would drown
        // a 1e-9 bound in its own roundoff near zero
        angular_drift = std::max(angular_drift,
                                 state.direction().cross(dir0).norm());
      }
    }
  }
  chk.below("isentropic strokes: entropy drift", entropy_drift, 1e-12);
  chk.below("radial strokes: angular drift", angular_drift, 1e-9);

  double ledger_gap = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    ledger_gap = std::max(ledger_gap,
                          std::abs(purify.strokes[i].ledger.heat -
                                   spectral.strokes[i].ledger.heat));
    ledger_gap = std::max(ledger_gap,
                          std::abs(purify.strokes[i].ledger.coh_work -
                                   spectral.strokes[i].ledger.coh_work));
  }
  chk.below("purify vs spectral realization: ledger gap", ledger_gap, 1e-8);
}

void check_determinism(Checker& chk, int samples) {
  const CycleReport a = run_cycle(build_otto(benchmark_otto()), samples);
  const CycleReport b = run_cycle(build_otto(benchmark_otto()), samples);
  const bool csv_equal = trajectory_csv(a) == trajectory_csv(b);
  const bool json_equal = summary_json(a).dump(2) == summary_json(b).dump(2);
  chk.add("render determinism: byte-identical CSV and JSON",
          csv_equal && json_equal,
          csv_equal ? "independent runs render identically"
                    : "CSV outputs differ");

  // summary JSON round-trips the analytic quantities bit-exactly
  const json j = json::parse(summary_json(a).dump());
  const bool roundtrip =
      j["analytic"]["eta"].get<double>() == a.eta_analytic &&
      j["analytic"]["s_gen"].get<double>() == a.s_gen_analytic &&
      j["analytic"]["q_hot"].get<double>() == a.q_hot_analytic;
  chk.add("summary JSON round-trip is bit-exact", roundtrip, "");
}

}  // namespace

std::vector<CheckResult> acceptance_checks(int samples) {
  Checker chk;
  const auto t_start = std::chrono::steady_clock::now();

  // 1. Otto benchmark efficiency
  {
    const auto t0 = std::chrono::steady_clock::now();
    const CycleReport rep = run_cycle(build_otto(benchmark_otto()), samples);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    chk.near("1. Otto benchmark: analytic efficiency", rep.eta_analytic,
             1.0 - 1.0 / std::sqrt(3.0), 1e-12);
    chk.near("1. Otto benchmark: simulated efficiency (rel 1e-6)",
             rep.eta_simulated / rep.eta_analytic, 1.0, 1e-6);
    chk.below("1. Otto benchmark: runtime [s]", elapsed, 1.0);

    // 2. per-stroke ledgers vs the closed forms
    const double expected_q[4] = {0.0, 0.3464102, 0.0, -0.2000000};
    const double expected_c[4] = {-0.2928203, 0.0, 0.1464102, 0.0};
    for (int i = 0; i < 4; ++i) {
      chk.near("2. Otto stroke " + rep.strokes[i].label + ": Q",
               rep.strokes[i].ledger.heat, expected_q[i], 1e-6);
      chk.near("2. Otto stroke " + rep.strokes[i].label + ": C",
               rep.strokes[i].ledger.coh_work, expected_c[i], 1e-6);
    }

    // 4. entropy production
    const OttoSpec spec = benchmark_otto();
    const double s_gen_oracle = spec.k_B * (spec.b1 - spec.b0) *
                                (std::atanh(spec.b1) - std::atanh(spec.b0));
    chk.near("4. Otto S_gen: analytic vs reservoir formula",
             rep.s_gen_analytic, s_gen_oracle, 1e-8);
    chk.near("4. Otto S_gen: simulated", rep.s_gen_simulated, 0.2699854, 1e-6);

    // 6. first law and Clausius per stroke
    for (const StrokeResult& r : rep.strokes) {
      chk.below("6. Otto stroke " + r.label + ": |first-law residual|",
                std::abs(r.ledger.residual_first_law), 1e-8);
      chk.below("6. Otto stroke " + r.label + ": |Clausius residual|",
                std::abs(r.ledger.residual_clausius), 1e-6);
    }
  }

  // 3. Carnot benchmark
  {
    const CycleReport rep = run_cycle(build_carnot(benchmark_carnot()), samples);
    chk.near("3. Carnot benchmark: analytic efficiency", rep.eta_analytic, 0.5,
             1e-12);
    chk.near("3. Carnot benchmark: simulated efficiency", rep.eta_simulated,
             0.5, 1e-6);
    chk.near("3. Carnot isothermal 2->3: Q", rep.strokes[1].ledger.heat,
             0.1714687, 1e-6);
    chk.near("3. Carnot isothermal 2->3: C", rep.strokes[1].ledger.coh_work,
             0.2541894, 1e-6);

    chk.near("4. Carnot S_gen: analytic", rep.s_gen_analytic, 0.0, 1e-12);
    chk.near("4. Carnot S_gen: simulated", rep.s_gen_simulated, 0.0, 1e-8);

    for (const StrokeResult& r : rep.strokes) {
      chk.below("6. Carnot stroke " + r.label + ": |first-law residual|",
                std::abs(r.ledger.residual_first_law), 1e-8);
      chk.below("6. Carnot stroke " + r.label + ": |Clausius residual|",
                std::abs(r.ledger.residual_clausius), 1e-6);
    }
  }

  // 5. identity suite over 1000 random Otto specs
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(987654321);
    bool ordering = true;
    bool s_gen_nonneg = true;
    double worst_gap = 0.0;
    double worst_alpha = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const CycleReport rep = otto_analytics(random_otto(rng));
      ordering = ordering && rep.eta_carnot_bound >= rep.eta_analytic - 1e-15;
      s_gen_nonneg = s_gen_nonneg && rep.s_gen_analytic >= 0.0;
      worst_gap = std::max(worst_gap, std::abs(rep.identity_gap_residual));
      worst_alpha = std::max(worst_alpha, std::abs(rep.identity_alpha_residual));
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    chk.add("5. identity suite: eta_Carnot >= eta_Otto", ordering, "1000 specs");
    chk.add("5. identity suite: S_gen >= 0", s_gen_nonneg, "1000 specs");
    chk.below("5. identity suite: |eta_Otto - (eta_Carnot - T_L S_gen/Q_H)|",
              worst_gap, 1e-9);
    chk.below("5. identity suite: |eta_Carnot - (1 - alpha(1 - eta_Otto))|",
              worst_alpha, 1e-9);
    chk.below("5. identity suite: runtime [s]", elapsed, 10.0);
  }

  // 7. integrator cross-validation and convergence order
  check_integrator(chk);

  // 8. structural invariants
  check_structural(chk, samples);

  // 9. reparameterization invariance of the isothermal ledger
  {
    const CarnotSpec spec = benchmark_carnot();
    const CyclePlan plan = build_carnot(spec);
    const LocalField field(0.0, 0.0, spec.epsilon);
    const Stroke& hot = plan.strokes[1];
    const EnergyLedger linear = integrate_ledger(
        isothermal_path(spec.t_hot, hot.theta_from, hot.theta_to, field,
                        samples, spec.k_B, ThetaSchedule::Linear),
        field, spec.k_B);
    const EnergyLedger quadratic = integrate_ledger(
        isothermal_path(spec.t_hot, hot.theta_from, hot.theta_to, field,
                        samples, spec.k_B, ThetaSchedule::Quadratic),
        field, spec.k_B);
    chk.below("9. reparameterization: |Q_linear - Q_quadratic|",
              std::abs(linear.heat - quadratic.heat), 1e-6);
    chk.below("9. reparameterization: |C_linear - C_quadratic|",
              std::abs(linear.coh_work - quadratic.coh_work), 1e-6);
  }

  // 10. deterministic rendering (CLI-level byte identity is exercised by the
  // acceptance binary, which invokes the executable twice)
  check_determinism(chk, samples);

  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  chk.below("10. full acceptance battery runtime [s]", total, 60.0);
  return chk.results;
}

std::vector<CheckResult> property_checks() {
  Checker chk;
  std::mt19937 rng(13572468);

  // entropy range, monotonicity and the f(B) + S(B)/k_B = ln 2 identity
  {
    bool monotone = true;
    bool in_range = true;
    double worst_identity = 0.0;
    double prev = entropy_of_modulus(0.0);
    for (int k = 1; k < 1000; ++k) {
      const double b = k / 1000.0;
      const double s = entropy_of_modulus(b);
      monotone = monotone && s < prev;
      in_range = in_range && s >= 0.0 && s <= std::numbers::ln2;
      worst_identity =
          std::max(worst_identity,
                   std::abs(negentropy(b) + s - std::numbers::ln2));
      prev = s;
    }
    chk.add("entropy: strictly decreasing in B", monotone, "1000-point grid");
    chk.add("entropy: range [0, k_B ln 2]", in_range, "");
    chk.below("identity f(B) + S(B)/k_B = ln 2", worst_identity, 1e-12);
    chk.near("entropy at B=0", entropy_of_modulus(0.0), std::numbers::ln2,
             1e-15);
    chk.near("entropy at B=1", entropy_of_modulus(1.0), 0.0, 0.0);
  }

  // energy against the density-matrix trace and the conversion round trip
  {
    double worst_energy = 0.0;
    double worst_roundtrip = 0.0;
    for (int i = 0; i < 200; ++i) {
      const BlochState state(random_in(rng, -0.577, 0.577),
                             random_in(rng, -0.577, 0.577),
                             random_in(rng, -0.577, 0.577));
      const LocalField field(random_in(rng, -2, 2), random_in(rng, -2, 2),
                             random_in(rng, 0.1, 2));
      const DensityMatrix rho = to_density(state);
      worst_energy = std::max(
          worst_energy, std::abs(energy(state, field) -
                                 (rho * hamiltonian(field)).trace().real()));
      worst_roundtrip = std::max(
          worst_roundtrip, (from_density(rho).vec() - state.vec()).norm());
    }
    chk.below("energy = tr(rho H)", worst_energy, 1e-12);
    chk.below("to_density/from_density round trip", worst_roundtrip, 1e-12);
  }

  // effective temperature reproduces the Boltzmann temperature on
  // thermal-form states, and its sign tracks cos(theta)
  {
    double worst_rel = 0.0;
    bool sign_ok = true;
    for (int i = 0; i < 200; ++i) {
      // keep eps/(k_B T) <= 5 so tanh stays far from saturation; beyond
      // B ~ 1 - 1e-7 the round trip is limited by double precision, not
      // by the formula
      const double eps = random_in(rng, 0.1, 3.0);
      const double T = eps / random_in(rng, 0.05, 5.0);
      const LocalField field(0.0, 0.0, eps);
      const BlochState thermal(0.0, 0.0, std::tanh(eps / T));
      worst_rel = std::max(
          worst_rel, std::abs(effective_temperature(thermal, field) - T) / T);

      const BlochState tilted = random_yz_state(rng);
      const double t_eff = effective_temperature(tilted, field);
      const double cos_theta = tilted.direction().z();
      sign_ok = sign_ok && ((t_eff < 0.0) == (cos_theta < 0.0));
    }
    chk.below("thermal-state temperature round trip (relative)", worst_rel,
              1e-12);
    chk.add("temperature sign matches cos(theta)", sign_ok, "");
  }

  // rate consistency: Qdot + Wdot + Cdot = dE/dt
  {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const BlochState state = random_yz_state(rng);
      const Vec3 state_rate(random_in(rng, -1, 1), random_in(rng, -1, 1),
                            random_in(rng, -1, 1));
      const Vec3 field_rate(random_in(rng, -1, 1), random_in(rng, -1, 1),
                            random_in(rng, -1, 1));
      const LocalField field(random_in(rng, -2, 2), random_in(rng, -2, 2),
                             random_in(rng, 0.5, 2));
      const FlowRates r = instantaneous_rates(state, state_rate, field, field_rate);
      const double de_dt =
          -state_rate.dot(field.vec()) - state.vec().dot(field_rate);
      worst = std::max(
          worst, std::abs(r.heat + r.mech_work + r.coh_work - de_dt));
    }
    chk.below("rate consistency Qdot+Wdot+Cdot = dE/dt", worst, 1e-12);
  }

  // zero-work characterization: radial stroke heat equals the energy change
  {
    const BlochState start(0.0, 0.8 * std::sin(0.5), 0.8 * std::cos(0.5));
    const LocalField field(0.0, 0.0, 1.0);
    const EnergyLedger ledger =
        integrate_ledger(contract_isochoric(start, 0.3, 0.7, 4001), field);
    chk.below("zero-work stroke: |Q - dE|",
              std::abs(ledger.heat - ledger.delta_energy), 1e-8);
    chk.below("zero-work stroke: |C|", std::abs(ledger.coh_work), 1e-10);
  }

  // Otto efficiency independent of the isentropic radii; epsilon scaling
  {
    OttoSpec a = benchmark_otto();
    OttoSpec b = a;
    b.b0 = 0.15;
    b.b1 = 0.55;
    chk.below("eta_Otto independent of (B0, B1)",
              std::abs(otto_analytics(a).eta_analytic -
                       otto_analytics(b).eta_analytic),
              1e-12);

    OttoSpec scaled = a;
    scaled.epsilon = 7.5;
    const CycleReport ra = otto_analytics(a);
    const CycleReport rs = otto_analytics(scaled);
    double worst = std::abs(rs.eta_analytic - ra.eta_analytic);
    worst = std::max(worst, std::abs(rs.s_gen_analytic - ra.s_gen_analytic));
    for (int i = 0; i < 4; ++i) {
      worst = std::max(worst, std::abs(rs.heat_analytic[i] -
                                       7.5 * ra.heat_analytic[i]));
      worst = std::max(worst, std::abs(rs.coh_analytic[i] -
                                       7.5 * ra.coh_analytic[i]));
    }
    chk.below("epsilon scaling: energies scale, ratios invariant", worst, 1e-12);
  }

  // S_gen rectangle property: fixed width, increasing toward B = 1
  {
    bool increasing = true;
    double prev = -1.0;
    for (int k = 0; k < 50; ++k) {
      const double b0 = 0.02 + 0.55 * k / 49.0;
      const double s = (0.4) * (std::atanh(b0 + 0.4) - std::atanh(b0));
      increasing = increasing && s > prev;
      prev = s;
    }
    chk.add("S_gen increases as the modulus window shifts toward 1",
            increasing, "fixed width 0.4, 50-point grid");
  }

  // Carnot reversibility: Q_H/T_H + Q_C/T_L = 0
  {
    const CycleReport rep = run_cycle(build_carnot(benchmark_carnot()), 4001);
    const double residual = rep.strokes[1].ledger.heat / rep.t_hot +
                            rep.strokes[3].ledger.heat / rep.t_cold;
    chk.below("Carnot reversibility Q_H/T_H + Q_C/T_L", std::abs(residual),
              1e-9);
  }

  // isothermal surface: every sample sits at the prescribed temperature
  {
    const LocalField field(0.0, 0.0, 1.0);
    const Trajectory traj =
        isothermal_path(0.6, std::acos(0.6591674), std::acos(0.2541894), field,
                        2001);
    double worst = 0.0;
    for (const BlochState& state : traj.states) {
      worst = std::max(worst,
                       std::abs(effective_temperature(state, field) - 0.6));
    }
    chk.below("isothermal path: |T_eff - T| along the path", worst, 1e-9);
  }

  return chk.results;
}

std::vector<CheckResult> run_verification(int samples) {
  std::vector<CheckResult> results = property_checks();
  std::vector<CheckResult> acc = acceptance_checks(samples);
  results.insert(results.end(), acc.begin(), acc.end());
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace blochtherm
