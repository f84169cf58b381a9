#include "blochtherm/cycles.hpp"

#include <cmath>
#include <numbers>

namespace blochtherm {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

BlochState plane_state(double modulus, double theta) {
  return BlochState(0.0, modulus * std::sin(theta), modulus * std::cos(theta));
}

void common_checks(double epsilon, double k_B, double b0, double b1) {
  if (!(epsilon > 0.0)) throw InvalidSpec("epsilon must be positive");
  if (!(k_B > 0.0)) throw InvalidSpec("k_B must be positive");
  if (!(b0 > 0.0 && b0 < b1 && b1 < 1.0)) {
    throw InvalidSpec("moduli must satisfy 0 < b0 < b1 < 1");
  }
}

struct CarnotAngles {
  std::array<double, 4> theta;  // states 1..4
};

CarnotAngles carnot_angles(const CarnotSpec& spec) {
  const double at1 = std::atanh(spec.b1);
  const double at0 = std::atanh(spec.b0);
  const std::array<double, 4> cosines = {
      spec.k_B * spec.t_cold * at1 / spec.epsilon,
      spec.k_B * spec.t_hot * at1 / spec.epsilon,
      spec.k_B * spec.t_hot * at0 / spec.epsilon,
      spec.k_B * spec.t_cold * at0 / spec.epsilon,
  };
  CarnotAngles angles;
  for (int i = 0; i < 4; ++i) {
    if (!(cosines[i] > 0.0) || cosines[i] > 1.0) {
      throw InfeasibleGeometry("derived cos(theta) leaves (0, 1]");
    }
    angles.theta[i] = std::acos(cosines[i]);
  }
  return angles;
}

}  // namespace

void validate(const OttoSpec& spec) {
  common_checks(spec.epsilon, spec.k_B, spec.b0, spec.b1);
  if (!(spec.theta2 >= 0.0 && spec.theta2 < spec.theta1 &&
        spec.theta1 < kHalfPi)) {
    throw InvalidSpec("angles must satisfy 0 <= theta2 < theta1 < pi/2");
  }
}

void validate(const CarnotSpec& spec) {
  common_checks(spec.epsilon, spec.k_B, spec.b0, spec.b1);
  if (!(spec.t_cold > 0.0 && spec.t_hot > spec.t_cold)) {
    throw InvalidSpec("temperatures must satisfy T_H > T_L > 0");
  }
  carnot_angles(spec);
}

BlochState CyclePlan::stroke_start(std::size_t i) const {
  const Stroke& s = strokes.at(i);
  return plane_state(s.b_from, s.theta_from);
}

BlochState CyclePlan::stroke_end(std::size_t i) const {
  const Stroke& s = strokes.at(i);
  return plane_state(s.b_to, s.theta_to);
}

CyclePlan build_otto(const OttoSpec& spec, IsochoricRealization realization) {
  validate(spec);
  const double t_cold =
      spec.epsilon * std::cos(spec.theta1) / (spec.k_B * std::atanh(spec.b1));
  const double t_hot =
      spec.epsilon * std::cos(spec.theta2) / (spec.k_B * std::atanh(spec.b0));

  CyclePlan plan{spec, LocalField(0.0, 0.0, spec.epsilon), spec.k_B, {},
                 realization};
  plan.strokes = {
      {Stroke::Kind::Isentropic, "1->2", spec.theta1, spec.theta2, spec.b1,
       spec.b1, 0.0, std::nullopt},
      {Stroke::Kind::IsochoricContract, "2->3", spec.theta2, spec.theta2,
       spec.b1, spec.b0, 0.0, t_hot},
      {Stroke::Kind::Isentropic, "3->4", spec.theta2, spec.theta1, spec.b0,
       spec.b0, 0.0, std::nullopt},
      {Stroke::Kind::IsochoricExpand, "4->1", spec.theta1, spec.theta1,
       spec.b0, spec.b1, 0.0, t_cold},
  };
  return plan;
}

CyclePlan build_carnot(const CarnotSpec& spec) {
  validate(spec);
  const CarnotAngles angles = carnot_angles(spec);
  const auto& th = angles.theta;

  CyclePlan plan{spec, LocalField(0.0, 0.0, spec.epsilon), spec.k_B, {}};
  plan.strokes = {
      {Stroke::Kind::Isentropic, "1->2", th[0], th[1], spec.b1, spec.b1, 0.0,
       std::nullopt},
      {Stroke::Kind::Isothermal, "2->3", th[1], th[2], spec.b1, spec.b0,
       spec.t_hot, spec.t_hot},
      {Stroke::Kind::Isentropic, "3->4", th[2], th[3], spec.b0, spec.b0, 0.0,
       std::nullopt},
      {Stroke::Kind::Isothermal, "4->1", th[3], th[0], spec.b0, spec.b1,
       spec.t_cold, spec.t_cold},
  };
  return plan;
}

CycleReport otto_analytics(const OttoSpec& spec) {
  validate(spec);
  const double eps = spec.epsilon;
  const double c1 = std::cos(spec.theta1);
  const double c2 = std::cos(spec.theta2);
  const double at0 = std::atanh(spec.b0);
  const double at1 = std::atanh(spec.b1);

  CycleReport rep;
  rep.kind = "otto";
  rep.spec = spec;
  rep.thetas = {spec.theta1, spec.theta2, spec.theta2, spec.theta1};
  rep.moduli = {spec.b1, spec.b1, spec.b0, spec.b0};

  rep.coh_analytic = {eps * spec.b1 * (c1 - c2), 0.0,
                      eps * spec.b0 * (c2 - c1), 0.0};
  rep.heat_analytic = {0.0, eps * c2 * (spec.b1 - spec.b0), 0.0,
                       eps * c1 * (spec.b0 - spec.b1)};

  rep.q_hot_analytic = rep.heat_analytic[1];
  rep.c_net_analytic = rep.coh_analytic[0] + rep.coh_analytic[2];
  rep.eta_analytic = 1.0 - c1 / c2;
  rep.t_cold = eps * c1 / (spec.k_B * at1);
  rep.t_hot = eps * c2 / (spec.k_B * at0);
  rep.alpha = at0 / at1;
  rep.eta_carnot_bound = 1.0 - rep.t_cold / rep.t_hot;
  rep.s_gen_analytic = spec.k_B * (spec.b1 - spec.b0) * (at1 - at0);
  rep.identity_alpha_residual =
      rep.eta_carnot_bound - (1.0 - rep.alpha * (1.0 - rep.eta_analytic));
  rep.identity_gap_residual =
      rep.eta_analytic -
      (rep.eta_carnot_bound - rep.t_cold * rep.s_gen_analytic / rep.q_hot_analytic);
  return rep;
}

CycleReport carnot_analytics(const CarnotSpec& spec) {
  validate(spec);
  const CarnotAngles angles = carnot_angles(spec);
  const auto& th = angles.theta;
  const double eps = spec.epsilon;
  const double delta_f = negentropy(spec.b1) - negentropy(spec.b0);
  const double log_ratio =
      std::log1p(-spec.b0 * spec.b0) - std::log1p(-spec.b1 * spec.b1);

  CycleReport rep;
  rep.kind = "carnot";
  rep.spec = spec;
  rep.thetas = th;
  rep.moduli = {spec.b1, spec.b1, spec.b0, spec.b0};

  rep.coh_analytic = {eps * spec.b1 * (std::cos(th[0]) - std::cos(th[1])),
                      0.5 * spec.k_B * spec.t_hot * log_ratio,
                      eps * spec.b0 * (std::cos(th[2]) - std::cos(th[3])),
                      -0.5 * spec.k_B * spec.t_cold * log_ratio};
  rep.heat_analytic = {0.0, spec.k_B * spec.t_hot * delta_f, 0.0,
                       -spec.k_B * spec.t_cold * delta_f};

  rep.q_hot_analytic = rep.heat_analytic[1];
  rep.c_net_analytic = rep.coh_analytic[0] + rep.coh_analytic[1] +
                       rep.coh_analytic[2] + rep.coh_analytic[3];
  rep.eta_analytic = 1.0 - spec.t_cold / spec.t_hot;
  rep.t_cold = spec.t_cold;
  rep.t_hot = spec.t_hot;
  rep.alpha = std::atanh(spec.b0) / std::atanh(spec.b1);
  rep.eta_carnot_bound = rep.eta_analytic;
  rep.s_gen_analytic = 0.0;
  return rep;
}

CycleReport run_cycle(const CyclePlan& plan, int samples_per_stroke) {
  CycleReport rep = std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, OttoSpec>) return otto_analytics(s);
        else return carnot_analytics(s);
      },
      plan.spec);

  const std::size_t n = plan.strokes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const BlochState end_i = plan.stroke_end(i);
    const BlochState start_next = plan.stroke_start((i + 1) % n);
    if ((end_i.vec() - start_next.vec()).norm() > 1e-9) {
      throw InvalidSpec("cycle plan does not close");
    }
  }

  rep.simulated = true;
  rep.samples_per_stroke = samples_per_stroke;
  for (std::size_t i = 0; i < n; ++i) {
    const Stroke& s = plan.strokes[i];
    const BlochState start = plan.stroke_start(i);
    Trajectory traj;
    switch (s.kind) {
      case Stroke::Kind::Isentropic:
        traj = rotate_isentropic(start, s.theta_to - s.theta_from,
                                 samples_per_stroke);
        break;
      case Stroke::Kind::IsochoricContract:
        traj = contract_isochoric(start, s.b_to, plan.dissipation_rate,
                                  samples_per_stroke);
        break;
      case Stroke::Kind::IsochoricExpand:
        if (plan.realization == IsochoricRealization::Purify) {
          traj = purify_isochoric(start, s.b_to, plan.dissipation_rate,
                                  samples_per_stroke);
        } else {
          // asymptotic relaxation toward state 1; 30 decay times puts the
          // endpoint within ~1e-13 of the target modulus
          traj = relax_to_target(start, to_density(plan.stroke_end(i)),
                                 plan.dissipation_rate,
                                 30.0 / plan.dissipation_rate,
                                 samples_per_stroke);
        }
        break;
      case Stroke::Kind::Isothermal:
        traj = isothermal_path(s.surface_temperature, s.theta_from, s.theta_to,
                               plan.field, samples_per_stroke, plan.k_B);
        break;
    }

    StrokeResult result;
    result.label = s.label;
    result.ledger = integrate_ledger(traj, plan.field, plan.k_B);
    result.heat_analytic = rep.heat_analytic[i];
    result.coh_analytic = rep.coh_analytic[i];
    result.reservoir_temperature = s.reservoir_temperature;
    rep.strokes.push_back(std::move(result));
    rep.trajectories.push_back(std::move(traj));
  }

  rep.q_hot_simulated = 0.0;
  rep.c_net_simulated = 0.0;
  rep.closure_energy = 0.0;
  rep.closure_entropy = 0.0;
  rep.max_heat_delta = 0.0;
  rep.max_coh_delta = 0.0;
  for (const StrokeResult& r : rep.strokes) {
    if (r.ledger.heat > 0.0) rep.q_hot_simulated += r.ledger.heat;
    rep.c_net_simulated += r.ledger.coh_work;
    rep.closure_energy += r.ledger.delta_energy;
    rep.closure_entropy += r.ledger.delta_entropy;
    rep.max_heat_delta = std::max(rep.max_heat_delta,
                                  std::abs(r.ledger.heat - r.heat_analytic));
    rep.max_coh_delta = std::max(rep.max_coh_delta,
                                 std::abs(r.ledger.coh_work - r.coh_analytic));
  }
  rep.eta_simulated = std::abs(rep.c_net_simulated) / rep.q_hot_simulated;
  rep.s_gen_simulated = entropy_production(rep);
  return rep;
}

double entropy_production(const CycleReport& report) {
  if (!report.simulated) {
    throw MissingReservoir("entropy production requires simulated ledgers");
  }
  double s_gen = 0.0;
  for (const StrokeResult& r : report.strokes) {
    if (r.reservoir_temperature) {
      s_gen += -r.ledger.heat / *r.reservoir_temperature;
    } else if (std::abs(r.heat_analytic) > 0.0 ||
               std::abs(r.ledger.heat) > 1e-9) {
      throw MissingReservoir("heat-exchanging stroke " + r.label +
                             " has no reservoir temperature");
    }
  }
  return s_gen;
}

}  // namespace blochtherm
