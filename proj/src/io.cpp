#include "blochtherm/io.hpp"

#include <cmath>
#include <cstdio>

namespace blochtherm {

namespace {

LocalField report_field(const CycleReport& report) {
  const double eps = std::visit([](const auto& s) { return s.epsilon; },
                                report.spec);
  return LocalField(0.0, 0.0, eps);
}

double report_kb(const CycleReport& report) {
  return std::visit([](const auto& s) { return s.k_B; }, report.spec);
}

json spec_json(const CycleReport& report) {
  json j;
  std::visit(
      [&j](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        j["epsilon"] = s.epsilon;
        j["k_B"] = s.k_B;
        if constexpr (std::is_same_v<S, OttoSpec>) {
          j["theta1_rad"] = s.theta1;
          j["theta2_rad"] = s.theta2;
        } else {
          j["t_hot"] = s.t_hot;
          j["t_cold"] = s.t_cold;
        }
        j["b0"] = s.b0;
        j["b1"] = s.b1;
      },
      report.spec);
  return j;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string trajectory_csv(const CycleReport& report) {
  if (!report.simulated) {
    throw IoError("trajectory CSV requires a simulated report");
  }
  const LocalField field = report_field(report);
  const double k_B = report_kb(report);

  std::string out = "t,bx,by,bz,B,theta_rad,E,S,T_eff,Q_cum,W_cum,C_cum\n";
  double t_offset = 0.0;
  double q_cum = 0.0, w_cum = 0.0, c_cum = 0.0;
  FlowRates prev{};
  for (std::size_t si = 0; si < report.trajectories.size(); ++si) {
    const Trajectory& traj = report.trajectories[si];
    for (std::size_t k = 0; k < traj.size(); ++k) {
      const BlochState& state = traj.states[k];
      const FlowRates rates =
          instantaneous_rates(state, traj.rates[k], field, Vec3::Zero());
      if (k > 0) {
        const double dt = traj.times[k] - traj.times[k - 1];
        q_cum += 0.5 * dt * (prev.heat + rates.heat);
        w_cum += 0.5 * dt * (prev.mech_work + rates.mech_work);
        c_cum += 0.5 * dt * (prev.coh_work + rates.coh_work);
      }
      prev = rates;
      if (si > 0 && k == 0) continue;  // junction sample already emitted
      const Vec3& b = state.vec();
      out += format_double(t_offset + traj.times[k]);
      out += ',';
      out += format_double(b.x()); out += ',';
      out += format_double(b.y()); out += ',';
      out += format_double(b.z()); out += ',';
      out += format_double(state.modulus()); out += ',';
      out += format_double(theta_angle(state, field)); out += ',';
      out += format_double(energy(state, field)); out += ',';
      out += format_double(entropy(state, k_B)); out += ',';
      out += format_double(effective_temperature(state, field, k_B)); out += ',';
      out += format_double(q_cum); out += ',';
      out += format_double(w_cum); out += ',';
      out += format_double(c_cum); out += '\n';
    }
    t_offset += traj.duration();
  }
  return out;
}

json summary_json(const CycleReport& report) {
  json j;
  j["kind"] = report.kind;
  j["samples_per_stroke"] = report.samples_per_stroke;
  j["spec"] = spec_json(report);

  json geometry;
  geometry["thetas_rad"] = report.thetas;
  geometry["moduli"] = report.moduli;
  geometry["t_cold"] = report.t_cold;
  geometry["t_hot"] = report.t_hot;
  geometry["alpha"] = report.alpha;
  j["geometry"] = geometry;

  json analytic;
  analytic["per_stroke"] = json::array();
  const char* labels[4] = {"1->2", "2->3", "3->4", "4->1"};
  for (std::size_t i = 0; i < report.heat_analytic.size(); ++i) {
    json stroke;
    stroke["label"] = labels[i];
    stroke["Q"] = report.heat_analytic[i];
    stroke["C"] = report.coh_analytic[i];
    analytic["per_stroke"].push_back(stroke);
  }
  analytic["q_hot"] = report.q_hot_analytic;
  analytic["c_net"] = report.c_net_analytic;
  analytic["eta"] = report.eta_analytic;
  analytic["eta_carnot_bound"] = report.eta_carnot_bound;
  analytic["s_gen"] = report.s_gen_analytic;
  analytic["identity_alpha_residual"] = report.identity_alpha_residual;
  analytic["identity_gap_residual"] = report.identity_gap_residual;
  j["analytic"] = analytic;

  if (report.simulated) {
    json sim;
    sim["per_stroke"] = json::array();
    for (const StrokeResult& r : report.strokes) {
      json stroke;
      stroke["label"] = r.label;
      stroke["Q"] = r.ledger.heat;
      stroke["W"] = r.ledger.mech_work;
      stroke["C"] = r.ledger.coh_work;
      stroke["dE"] = r.ledger.delta_energy;
      stroke["dS"] = r.ledger.delta_entropy;
      stroke["clausius"] = r.ledger.clausius;
      stroke["residual_first_law"] = r.ledger.residual_first_law;
      stroke["residual_clausius"] = r.ledger.residual_clausius;
      if (r.reservoir_temperature) {
        stroke["reservoir_T"] = *r.reservoir_temperature;
      } else {
        stroke["reservoir_T"] = nullptr;
      }
      sim["per_stroke"].push_back(stroke);
    }
    sim["q_hot"] = report.q_hot_simulated;
    sim["c_net"] = report.c_net_simulated;
    sim["eta"] = report.eta_simulated;
    sim["s_gen"] = report.s_gen_simulated;
    sim["closure_energy"] = report.closure_energy;
    sim["closure_entropy"] = report.closure_entropy;
    sim["max_heat_delta"] = report.max_heat_delta;
    sim["max_coh_delta"] = report.max_coh_delta;
    j["simulated"] = sim;
  }
  return j;
}

std::string sweep_csv(const std::string& parameter,
                      const std::vector<SweepRow>& rows) {
  std::string out = parameter +
      ",feasible,eta_analytic,eta_simulated,q_hot,c_net,s_gen,"
      "eta_carnot_bound,error\n";
  for (const SweepRow& row : rows) {
    out += format_double(row.value);
    out += ',';
    if (row.feasible) {
      const CycleReport& r = row.report;
      out += "1,";
      out += format_double(r.eta_analytic); out += ',';
      out += format_double(r.eta_simulated); out += ',';
      out += format_double(r.q_hot_simulated); out += ',';
      out += format_double(r.c_net_simulated); out += ',';
      out += format_double(r.s_gen_simulated); out += ',';
      out += format_double(r.eta_carnot_bound); out += ',';
      out += '\n';
    } else {
      out += "0,,,,,,,";
      out += row.error;
      out += '\n';
    }
  }
  return out;
}

json sweep_json(const std::string& parameter,
                const std::vector<SweepRow>& rows) {
  json j;
  j["parameter"] = parameter;
  j["rows"] = json::array();
  for (const SweepRow& row : rows) {
    json entry;
    entry["value"] = row.value;
    entry["feasible"] = row.feasible;
    if (row.feasible) {
      const CycleReport& r = row.report;
      entry["eta_analytic"] = r.eta_analytic;
      entry["eta_simulated"] = r.eta_simulated;
      entry["q_hot"] = r.q_hot_simulated;
      entry["c_net"] = r.c_net_simulated;
      entry["s_gen"] = r.s_gen_simulated;
      entry["eta_carnot_bound"] = r.eta_carnot_bound;
    } else {
      entry["error"] = row.error;
    }
    j["rows"].push_back(entry);
  }
  return j;
}

}  // namespace blochtherm
