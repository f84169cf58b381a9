#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blochtherm/ledger.hpp"
#include "blochtherm/strokes.hpp"

namespace blochtherm {

/// Otto cycle geometry: two isentropic rotations between theta1 and theta2
/// and two radial isochoric strokes between moduli b0 and b1.
/// Engine regime requires 0 <= theta2 < theta1 < pi/2 and 0 < b0 < b1 < 1.
struct OttoSpec {
  double epsilon = 1.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double b0 = 0.0;
  double b1 = 0.0;
  double k_B = 1.0;
};

/// Carnot cycle parameterized by the reservoir temperatures; the four angles
/// follow from the isothermal surfaces at moduli b0 and b1.
struct CarnotSpec {
  double epsilon = 1.0;
  double t_hot = 0.0;
  double t_cold = 0.0;
  double b0 = 0.0;
  double b1 = 0.0;
  double k_B = 1.0;
};

using CycleSpec = std::variant<OttoSpec, CarnotSpec>;

void validate(const OttoSpec& spec);   // throws InvalidSpec
void validate(const CarnotSpec& spec); // throws InvalidSpec / InfeasibleGeometry

enum class IsochoricRealization { Purify, Spectral };

struct Stroke {
  enum class Kind { Isentropic, IsochoricContract, IsochoricExpand, Isothermal };
  Kind kind;
  std::string label;        // e.g. "1->2"
  double theta_from = 0.0;  // in-plane angle from the field direction
  double theta_to = 0.0;
  double b_from = 0.0;
  double b_to = 0.0;
  double surface_temperature = 0.0;  // isothermal strokes only
  std::optional<double> reservoir_temperature;
};

struct CyclePlan {
  CycleSpec spec;
  LocalField field;
  double k_B = 1.0;
  std::vector<Stroke> strokes;
  IsochoricRealization realization = IsochoricRealization::Purify;
  double dissipation_rate = 1.0;  // gamma / lambda for the isochoric strokes

  BlochState stroke_start(std::size_t i) const;
  BlochState stroke_end(std::size_t i) const;
};

struct StrokeResult {
  std::string label;
  EnergyLedger ledger;           // simulated
  double heat_analytic = 0.0;    // closed-form Q for this stroke
  double coh_analytic = 0.0;     // closed-form C for this stroke
  std::optional<double> reservoir_temperature;
};

struct CycleReport {
  std::string kind;  // "otto" | "carnot"
  CycleSpec spec;

  // derived geometry: per-state angles and moduli at states 1..4
  std::array<double, 4> thetas{};
  std::array<double, 4> moduli{};

  // analytic closed forms
  std::vector<double> heat_analytic;  // per stroke
  std::vector<double> coh_analytic;
  double q_hot_analytic = 0.0;
  double c_net_analytic = 0.0;  // signed sum of coherence work
  double eta_analytic = 0.0;
  double t_cold = 0.0;
  double t_hot = 0.0;
  double alpha = 0.0;  // atanh(b0)/atanh(b1)
  double eta_carnot_bound = 0.0;
  double s_gen_analytic = 0.0;
  double identity_alpha_residual = 0.0;  // eta_c - (1 - alpha (1 - eta_o))
  double identity_gap_residual = 0.0;    // eta_o - (eta_c - T_L S_gen / Q_H)

  // simulated quantities (filled by run_cycle)
  bool simulated = false;
  std::vector<StrokeResult> strokes;
  std::vector<Trajectory> trajectories;
  double q_hot_simulated = 0.0;
  double c_net_simulated = 0.0;
  double eta_simulated = 0.0;
  double s_gen_simulated = 0.0;
  double closure_energy = 0.0;   // sum of dE over the cycle
  double closure_entropy = 0.0;  // sum of dS over the cycle
  double max_heat_delta = 0.0;   // max |Q_sim - Q_analytic| over strokes
  double max_coh_delta = 0.0;
  int samples_per_stroke = 0;
};

CyclePlan build_otto(const OttoSpec& spec,
                     IsochoricRealization realization = IsochoricRealization::Purify);
CyclePlan build_carnot(const CarnotSpec& spec);

/// Analytic part of the report only (no trajectory integration).
CycleReport otto_analytics(const OttoSpec& spec);
CycleReport carnot_analytics(const CarnotSpec& spec);

/// Executes the plan stroke by stroke, integrates the ledgers and attaches
/// the simulated quantities to the analytic report.
CycleReport run_cycle(const CyclePlan& plan, int samples_per_stroke = 10001);

/// Reservoir bookkeeping S_gen = sum(-Q_stroke / T_reservoir) from the
/// simulated per-stroke ledgers; throws MissingReservoir if a heat-exchanging
/// stroke carries no reservoir temperature.
double entropy_production(const CycleReport& report);

}  // namespace blochtherm
