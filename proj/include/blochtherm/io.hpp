#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blochtherm/cycles.hpp"

namespace blochtherm {

using json = nlohmann::ordered_json;

/// 17-significant-digit formatting used for all CSV output.
std::string format_double(double x);

/// Concatenated per-stroke trajectory samples of a simulated cycle report.
/// Columns: t,bx,by,bz,B,theta_rad,E,S,T_eff,Q_cum,W_cum,C_cum
std::string trajectory_csv(const CycleReport& report);

/// Machine-checkable summary: spec, derived geometry, analytic closed forms
/// and (when present) the simulated ledgers and comparison deltas.
json summary_json(const CycleReport& report);

struct SweepRow {
  double value = 0.0;
  bool feasible = false;
  std::string error;  // set when infeasible
  CycleReport report; // valid when feasible
};

std::string sweep_csv(const std::string& parameter,
                      const std::vector<SweepRow>& rows);
json sweep_json(const std::string& parameter, const std::vector<SweepRow>& rows);

}  // namespace blochtherm
