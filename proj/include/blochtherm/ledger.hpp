#pragma once

#include "blochtherm/bloch.hpp"
#include "blochtherm/strokes.hpp"

namespace blochtherm {

/// Accumulated energy and entropy bookkeeping for one stroke (or a cycle
/// total). Heat is the energy flow tied to entropy change, mech_work the
/// Hamiltonian-control work and coh_work the environment-induced (coherence)
/// work; the three sum to the energy change up to quadrature error.
struct EnergyLedger {
  double heat = 0.0;
  double mech_work = 0.0;
  double coh_work = 0.0;
  double delta_energy = 0.0;
  double delta_entropy = 0.0;
  double clausius = 0.0;  // integral of dQ/T_eff; NaN if T_eff vanished
  double residual_first_law = 0.0;
  double residual_clausius = 0.0;
};

struct FlowRates {
  double heat = 0.0;
  double mech_work = 0.0;
  double coh_work = 0.0;
};

/// Pointwise three-way split of dE/dt:
///   Qdot = -(dB/dt)(bhat.v),  Wdot = -b.(dv/dt),  Cdot = -B (dbhat/dt).v
FlowRates instantaneous_rates(const BlochState& state, const Vec3& state_rate,
                              const LocalField& field, const Vec3& field_rate);

/// Simpson quadrature of the flow rates along a sampled stroke with the field
/// held fixed. Uses the trajectory's analytic rates when present, otherwise
/// finite differences of the samples.
EnergyLedger integrate_ledger(const Trajectory& traj, const LocalField& field,
                              double k_B = 1.0);

/// Clausius integral of dQ/T_eff along the stroke; throws ZeroTemperature if
/// the effective temperature vanishes on the path.
double clausius_entropy(const Trajectory& traj, const LocalField& field,
                        double k_B = 1.0);

double first_law_residual(const EnergyLedger& ledger);

}  // namespace blochtherm
