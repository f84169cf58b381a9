#include "blochtherm/ledger.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace blochtherm {

namespace {

/// Composite Simpson rule on a uniform grid; falls back to a three-point end
/// correction when the interval count is odd.
double simpson(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  std::size_t intervals = n - 1;
  double total = 0.0;
  std::size_t last = n - 1;
  if (intervals % 2 != 0) {
    // integrate the final interval with a quadratic through the last 3 points
    total += h * (5.0 * f[n - 1] + 8.0 * f[n - 2] - f[n - 3]) / 12.0;
    last -= 1;
  }
  double sum = f[0] + f[last];
  for (std::size_t k = 1; k < last; ++k) sum += (k % 2 ? 4.0 : 2.0) * f[k];
  total += h * sum / 3.0;
  return total;
}

std::vector<Vec3> sampled_rates(const Trajectory& traj) {
  if (!traj.rates.empty()) return traj.rates;
  // second-order finite differences of the sampled path
  const std::size_t n = traj.size();
  std::vector<Vec3> rates(n);
  const double h = traj.times[1] - traj.times[0];
  if (n == 2) {
    rates[0] = rates[1] = (traj.states[1].vec() - traj.states[0].vec()) / h;
    return rates;
  }
  rates[0] = (-3.0 * traj.states[0].vec() + 4.0 * traj.states[1].vec() -
              traj.states[2].vec()) /
             (2.0 * h);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    rates[k] = (traj.states[k + 1].vec() - traj.states[k - 1].vec()) / (2.0 * h);
  }
  rates[n - 1] = (3.0 * traj.states[n - 1].vec() -
                  4.0 * traj.states[n - 2].vec() + traj.states[n - 3].vec()) /
                 (2.0 * h);
  return rates;
}

}  // namespace

FlowRates instantaneous_rates(const BlochState& state, const Vec3& state_rate,
                              const LocalField& field, const Vec3& field_rate) {
  const double modulus = state.modulus();
  if (modulus == 0.0) throw ZeroBlochVector("flow rates undefined at B = 0");
  const Vec3 dir = state.direction();
  const double modulus_rate = dir.dot(state_rate);
  const Vec3 dir_rate = (state_rate - modulus_rate * dir) / modulus;

  FlowRates rates;
  rates.heat = -modulus_rate * dir.dot(field.vec());
  rates.mech_work = -state.vec().dot(field_rate);
  rates.coh_work = -modulus * dir_rate.dot(field.vec());
  return rates;
}

EnergyLedger integrate_ledger(const Trajectory& traj, const LocalField& field,
                              double k_B) {
  const std::size_t n = traj.size();
  if (n < 2) throw DegenerateTrajectory("ledger needs at least 2 samples");
  const double h = (traj.times.back() - traj.times.front()) / (n - 1);
  const std::vector<Vec3> rates = sampled_rates(traj);

  std::vector<double> qdot(n), cdot(n), sdot(n);
  bool temperature_ok = true;
  for (std::size_t k = 0; k < n; ++k) {
    const FlowRates r =
        instantaneous_rates(traj.states[k], rates[k], field, Vec3::Zero());
    qdot[k] = r.heat;
    cdot[k] = r.coh_work;
    const double t_eff = effective_temperature(traj.states[k], field, k_B);
    if (std::abs(t_eff) < 1e-12) {
      temperature_ok = false;
      sdot[k] = 0.0;
    } else {
      sdot[k] = r.heat / t_eff;
    }
  }

  EnergyLedger ledger;
  ledger.heat = simpson(qdot, h);
  ledger.coh_work = simpson(cdot, h);
  ledger.mech_work = 0.0;  // field held fixed along the stroke
  ledger.delta_energy = energy(traj.back(), field) - energy(traj.front(), field);
  ledger.delta_entropy = entropy(traj.back(), k_B) - entropy(traj.front(), k_B);
  ledger.clausius = temperature_ok
                        ? simpson(sdot, h)
                        : std::numeric_limits<double>::quiet_NaN();
  ledger.residual_first_law =
      ledger.delta_energy - (ledger.heat + ledger.mech_work + ledger.coh_work);
  ledger.residual_clausius = ledger.clausius - ledger.delta_entropy;
  return ledger;
}

double clausius_entropy(const Trajectory& traj, const LocalField& field,
                        double k_B) {
  const EnergyLedger ledger = integrate_ledger(traj, field, k_B);
  if (std::isnan(ledger.clausius)) {
    throw ZeroTemperature("effective temperature vanishes on the path");
  }
  return ledger.clausius;
}

double first_law_residual(const EnergyLedger& ledger) {
  return ledger.delta_energy -
         (ledger.heat + ledger.mech_work + ledger.coh_work);
}

}  // namespace blochtherm
