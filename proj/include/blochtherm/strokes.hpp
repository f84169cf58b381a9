#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "blochtherm/bloch.hpp"

namespace blochtherm {

/// Coherent rotation db/dt = omega (axis x b).
/// With axis = x and omega > 0 the polar angle theta decreases for states in
/// the b_x = 0 half-plane with b_y >= 0.
struct UnitaryRotation {
  Vec3 axis;
  double omega;
};

/// Single jump operator sqrt(gamma) sigma_x: contracts the modulus as
/// B(t) = B(0) exp(-2 gamma t) while preserving yz-plane directions.
struct SigmaXDissipator {
  double gamma;
};

/// Two jump operators sqrt(lambda)|psi><0|, sqrt(lambda)|psi><1| with |psi>
/// the pure state along target_dir: db/dt = lambda (n - b).
struct PurifyingDissipator {
  Vec3 target_dir;
  double lambda;
};

/// Four jump operators built from the spectral decomposition of the target
/// density matrix: drho/dt = lambda (rho* - rho).
struct SpectralDissipator {
  DensityMatrix target;
  double lambda;
};

using GeneratorSpec = std::variant<UnitaryRotation, SigmaXDissipator,
                                   PurifyingDissipator, SpectralDissipator>;

/// Checks rates > 0, omega != 0, unit axes; throws InvalidGenerator.
void validate(const GeneratorSpec& gen);

/// Right-hand side of the Bloch-coordinate equation of motion.
Vec3 bloch_rhs(const GeneratorSpec& gen, const Vec3& b);

/// Explicit Hamiltonian and jump operators of the generator, used by the
/// density-matrix oracle.
struct LindbladForm {
  Eigen::Matrix2cd hamiltonian = Eigen::Matrix2cd::Zero();
  std::vector<Eigen::Matrix2cd> jumps;
};
LindbladForm lindblad_form(const GeneratorSpec& gen);

/// Time-ordered sampled Bloch path for one stroke. Sample times are strictly
/// increasing and uniformly spaced; rates hold db/dt at each sample when the
/// constructor knows them analytically.
struct Trajectory {
  std::vector<double> times;
  std::vector<BlochState> states;
  std::vector<Vec3> rates;  // empty if no analytic rate is available

  std::size_t size() const { return states.size(); }
  const BlochState& front() const { return states.front(); }
  const BlochState& back() const { return states.back(); }
  double duration() const { return times.back() - times.front(); }
};

enum class ThetaSchedule { Linear, Quadratic };

/// Rotation at constant modulus in the b_x = 0 plane; the in-plane angle from
/// +z changes by delta_theta, linearly in time at unit angular speed.
Trajectory rotate_isentropic(const BlochState& start, double delta_theta,
                             int samples);

/// sigma_x-dissipator stroke: radial contraction B(t) = B0 exp(-2 gamma t)
/// down to b_target; requires 0 < b_target < |start|.
Trajectory contract_isochoric(const BlochState& start, double b_target,
                              double gamma, int samples);

/// Purifying-dissipator stroke: radial expansion
/// B(t) = 1 - (1 - B0) exp(-lambda t) up to b_target in (|start|, 1).
Trajectory purify_isochoric(const BlochState& start, double b_target,
                            double lambda, int samples);

/// Spectral-dissipator stroke: b(t) = b* + (b(0) - b*) exp(-lambda t).
Trajectory relax_to_target(const BlochState& start, const DensityMatrix& target,
                           double lambda, double duration, int samples);

/// Quasi-static path on the isothermal surface B(theta) =
/// tanh(eps cos(theta) / (k_B T)), constructed geometrically in the plane
/// spanned by the field direction and a fixed perpendicular axis.
Trajectory isothermal_path(double temperature, double theta_start,
                           double theta_end, const LocalField& field,
                           int samples, double k_B = 1.0,
                           ThetaSchedule schedule = ThetaSchedule::Linear);

/// Fixed-step classical 4th-order integration of the Bloch equation of
/// motion. The step is shrunk to the nearest divisor of the duration.
Trajectory evolve_lindblad(const GeneratorSpec& gen, const BlochState& start,
                           double duration, double step);

/// Independent verification integrator in the 2x2 density-matrix
/// representation, using the explicit jump operators of the generator.
std::vector<std::pair<double, DensityMatrix>> evolve_density_oracle(
    const GeneratorSpec& gen, const DensityMatrix& start, double duration,
    double step);

}  // namespace blochtherm
