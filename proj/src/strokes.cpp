#include "blochtherm/strokes.hpp"

#include <cmath>
#include <complex>

namespace blochtherm {

namespace {

constexpr double kPlaneTol = 1e-9;

Vec3 require_unit(const Vec3& a, const char* what) {
  if (std::abs(a.norm() - 1.0) > 1e-12) {
    throw InvalidGenerator(std::string(what) + " must be unit-normalized");
  }
  return a;
}

/// Pure state along a unit Bloch direction.
Eigen::Vector2cd pure_state(const Vec3& n) {
  const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const double phi = std::atan2(n.y(), n.x());
  Eigen::Vector2cd psi;
  psi << std::cos(theta / 2.0),
      std::polar(std::sin(theta / 2.0), phi);
  return psi;
}

Trajectory constant_trajectory(const BlochState& state, int samples,
                               double duration) {
  Trajectory traj;
  const int n = std::max(samples, 2);
  for (int k = 0; k < n; ++k) {
    traj.times.push_back(duration * k / (n - 1));
    traj.states.push_back(state);
    traj.rates.push_back(Vec3::Zero());
  }
  return traj;
}

void require_samples(int samples) {
  if (samples < 2) throw DegenerateTrajectory("need at least 2 samples");
}

}  // namespace

void validate(const GeneratorSpec& gen) {
  std::visit(
      [](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, UnitaryRotation>) {
          require_unit(g.axis, "rotation axis");
          if (g.omega == 0.0) throw InvalidGenerator("omega must be nonzero");
        } else if constexpr (std::is_same_v<G, SigmaXDissipator>) {
          if (!(g.gamma > 0.0)) throw InvalidGenerator("gamma must be positive");
        } else if constexpr (std::is_same_v<G, PurifyingDissipator>) {
          require_unit(g.target_dir, "target direction");
          if (!(g.lambda > 0.0)) throw InvalidGenerator("lambda must be positive");
        } else {
          validate_density(g.target);
          if (!(g.lambda > 0.0)) throw InvalidGenerator("lambda must be positive");
        }
      },
      gen);
}

Vec3 bloch_rhs(const GeneratorSpec& gen, const Vec3& b) {
  return std::visit(
      [&b](const auto& g) -> Vec3 {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, UnitaryRotation>) {
          return g.omega * g.axis.cross(b);
        } else if constexpr (std::is_same_v<G, SigmaXDissipator>) {
          return Vec3(0.0, -2.0 * g.gamma * b.y(), -2.0 * g.gamma * b.z());
        } else if constexpr (std::is_same_v<G, PurifyingDissipator>) {
          return g.lambda * (g.target_dir - b);
        } else {
          const Vec3 target = from_density(g.target).vec();
          return g.lambda * (target - b);
        }
      },
      gen);
}

LindbladForm lindblad_form(const GeneratorSpec& gen) {
  LindbladForm form;
  const Eigen::Vector2cd e0 = Eigen::Vector2cd::Unit(0);
  const Eigen::Vector2cd e1 = Eigen::Vector2cd::Unit(1);
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, UnitaryRotation>) {
          form.hamiltonian = 0.5 * g.omega * pauli_dot(g.axis);
        } else if constexpr (std::is_same_v<G, SigmaXDissipator>) {
          form.jumps.push_back(std::sqrt(g.gamma) * pauli_x());
        } else if constexpr (std::is_same_v<G, PurifyingDissipator>) {
          const Eigen::Vector2cd psi = pure_state(g.target_dir);
          const double s = std::sqrt(g.lambda);
          form.jumps.push_back(s * psi * e0.adjoint());
          form.jumps.push_back(s * psi * e1.adjoint());
        } else {
          Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(g.target);
          for (int i = 0; i < 2; ++i) {
            const double p = std::max(es.eigenvalues()(i), 0.0);
            const Eigen::Vector2cd psi = es.eigenvectors().col(i);
            const double s = std::sqrt(g.lambda * p);
            form.jumps.push_back(s * psi * e0.adjoint());
            form.jumps.push_back(s * psi * e1.adjoint());
          }
        }
      },
      gen);
  return form;
}

Trajectory rotate_isentropic(const BlochState& start, double delta_theta,
                             int samples) {
  require_samples(samples);
  const double modulus = start.modulus();
  if (std::abs(start.vec().x()) > kPlaneTol * (1.0 + modulus)) {
    throw OutOfPlane("isentropic rotation requires a state in the b_x = 0 plane");
  }
  if (delta_theta == 0.0) return constant_trajectory(start, samples, 1.0);

  // In-plane angle from +z, signed toward +y; unit angular speed.
  const double phi0 = std::atan2(start.vec().y(), start.vec().z());
  const double duration = std::abs(delta_theta);
  const double phi_rate = delta_theta / duration;

  Trajectory traj;
  for (int k = 0; k < samples; ++k) {
    const double s = static_cast<double>(k) / (samples - 1);
    const double phi = phi0 + delta_theta * s;
    traj.times.push_back(duration * s);
    traj.states.emplace_back(0.0, modulus * std::sin(phi), modulus * std::cos(phi));
    traj.rates.emplace_back(0.0, phi_rate * modulus * std::cos(phi),
                            -phi_rate * modulus * std::sin(phi));
  }
  return traj;
}

Trajectory contract_isochoric(const BlochState& start, double b_target,
                              double gamma, int samples) {
  require_samples(samples);
  if (!(gamma > 0.0)) throw InvalidGenerator("gamma must be positive");
  const double b0 = start.modulus();
  if (!(b_target > 0.0) || b_target >= b0) {
    throw InvalidTarget("contraction target must lie in (0, |start|)");
  }
  const Vec3 dir = start.direction();
  const double duration = std::log(b0 / b_target) / (2.0 * gamma);

  Trajectory traj;
  for (int k = 0; k < samples; ++k) {
    const double t = duration * k / (samples - 1);
    const double b = b0 * std::exp(-2.0 * gamma * t);
    traj.times.push_back(t);
    traj.states.emplace_back(b * dir);
    traj.rates.emplace_back(-2.0 * gamma * b * dir);
  }
  return traj;
}

Trajectory purify_isochoric(const BlochState& start, double b_target,
                            double lambda, int samples) {
  require_samples(samples);
  if (!(lambda > 0.0)) throw InvalidGenerator("lambda must be positive");
  const double b0 = start.modulus();
  if (b0 == 0.0) throw ZeroBlochVector("purification direction undefined");
  if (b_target <= b0 || !(b_target < 1.0)) {
    throw InvalidTarget("purification target must lie in (|start|, 1)");
  }
  const Vec3 dir = start.direction();
  const double duration = std::log((1.0 - b0) / (1.0 - b_target)) / lambda;

  Trajectory traj;
  for (int k = 0; k < samples; ++k) {
    const double t = duration * k / (samples - 1);
    const double b = 1.0 - (1.0 - b0) * std::exp(-lambda * t);
    traj.times.push_back(t);
    traj.states.emplace_back(b * dir);
    traj.rates.emplace_back(lambda * (1.0 - b) * dir);
  }
  return traj;
}

Trajectory relax_to_target(const BlochState& start, const DensityMatrix& target,
                           double lambda, double duration, int samples) {
  require_samples(samples);
  if (!(lambda > 0.0)) throw InvalidGenerator("lambda must be positive");
  if (!(duration > 0.0)) throw InvalidTarget("duration must be positive");
  const Vec3 bstar = from_density(target).vec();
  const Vec3 b0 = start.vec();

  Trajectory traj;
  for (int k = 0; k < samples; ++k) {
    const double t = duration * k / (samples - 1);
    const Vec3 b = bstar + (b0 - bstar) * std::exp(-lambda * t);
    traj.times.push_back(t);
    traj.states.emplace_back(b);
    traj.rates.emplace_back(lambda * (bstar - b));
  }
  return traj;
}

Trajectory isothermal_path(double temperature, double theta_start,
                           double theta_end, const LocalField& field,
                           int samples, double k_B,
                           ThetaSchedule schedule) {
  require_samples(samples);
  if (!(temperature > 0.0)) throw InvalidSpec("temperature must be positive");
  if (std::cos(theta_start) <= 0.0 || std::cos(theta_end) <= 0.0) {
    throw NegativeBranch("isothermal path leaves the positive-temperature branch");
  }
  const double eps = field.epsilon();
  const Vec3 vhat = field.direction();
  // Fixed perpendicular axis; +y for the standard z-aligned field.
  Vec3 perp = Vec3::UnitY() - Vec3::UnitY().dot(vhat) * vhat;
  if (perp.norm() < 1e-6) perp = Vec3::UnitZ() - Vec3::UnitZ().dot(vhat) * vhat;
  perp.normalize();

  const double delta = theta_end - theta_start;
  const double beta = eps / (k_B * temperature);

  Trajectory traj;
  for (int k = 0; k < samples; ++k) {
    const double s = static_cast<double>(k) / (samples - 1);
    const double frac = schedule == ThetaSchedule::Linear ? s : s * s;
    const double dfrac = schedule == ThetaSchedule::Linear ? 1.0 : 2.0 * s;
    const double theta = theta_start + delta * frac;
    const double b = std::tanh(beta * std::cos(theta));
    const double db_dtheta = (1.0 - b * b) * (-beta * std::sin(theta));
    const Vec3 radial = std::sin(theta) * perp + std::cos(theta) * vhat;
    const Vec3 tangent = std::cos(theta) * perp - std::sin(theta) * vhat;
    traj.times.push_back(s);
    traj.states.emplace_back(b * radial);
    traj.rates.emplace_back(delta * dfrac * (db_dtheta * radial + b * tangent));
  }
  if (delta == 0.0) {
    for (auto& r : traj.rates) r.setZero();
  }
  return traj;
}

Trajectory evolve_lindblad(const GeneratorSpec& gen, const BlochState& start,
                           double duration, double step) {
  validate(gen);
  if (!(step > 0.0)) throw StepTooLarge("step must be positive");
  if (step > duration) throw StepTooLarge("step exceeds the duration");
  const int n = static_cast<int>(std::ceil(duration / step - 1e-9));
  const double h = duration / n;

  Trajectory traj;
  Vec3 b = start.vec();
  traj.times.push_back(0.0);
  traj.states.push_back(start);
  traj.rates.push_back(bloch_rhs(gen, b));
  for (int k = 1; k <= n; ++k) {
    const Vec3 k1 = bloch_rhs(gen, b);
    const Vec3 k2 = bloch_rhs(gen, b + 0.5 * h * k1);
    const Vec3 k3 = bloch_rhs(gen, b + 0.5 * h * k2);
    const Vec3 k4 = bloch_rhs(gen, b + h * k3);
    b += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    traj.times.push_back(k * h);
    traj.states.emplace_back(b);
    traj.rates.push_back(bloch_rhs(gen, b));
  }
  return traj;
}

std::vector<std::pair<double, DensityMatrix>> evolve_density_oracle(
    const GeneratorSpec& gen, const DensityMatrix& start, double duration,
    double step) {
  validate(gen);
  validate_density(start);
  if (!(step > 0.0)) throw StepTooLarge("step must be positive");
  if (step > duration) throw StepTooLarge("step exceeds the duration");
  const int n = static_cast<int>(std::ceil(duration / step - 1e-9));
  const double h = duration / n;

  const LindbladForm form = lindblad_form(gen);
  std::vector<Eigen::Matrix2cd> jdag_j;
  jdag_j.reserve(form.jumps.size());
  for (const auto& L : form.jumps) jdag_j.push_back(L.adjoint() * L);

  const std::complex<double> img(0.0, 1.0);
  auto rhs = [&](const Eigen::Matrix2cd& rho) {
    Eigen::Matrix2cd d = -img * (form.hamiltonian * rho - rho * form.hamiltonian);
    for (std::size_t i = 0; i < form.jumps.size(); ++i) {
      d += form.jumps[i] * rho * form.jumps[i].adjoint() -
           0.5 * (jdag_j[i] * rho + rho * jdag_j[i]);
    }
    return d;
  };

  std::vector<std::pair<double, DensityMatrix>> out;
  Eigen::Matrix2cd rho = start;
  out.emplace_back(0.0, rho);
  for (int k = 1; k <= n; ++k) {
    const Eigen::Matrix2cd k1 = rhs(rho);
    const Eigen::Matrix2cd k2 = rhs(rho + 0.5 * h * k1);
    const Eigen::Matrix2cd k3 = rhs(rho + 0.5 * h * k2);
    const Eigen::Matrix2cd k4 = rhs(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.emplace_back(k * h, rho);
  }

  if (std::abs(out.back().second.trace().real() - 1.0) > 1e-10) {
    throw NonPhysicalMatrix("oracle integration lost trace normalization");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(out.back().second);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw NonPhysicalMatrix("oracle integration lost positivity");
  }
  return out;
}

}  // namespace blochtherm
