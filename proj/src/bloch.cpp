#include "blochtherm/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace blochtherm {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }
}  // namespace

BlochState::BlochState(const Vec3& b) : b_(b) {
  const double n = b_.norm();
  if (n > 1.0 + kUnitBallTol) {
    throw NonPhysicalState("Bloch vector modulus " + std::to_string(n) +
                           " exceeds the unit ball");
  }
  if (n > 1.0) b_ /= n;
}

Vec3 BlochState::direction() const {
  const double n = b_.norm();
  if (n == 0.0) throw ZeroBlochVector("direction undefined at the origin");
  return b_ / n;
}

LocalField::LocalField(const Vec3& v) : v_(v), eps_(v.norm()) {
  if (!(eps_ > 0.0)) throw InvalidField("local field must be nonzero");
}

const Eigen::Matrix2cd& pauli_x() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  return m;
}

const Eigen::Matrix2cd& pauli_y() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, -kI, kI, 0).finished();
  return m;
}

const Eigen::Matrix2cd& pauli_z() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  return m;
}

Eigen::Matrix2cd pauli_dot(const Vec3& v) {
  return v.x() * pauli_x() + v.y() * pauli_y() + v.z() * pauli_z();
}

Eigen::Matrix2cd hamiltonian(const LocalField& field) {
  return -pauli_dot(field.vec());
}

double energy(const BlochState& state, const LocalField& field) {
  return -state.vec().dot(field.vec());
}

double entropy_of_modulus(double modulus, double k_B) {
  if (modulus < 0.0 || modulus > 1.0 + kUnitBallTol) {
    throw NonPhysicalState("modulus outside [0, 1]");
  }
  const double b = std::min(modulus, 1.0);
  return -k_B * (xlogx((1.0 + b) / 2.0) + xlogx((1.0 - b) / 2.0));
}

double entropy(const BlochState& state, double k_B) {
  return entropy_of_modulus(state.modulus(), k_B);
}

double negentropy(double modulus) {
  return modulus * std::atanh(modulus) + 0.5 * std::log1p(-modulus * modulus);
}

double theta_angle(const BlochState& state, const LocalField& field) {
  const double c = state.direction().dot(field.direction());
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double effective_temperature(const BlochState& state, const LocalField& field,
                             double k_B) {
  const double b = state.modulus();
  if (b == 0.0) {
    throw ZeroBlochVector("effective temperature undefined at B = 0");
  }
  if (b >= 1.0) return 0.0;  // limit as B -> 1 at fixed angle
  const double cos_theta = state.direction().dot(field.direction());
  return field.epsilon() * cos_theta / (k_B * std::atanh(b));
}

DensityMatrix to_density(const BlochState& state) {
  return 0.5 * (Eigen::Matrix2cd::Identity() + pauli_dot(state.vec()));
}

void validate_density(const DensityMatrix& rho) {
  constexpr double tol = 1e-12;
  if (std::abs(rho.trace().real() - 1.0) > tol ||
      std::abs(rho.trace().imag()) > tol) {
    throw NonPhysicalMatrix("density matrix trace differs from 1");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw NonPhysicalMatrix("density matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw NonPhysicalMatrix("density matrix has a negative eigenvalue");
  }
}

BlochState from_density(const DensityMatrix& rho) {
  validate_density(rho);
  Vec3 b((rho * pauli_x()).trace().real(), (rho * pauli_y()).trace().real(),
         (rho * pauli_z()).trace().real());
  return BlochState(b);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(a - b);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace blochtherm
