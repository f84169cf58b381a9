#pragma once

#include <Eigen/Dense>

#include "blochtherm/errors.hpp"

namespace blochtherm {

using Vec3 = Eigen::Vector3d;
using DensityMatrix = Eigen::Matrix2cd;

/// Tolerance by which a Bloch vector may stick out of the unit ball before
/// being rejected; moduli inside (1, 1 + kUnitBallTol] are renormalized.
inline constexpr double kUnitBallTol = 1e-12;

/// Qubit reduced state as a real 3-vector inside the closed unit ball.
class BlochState {
 public:
  explicit BlochState(const Vec3& b);
  BlochState(double bx, double by, double bz) : BlochState(Vec3(bx, by, bz)) {}

  const Vec3& vec() const { return b_; }
  double modulus() const { return b_.norm(); }

  /// Unit vector along the Bloch vector; throws ZeroBlochVector at the origin.
  Vec3 direction() const;

 private:
  Vec3 b_;
};

/// Effective field defining the local Hamiltonian H = -v.sigma; |v| > 0.
class LocalField {
 public:
  explicit LocalField(const Vec3& v);
  LocalField(double vx, double vy, double vz) : LocalField(Vec3(vx, vy, vz)) {}

  const Vec3& vec() const { return v_; }
  double epsilon() const { return eps_; }
  Vec3 direction() const { return v_ / eps_; }

 private:
  Vec3 v_;
  double eps_;
};

struct Constants {
  double k_B = 1.0;
};

// Pauli matrices and v.sigma contraction.
const Eigen::Matrix2cd& pauli_x();
const Eigen::Matrix2cd& pauli_y();
const Eigen::Matrix2cd& pauli_z();
Eigen::Matrix2cd pauli_dot(const Vec3& v);

/// Local Hamiltonian H = -v.sigma.
Eigen::Matrix2cd hamiltonian(const LocalField& field);

/// Internal energy E = -b.v.
double energy(const BlochState& state, const LocalField& field);

/// Von Neumann entropy as a function of the Bloch modulus alone.
double entropy_of_modulus(double modulus, double k_B = 1.0);
double entropy(const BlochState& state, double k_B = 1.0);

/// Negentropy f(B) = B atanh(B) + ln(1 - B^2)/2 = ln 2 - S(B)/k_B.
double negentropy(double modulus);

/// Angle in [0, pi] between the Bloch vector and the field.
double theta_angle(const BlochState& state, const LocalField& field);

/// Effective temperature eps cos(theta) / (k_B atanh(B)).
/// Signed: negative on the population-inverted branch (cos(theta) < 0).
/// Returns 0 at B = 1 (continuity limit); throws ZeroBlochVector at B = 0.
double effective_temperature(const BlochState& state, const LocalField& field,
                             double k_B = 1.0);

/// rho = (I + b.sigma)/2.
DensityMatrix to_density(const BlochState& state);

/// Inverse map; throws NonPhysicalMatrix if rho violates the density-matrix
/// invariants (unit trace, Hermitian, positive to 1e-12).
BlochState from_density(const DensityMatrix& rho);

void validate_density(const DensityMatrix& rho);

/// Trace distance between two qubit density matrices.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace blochtherm
