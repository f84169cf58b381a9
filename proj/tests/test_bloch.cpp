#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "blochtherm/bloch.hpp"

using namespace blochtherm;

namespace {

// Independent long-double oracle for the binary-entropy state function.
long double entropy_oracle(long double b) {
  const long double p = (1.0L + b) / 2.0L;
  const long double q = (1.0L - b) / 2.0L;
  long double s = 0.0L;
  if (p > 0.0L) s -= p * std::log(p);
  if (q > 0.0L) s -= q * std::log(q);
  return s;
}

const LocalField kZField(0.0, 0.0, 1.0);

}  // namespace

TEST_CASE("energy is minus the dot product") {
  CHECK(energy(BlochState(0, 0, 1), kZField) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(energy(BlochState(0, 1, 0), kZField) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(energy(BlochState(0, 0.3, 0.4), kZField) == doctest::Approx(-0.4).epsilon(1e-14));
}

TEST_CASE("energy equals tr(rho H)") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(-0.57, 0.57);
  for (int i = 0; i < 100; ++i) {
    const BlochState state(dist(rng), dist(rng), dist(rng));
    const LocalField field(dist(rng), dist(rng), 1.0 + std::abs(dist(rng)));
    const double via_trace =
        (to_density(state) * hamiltonian(field)).trace().real();
    CHECK(std::abs(energy(state, field) - via_trace) < 1e-12);
  }
}

TEST_CASE("entropy values") {
  CHECK(entropy(BlochState(0, 0, 0)) ==
        doctest::Approx(std::numbers::ln2).epsilon(1e-14));
  CHECK(entropy(BlochState(0, 0, 1)) == 0.0);
  // frozen from the long-double oracle
  CHECK(static_cast<double>(entropy_oracle(0.5L)) ==
        doctest::Approx(0.5623351).epsilon(1e-6));
  CHECK(entropy_of_modulus(0.5) ==
        doctest::Approx(static_cast<double>(entropy_oracle(0.5L))).epsilon(1e-14));
}

TEST_CASE("entropy is monotone decreasing with range [0, ln2]") {
  double prev = entropy_of_modulus(0.0);
  for (int k = 1; k <= 1000; ++k) {
    const double s = entropy_of_modulus(k / 1000.0);
    CHECK(s < prev);
    CHECK(s >= 0.0);
    CHECK(s <= std::numbers::ln2);
    prev = s;
  }
}

TEST_CASE("negentropy identity f(B) + S(B)/k_B = ln 2") {
  for (int k = 0; k < 1000; ++k) {
    const double b = k / 1000.0;
    CHECK(std::abs(negentropy(b) + entropy_of_modulus(b) - std::numbers::ln2) <
          1e-12);
  }
}

TEST_CASE("theta angle") {
  CHECK(theta_angle(BlochState(0, 0, 0.5), kZField) == doctest::Approx(0.0));
  CHECK(theta_angle(BlochState(0, 0.5, 0), kZField) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  const double th = std::numbers::pi / 3;
  CHECK(theta_angle(BlochState(0, 0.3 * std::sin(th), 0.3 * std::cos(th)),
                    kZField) == doctest::Approx(th).epsilon(1e-14));
  CHECK_THROWS_AS(theta_angle(BlochState(0, 0, 0), kZField), ZeroBlochVector);
}

TEST_CASE("effective temperature") {
  CHECK(effective_temperature(BlochState(0, 0, std::tanh(2.0)), kZField) ==
        doctest::Approx(0.5).epsilon(1e-14));
  // frozen: 1/atanh(0.5) and its theta = pi/3 variant
  CHECK(effective_temperature(BlochState(0, 0, 0.5), kZField) ==
        doctest::Approx(1.8204785).epsilon(1e-7));
  const double th = std::numbers::pi / 3;
  CHECK(effective_temperature(
            BlochState(0, 0.5 * std::sin(th), 0.5 * std::cos(th)), kZField) ==
        doctest::Approx(0.9102392).epsilon(1e-7));

  CHECK_THROWS_AS(effective_temperature(BlochState(0, 0, 0), kZField),
                  ZeroBlochVector);
  CHECK(effective_temperature(BlochState(0, 0, 1), kZField) == 0.0);
}

TEST_CASE("thermal-form states reproduce the Boltzmann temperature") {
  std::mt19937 rng(7);
  // eps/(k_B T) capped at 5: past tanh saturation the modulus no longer
  // resolves the temperature in double precision
  std::uniform_real_distribution<double> ratio(0.05, 5.0);
  std::uniform_real_distribution<double> eps_dist(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    const LocalField field(0.0, 0.0, eps_dist(rng));
    const double T = field.epsilon() / ratio(rng);
    const BlochState thermal(0.0, 0.0, std::tanh(field.epsilon() / T));
    CHECK(std::abs(effective_temperature(thermal, field) - T) / T < 1e-12);
  }
}

TEST_CASE("temperature sign follows cos(theta)") {
  CHECK(effective_temperature(BlochState(0, 0.3, -0.4), kZField) < 0.0);
  CHECK(effective_temperature(BlochState(0, 0.3, 0.4), kZField) > 0.0);
}

TEST_CASE("density-matrix conversions") {
  const DensityMatrix mixed = to_density(BlochState(0, 0, 0));
  CHECK((mixed - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <
        1e-15);

  const DensityMatrix up = to_density(BlochState(0, 0, 1));
  CHECK(up(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(up(1, 1)) < 1e-15);

  const DensityMatrix plus = to_density(BlochState(1, 0, 0));
  CHECK((plus.cwiseAbs().array() - 0.5).abs().maxCoeff() < 1e-15);

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-0.57, 0.57);
  for (int i = 0; i < 100; ++i) {
    const BlochState state(dist(rng), dist(rng), dist(rng));
    CHECK((from_density(to_density(state)).vec() - state.vec()).norm() < 1e-12);
    // eigenvalues of rho are (1 +- B)/2
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(to_density(state));
    CHECK(es.eigenvalues()(1) ==
          doctest::Approx((1 + state.modulus()) / 2).epsilon(1e-12));
  }

  DensityMatrix bad = Eigen::Matrix2cd::Identity();  // trace 2
  CHECK_THROWS_AS(from_density(bad), NonPhysicalMatrix);
}

TEST_CASE("unit-ball clamping") {
  const double tiny = 5e-13;
  const BlochState clamped(0.0, 0.0, 1.0 + tiny);
  CHECK(clamped.modulus() <= 1.0);
  CHECK_THROWS_AS(BlochState(0.0, 0.0, 1.0 + 1e-9), NonPhysicalState);
  CHECK_THROWS_AS(LocalField(0.0, 0.0, 0.0), InvalidField);
}
