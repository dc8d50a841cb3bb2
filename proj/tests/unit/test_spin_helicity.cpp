#include "doctest.h"
#include "oracles.hpp"
#include "photonfield/polarization.hpp"
#include "photonfield/spin_helicity.hpp"

using namespace photonfield;

namespace {

double dist(const CVec3& a, const CVec3& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Distance between two unit vectors modulo a global phase.
double phase_distance(const CVec3& a, const CVec3& b) {
  const Complex o = b.dot(a);
  return (a - (o / std::abs(o)) * b).norm();
}

double eigen_residual(const Vec3& k, const CVec3& v, double lambda, double hbar = 1.0) {
  return (spin_matrices(hbar).along(k) * v - lambda * v).cwiseAbs().maxCoeff();
}

Vec3 near_axis(std::mt19937_64& rng, double angle) {
  const Vec3 axis = Vec3(1, 1, 1).normalized();
  Vec3 u = oracle::random_unit(rng);
  u = (u - u.dot(axis) * axis).normalized();
  return (axis + angle * u).normalized();
}

}  // namespace

TEST_CASE("spin matrices") {
  const SpinMatrices s = spin_matrices(1.0);
  const auto ref = oracle::spin();
  for (int j = 0; j < 3; ++j) CHECK((s[j] - ref[static_cast<std::size_t>(j)]).cwiseAbs().maxCoeff() == 0.0);
  CHECK(dist(s[2].row(0).transpose(), CVec3(0, Complex(0, -1), 0)) == 0.0);
  CHECK((s[0] * s[1] - s[1] * s[0] - kI * s[2]).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((s[1] * s[2] - s[2] * s[1] - kI * s[0]).cwiseAbs().maxCoeff() < 1e-12);
  const Eigen::Matrix3cd casimir = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
  CHECK((casimir - 2.0 * Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);

  const SpinMatrices h = spin_matrices(0.5);
  CHECK((h[0] * h[1] - h[1] * h[0] - kI * 0.5 * h[2]).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(spin_matrices(0.0), InvalidInput);
}

TEST_CASE("closed-form helicity states at k = z") {
  const HelicityPair chi = helicity_states(Direction(Vec3::UnitZ()));
  CHECK(chi.from_closed_form);
  CHECK(dist(chi.chi_plus, 0.5 * CVec3(Complex(1, -1), Complex(1, 1), 0)) < 1e-15);
  CHECK(dist(chi.chi_minus, 0.5 * CVec3(Complex(1, 1), Complex(1, -1), 0)) < 1e-15);
  const SpinMatrices s = spin_matrices();
  CHECK(dist(s[2] * chi.chi_plus, chi.chi_plus) < 1e-15);
  CHECK(dist(s[2] * chi.chi_minus, -chi.chi_minus) < 1e-15);
  // Overlap with eps_+ is the pure phase e^{i pi/4} in this convention.
  const PolarizationTriad t = make_triad(Direction(Vec3::UnitZ()));
  const Complex o = chi.chi_plus.dot(t.eps_plus);
  CHECK(std::abs(o - std::polar(1.0, kPi / 4)) < 1e-15);
}

TEST_CASE("singular direction uses the fallback") {
  const Direction k = Direction::along(Vec3(1, 1, 1));
  CHECK(helicity_denominator(k.vec()) < 1e-15);
  const HelicityPair chi = helicity_states(k);
  CHECK_FALSE(chi.from_closed_form);
  CHECK(eigen_residual(k.vec(), chi.chi_plus, 1.0) < 1e-10);
  CHECK(eigen_residual(k.vec(), chi.chi_minus, -1.0) < 1e-10);
  // Phase fix: largest-modulus component real positive.
  int pivot = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(chi.chi_plus(i)) > std::abs(chi.chi_plus(pivot)) + 1e-12) pivot = i;
  }
  CHECK(std::abs(chi.chi_plus(pivot).imag()) < 1e-15);
  CHECK(chi.chi_plus(pivot).real() > 0.0);
  CHECK(phase_distance(chi.chi_plus, oracle::spin_eigenvector(k.vec(), 1.0)) < 1e-10);

  const HelicityPair opposite = helicity_states(Direction::along(Vec3(-1, -1, -1)));
  CHECK_FALSE(opposite.from_closed_form);
}

TEST_CASE("helicity invariants over random directions") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 k = oracle::random_unit(rng);
    const HelicityPair chi = helicity_states(Direction(k));
    CHECK(eigen_residual(k, chi.chi_plus, 1.0) < 1e-10);
    CHECK(eigen_residual(k, chi.chi_minus, -1.0) < 1e-10);
    CHECK(std::abs(chi.chi_plus.norm() - 1.0) < 1e-10);
    CHECK(std::abs(chi.chi_minus.norm() - 1.0) < 1e-10);
    CHECK(std::abs(chi.chi_plus.dot(chi.chi_minus)) < 1e-10);
    const PolarizationTriad t = make_triad(Direction(k));
    CHECK(std::abs(std::abs(chi.chi_plus.dot(t.eps_plus)) - 1.0) < 1e-10);
    CHECK(std::abs(std::abs(chi.chi_minus.dot(t.eps_minus)) - 1.0) < 1e-10);
  }
}

TEST_CASE("hbar scales the eigenvalues") {
  const Vec3 k = Vec3(0.2, -0.4, 0.6).normalized();
  const HelicityPair chi = helicity_states(Direction(k));
  CHECK(eigen_residual(k, chi.chi_plus, 2.5, 2.5) < 1e-10);
}

TEST_CASE("near-singular directions on both branches") {
  std::mt19937_64 rng(37);
  for (double angle : {1e-3, 3e-4, 1e-4, 1e-5, 3e-6, 1e-6, 5e-7, 1e-7, 1e-9}) {
    for (int rep = 0; rep < 5; ++rep) {
      const Vec3 k = near_axis(rng, angle);
      const HelicityPair chi = helicity_states(Direction(k));
      CHECK(eigen_residual(k, chi.chi_plus, 1.0) < 1e-10);
      CHECK(eigen_residual(k, chi.chi_minus, -1.0) < 1e-10);
      CHECK(std::abs(chi.chi_plus.norm() - 1.0) < 1e-10);
      const double d = helicity_denominator(k);
      CHECK(chi.from_closed_form == (d > kHelicityFormulaThreshold));
      if (d > 1e-6 && d < 1e-3) {
        CHECK(phase_distance(chi.chi_plus, oracle::spin_eigenvector(k, 1.0)) < 1e-6);
        CHECK(phase_distance(chi.chi_minus, oracle::spin_eigenvector(k, -1.0)) < 1e-6);
      }
    }
  }
}

TEST_CASE("denominator matches the defining expression away from the singular set") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const Vec3 k = oracle::random_unit(rng);
    const double direct = std::sqrt(1.0 - k(0) * k(1) - k(1) * k(2) - k(2) * k(0));
    CHECK(std::abs(helicity_denominator(k) - direct) < 1e-12);
  }
}

TEST_CASE("momentum wavefunction") {
  const double a = std::pow(2.0 * kPi, -1.5);
  CHECK(std::abs(momentum_wavefunction(Vec3::Zero(), Vec3(1, 2, 3)) - a) < 1e-15);
  CHECK(std::abs(a - 0.063493635934240969) < 1e-15);
  CHECK(std::abs(momentum_wavefunction(Vec3(1, 0, 0), Vec3(kPi, 0, 0)) + a) < 1e-15);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const Complex v = momentum_wavefunction(oracle::random_unit(rng) * 3.0, oracle::random_unit(rng) * 7.0, 0.7);
    CHECK(std::abs(std::abs(v) - std::pow(2.0 * kPi * 0.7, -1.5)) < 1e-15);
  }
}
