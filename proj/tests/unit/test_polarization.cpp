#include "doctest.h"
#include "oracles.hpp"
#include "photonfield/polarization.hpp"

using namespace photonfield;

namespace {

constexpr double kTol = 1e-12;

double dist(const CVec3& a, const CVec3& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("direction validates unit norm") {
  CHECK_NOTHROW(Direction(Vec3(0, 0, 1)));
  CHECK_THROWS_AS(Direction(Vec3(0, 0, 1.001)), InvalidInput);
  CHECK_THROWS_AS(Direction::along(Vec3::Zero()), InvalidInput);
  CHECK(Direction::along(Vec3(0, 3, 4)).vec().isApprox(Vec3(0, 0.6, 0.8)));
}

TEST_CASE("axis-aligned triads follow the gauge convention") {
  const PolarizationTriad z = make_triad(Direction(Vec3::UnitZ()));
  CHECK(z.e_hat == Vec3::UnitX());
  CHECK(z.b_hat == Vec3::UnitY());
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(dist(z.eps_plus, CVec3(r, Complex(0, r), 0)) < kTol);
  CHECK(dist(z.eps_minus, CVec3(Complex(0, r), r, 0)) < kTol);

  // k = x̂ sits above the switch threshold, so the fallback reference y is used.
  const PolarizationTriad x = make_triad(Direction(Vec3::UnitX()));
  CHECK(std::abs(x.e_hat.dot(Vec3::UnitX())) < kTol);
  CHECK((Vec3::UnitX().cross(x.e_hat) - x.b_hat).norm() == 0.0);
  CHECK(x.e_hat.isApprox(Vec3::UnitY()));
}

TEST_CASE("triads are deterministic and satisfy their invariants") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Direction k(oracle::random_unit(rng));
    const PolarizationTriad a = make_triad(k), b = make_triad(k);
    CHECK(a.e_hat == b.e_hat);
    CHECK(a.eps_plus == b.eps_plus);
    CHECK(std::abs(a.e_hat.dot(k.vec())) < kTol);
    CHECK(std::abs(a.b_hat.dot(k.vec())) < kTol);
    CHECK(std::abs(a.e_hat.dot(a.b_hat)) < kTol);
    CHECK(std::abs(a.e_hat.norm() - 1.0) < kTol);
    CHECK(a.b_hat == k.vec().cross(a.e_hat));
    // Independent rebuild of eps from the real frame.
    CHECK(dist(a.eps_plus, oracle::circular(a.e_hat, a.b_hat, 1)) < kTol);
    CHECK(dist(a.eps_minus, oracle::circular(a.e_hat, a.b_hat, -1)) < kTol);
  }
}

TEST_CASE("phase shift multiplies by e^{-i theta}") {
  const PolarizationTriad z = make_triad(Direction(Vec3::UnitZ()));
  auto [p0, m0] = phase_shift(z, 0.0);
  CHECK(dist(p0, z.eps_plus) == 0.0);
  auto [pp, mp] = phase_shift(z, kPi);
  CHECK(dist(pp, -z.eps_plus) < kTol);
  CHECK(dist(mp, -z.eps_minus) < kTol);
  auto [q, _] = phase_shift(z, kPi / 4);
  const Complex w = std::polar(1.0, -kPi / 4);
  CHECK(dist(q, w * CVec3(1, Complex(0, 1), 0) / std::sqrt(2.0)) < kTol);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(std::abs(q(i)) - std::abs(z.eps_plus(i))) < kTol);
}

TEST_CASE("relations at k = z by hand") {
  const PolarizationTriad z = make_triad(Direction(Vec3::UnitZ()));
  // eps_+ x eps_- = +k
  CHECK(dist(plain_cross(z.eps_plus, z.eps_minus), CVec3(0, 0, 1)) < kTol);
  // eps_- = i conj(eps_+)
  CHECK(dist(kI * z.eps_plus.conjugate(), z.eps_minus) < kTol);
  CHECK(std::abs(z.eps_plus.dot(z.eps_plus) - 1.0) < kTol);  // Eigen dot conjugates the left side
  CHECK(check_relations(z).max_residual() < kTol);
}

TEST_CASE("every relation holds over 1000 random directions") {
  std::mt19937_64 rng(11);
  const char* names[] = {"eps_conj_dot_k", "eps_conj_dot_eps", "eps_conj_cross_eps", "k_cross_eps",
                         "eps_minus_from_plus", "eps_dot_eps", "eps_cross_eps", "completeness"};
  for (int i = 0; i < 1000; ++i) {
    const RelationReport r = check_relations(make_triad(Direction(oracle::random_unit(rng))));
    for (const char* n : names) {
      REQUIRE(r.residuals.count(n) == 1);
      CHECK(r.residuals.at(n) < kTol);
    }
  }
}

TEST_CASE("relation checker detects a broken triad") {
  PolarizationTriad t = make_triad(Direction(Vec3::UnitZ()));
  t.eps_minus = t.eps_plus;
  CHECK(check_relations(t).max_residual() > 0.5);
}

TEST_CASE("completeness matrix") {
  const auto z = completeness_matrix(make_triad(Direction(Vec3::UnitZ())));
  CHECK((z - Eigen::Vector3d(1, 1, 0).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < kTol);
  const auto x = completeness_matrix(make_triad(Direction(Vec3::UnitX())));
  CHECK((x - Eigen::Vector3d(0, 1, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < kTol);
  const auto d = completeness_matrix(make_triad(Direction::along(Vec3(1, 1, 1))));
  const Eigen::Matrix3d expected = Eigen::Matrix3d::Identity() - Eigen::Matrix3d::Constant(1.0 / 3.0);
  CHECK((d - expected).cwiseAbs().maxCoeff() < kTol);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Vec3 k = oracle::random_unit(rng);
    const Eigen::Matrix3d m = completeness_matrix(make_triad(Direction(k)));
    CHECK((m * m - m).cwiseAbs().maxCoeff() < kTol);
    CHECK((m * k).cwiseAbs().maxCoeff() < kTol);
    CHECK((m - m.transpose()).cwiseAbs().maxCoeff() < kTol);
    CHECK(std::abs(m.trace() - 2.0) < kTol);
  }
}

TEST_CASE("custom gauge reference") {
  TransverseGauge g;
  g.primary = Vec3(0, 0, 1);
  g.fallback = Vec3(1, 0, 0);
  const PolarizationTriad t = make_triad(Direction(Vec3::UnitY()), g);
  CHECK(t.e_hat.isApprox(Vec3::UnitZ()));
  CHECK(check_relations(t).max_residual() < kTol);
}
