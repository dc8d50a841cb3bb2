#include "photonfield/classical_photon.hpp"

#include <algorithm>
#include <cmath>

namespace photonfield {

ClassicalPhoton::ClassicalPhoton(double omega, const Direction& k, Helicity s, double theta,
                                 const TransverseGauge& gauge)
    : omega_(omega), s_(s), theta_(theta), triad_(make_triad(k, gauge)) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidInput("photon frequency must be positive");
}

FieldPair rotating_vectors(const ClassicalPhoton& photon, double t) {
  const double w = photon.omega();
  const Complex phase = std::polar(1.0, -(w * t + photon.theta()));
  const CVec3 term = (w / std::sqrt(2.0)) * phase * photon.triad().eps(photon.helicity());
  const Vec3 e = 2.0 * term.real();
  return {e, photon.direction().vec().cross(e)};
}

PhotonTensor PhotonTensor::from_matrix(const Eigen::Matrix4d& f) {
  const double asym = (f + f.transpose()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
  if (!f.allFinite() || asym > kAntisymmetryTolerance * scale) {
    throw InvalidInput("photon tensor must be antisymmetric (max |f + f^T| = " + std::to_string(asym) + ")");
  }
  return PhotonTensor(f);
}

PhotonTensor build_tensor(const Vec3& e, const Vec3& b) {
  Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
  f(0, 1) = e(0);
  f(0, 2) = e(1);
  f(0, 3) = e(2);
  f(1, 2) = b(2);
  f(1, 3) = -b(1);
  f(2, 3) = b(0);
  f -= Eigen::Matrix4d(f.transpose());
  return PhotonTensor(f);
}

FieldPair extract_fields(const PhotonTensor& f) {
  return {Vec3(f(0, 1), f(0, 2), f(0, 3)), Vec3(f(2, 3), -f(1, 3), f(1, 2))};
}

Eigen::Matrix4d boost_matrix(const Vec3& beta) {
  const double b2 = beta.squaredNorm();
  if (!beta.allFinite() || b2 >= (1.0 - 1e-9) * (1.0 - 1e-9)) {
    throw InvalidInput("boost velocity must satisfy |beta| < 1");
  }
  Eigen::Matrix4d lambda = Eigen::Matrix4d::Identity();
  if (b2 == 0.0) return lambda;

  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  lambda(0, 0) = gamma;
  for (int i = 0; i < 3; ++i) {
    lambda(0, i + 1) = -gamma * beta(i);
    lambda(i + 1, 0) = -gamma * beta(i);
    for (int j = 0; j < 3; ++j) lambda(i + 1, j + 1) += (gamma - 1.0) * beta(i) * beta(j) / b2;
  }
  return lambda;
}

PhotonTensor boost(const PhotonTensor& f, const Vec3& beta) {
  const Eigen::Matrix4d lambda = boost_matrix(beta);
  return PhotonTensor(lambda * f.matrix() * lambda.transpose());
}

Kinematics kinematics(const ClassicalPhoton& photon, const Units& units) {
  const double energy = units.hbar * photon.omega();
  const Vec3& k = photon.direction().vec();
  return {energy, (energy / units.c) * k, static_cast<double>(sign(photon.helicity())) * units.hbar * k};
}

}  // namespace photonfield
