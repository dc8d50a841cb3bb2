#pragma once

#include "photonfield/polarization.hpp"
#include "photonfield/types.hpp"

namespace photonfield {

/// Classical helicity-s photon of angular frequency omega moving along k, with an
/// initial rotation phase theta.
class ClassicalPhoton {
 public:
  ClassicalPhoton(double omega, const Direction& k, Helicity s, double theta = 0.0,
                  const TransverseGauge& gauge = {});

  double omega() const { return omega_; }
  const Direction& direction() const { return triad_.k; }
  Helicity helicity() const { return s_; }
  double theta() const { return theta_; }
  const PolarizationTriad& triad() const { return triad_; }

 private:
  double omega_;
  Helicity s_;
  double theta_;
  PolarizationTriad triad_;
};

struct FieldPair {
  Vec3 e;
  Vec3 b;
};

/// e_s(t) = (omega/sqrt2) eps_s e^{-i(omega t + theta)} + c.c., b_s(t) = k x e_s(t).
FieldPair rotating_vectors(const ClassicalPhoton& photon, double t);

/// Real antisymmetric 4x4 tensor with f^{0i} = e_i, f^{12} = b_3, f^{13} = -b_2,
/// f^{23} = b_1.
class PhotonTensor {
 public:
  static constexpr double kAntisymmetryTolerance = 1e-12;

  PhotonTensor() : f_(Eigen::Matrix4d::Zero()) {}

  /// Rejects matrices with max |f + f^T| above the tolerance times max(1, max |f|).
  static PhotonTensor from_matrix(const Eigen::Matrix4d& f);

  const Eigen::Matrix4d& matrix() const { return f_; }
  double operator()(int mu, int nu) const { return f_(mu, nu); }

 private:
  explicit PhotonTensor(const Eigen::Matrix4d& f) : f_(f) {}
  Eigen::Matrix4d f_;

  friend PhotonTensor build_tensor(const Vec3& e, const Vec3& b);
  friend PhotonTensor boost(const PhotonTensor& f, const Vec3& beta);
};

PhotonTensor build_tensor(const Vec3& e, const Vec3& b);
FieldPair extract_fields(const PhotonTensor& f);

/// Pure boost Lambda(beta) acting on contravariant components, metric (+,-,-,-).
Eigen::Matrix4d boost_matrix(const Vec3& beta);

/// f' = Lambda f Lambda^T. Rejects |beta| >= 1 - 1e-9.
PhotonTensor boost(const PhotonTensor& f, const Vec3& beta);

struct Kinematics {
  double energy;
  Vec3 momentum;
  Vec3 spin;
};

/// E = hbar omega, P = (hbar omega / c) k, S = s hbar k.
Kinematics kinematics(const ClassicalPhoton& photon, const Units& units = {});

}  // namespace photonfield
