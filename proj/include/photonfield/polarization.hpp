#pragma once

#include <map>
#include <string>
#include <utility>

#include "photonfield/types.hpp"

namespace photonfield {

/// Unit propagation direction. Construction rejects vectors whose norm differs from 1
/// by more than 1e-12.
class Direction {
 public:
  static constexpr double kUnitTolerance = 1e-12;

  explicit Direction(const Vec3& k);

  /// Normalizes a nonzero finite vector.
  static Direction along(const Vec3& v);

  const Vec3& vec() const { return k_; }
  double operator[](int i) const { return k_(i); }

 private:
  Vec3 k_;
};

/// Choice of the transverse axis e_hat. The reference is projected onto the plane
/// orthogonal to k; when |k·primary| exceeds `switch_threshold`, `fallback` is used.
struct TransverseGauge {
  Vec3 primary{1.0, 0.0, 0.0};
  Vec3 fallback{0.0, 1.0, 0.0};
  double switch_threshold = 0.9;
};

/// Orthonormal frame (e_hat, b_hat, k) and the circular polarization vectors
///   eps_plus  = (e_hat + i b_hat)/sqrt(2)
///   eps_minus = (i e_hat + b_hat)/sqrt(2)
struct PolarizationTriad {
  Direction k;
  Vec3 e_hat;
  Vec3 b_hat;
  CVec3 eps_plus;
  CVec3 eps_minus;

  const CVec3& eps(Helicity s) const { return s == Helicity::plus ? eps_plus : eps_minus; }
};

/// Deterministic triad for k; identical inputs give bit-identical triads.
PolarizationTriad make_triad(const Direction& k, const TransverseGauge& gauge = {});

/// (e^{-i theta} eps_plus, e^{-i theta} eps_minus).
std::pair<CVec3, CVec3> phase_shift(const PolarizationTriad& triad, double theta);

/// Maximum residual of each orthogonality / algebraic relation, keyed by name.
struct RelationReport {
  std::map<std::string, double> residuals;

  double max_residual() const;
};

/// Evaluates, for all helicity pairs, the residuals of
///   eps*_s·k = 0,  eps*_s·eps_s' = delta,  eps*_s x eps_s' = s i k delta,
///   k x eps_s = s eps*_{-s},  eps_- = i eps*_+,  eps_s·eps_s' = i delta_{s,-s'},
///   eps_s x eps_s' = s k delta_{s,-s'},
/// plus the helicity completeness relation.
RelationReport check_relations(const PolarizationTriad& triad);

/// sum_s (eps*_s)_i (eps_s)_j, which equals delta_ij - k_i k_j (real part returned).
Eigen::Matrix3d completeness_matrix(const PolarizationTriad& triad);

}  // namespace photonfield
