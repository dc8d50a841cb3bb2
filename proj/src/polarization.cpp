#include "photonfield/polarization.hpp"

#include <algorithm>
#include <cmath>

namespace photonfield {

Direction::Direction(const Vec3& k) : k_(k) {
  if (!k.allFinite() || std::abs(k.norm() - 1.0) > kUnitTolerance) {
    throw InvalidInput("direction must be a unit vector (|k| = " + std::to_string(k.norm()) + ")");
  }
}

Direction Direction::along(const Vec3& v) {
  const double n = v.norm();
  if (!v.allFinite() || n == 0.0) throw InvalidInput("cannot normalize a zero or non-finite vector");
  return Direction(v / n);
}

PolarizationTriad make_triad(const Direction& k, const TransverseGauge& gauge) {
  const Vec3& kv = k.vec();
  Vec3 reference = gauge.primary;
  if (std::abs(kv.dot(reference)) > gauge.switch_threshold) reference = gauge.fallback;

  Vec3 e = reference - reference.dot(kv) * kv;
  const double n = e.norm();
  if (n < 1e-6) throw InvalidInput("transverse gauge reference is parallel to k");
  e /= n;
  const Vec3 b = kv.cross(e);

  const double r = 1.0 / std::sqrt(2.0);
  const CVec3 ec = complexify(e);
  const CVec3 bc = complexify(b);
  return PolarizationTriad{k, e, b, r * (ec + kI * bc), r * (kI * ec + bc)};
}

std::pair<CVec3, CVec3> phase_shift(const PolarizationTriad& triad, double theta) {
  const Complex phase = std::polar(1.0, -theta);
  return {phase * triad.eps_plus, phase * triad.eps_minus};
}

double RelationReport::max_residual() const {
  double m = 0.0;
  for (const auto& [name, value] : residuals) m = std::max(m, value);
  return m;
}

namespace {

double max_abs(const CVec3& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace

RelationReport check_relations(const PolarizationTriad& triad) {
  const CVec3 k = complexify(triad.k.vec());
  constexpr Helicity kBoth[] = {Helicity::plus, Helicity::minus};

  double conj_dot_k = 0, conj_dot = 0, conj_cross = 0, k_cross = 0, dot = 0, cross = 0;
  for (Helicity s : kBoth) {
    const CVec3& es = triad.eps(s);
    const CVec3 es_conj = es.conjugate();
    conj_dot_k = std::max(conj_dot_k, std::abs(bilinear(es_conj, k)));

    const CVec3 expected_k_cross = static_cast<double>(sign(s)) * triad.eps(opposite(s)).conjugate();
    k_cross = std::max(k_cross, max_abs(plain_cross(k, es) - expected_k_cross));

    for (Helicity t : kBoth) {
      const CVec3& et = triad.eps(t);
      const double same = s == t ? 1.0 : 0.0;
      const double flipped = 1.0 - same;
      const double ss = static_cast<double>(sign(s));

      conj_dot = std::max(conj_dot, std::abs(bilinear(es_conj, et) - same));
      conj_cross = std::max(conj_cross, max_abs(plain_cross(es_conj, et) - ss * kI * same * k));
      dot = std::max(dot, std::abs(bilinear(es, et) - kI * flipped));
      cross = std::max(cross, max_abs(plain_cross(es, et) - ss * flipped * k));
    }
  }

  Eigen::Matrix3cd sum = Eigen::Matrix3cd::Zero();
  for (Helicity s : kBoth) sum += triad.eps(s).conjugate() * triad.eps(s).transpose();
  const Eigen::Matrix3d projector = Eigen::Matrix3d::Identity() - triad.k.vec() * triad.k.vec().transpose();

  RelationReport report;
  report.residuals["eps_conj_dot_k"] = conj_dot_k;
  report.residuals["eps_conj_dot_eps"] = conj_dot;
  report.residuals["eps_conj_cross_eps"] = conj_cross;
  report.residuals["k_cross_eps"] = k_cross;
  report.residuals["eps_minus_from_plus"] = max_abs(triad.eps_minus - kI * triad.eps_plus.conjugate());
  report.residuals["eps_dot_eps"] = dot;
  report.residuals["eps_cross_eps"] = cross;
  report.residuals["completeness"] = (sum - projector.cast<Complex>()).cwiseAbs().maxCoeff();
  return report;
}

Eigen::Matrix3d completeness_matrix(const PolarizationTriad& triad) {
  Eigen::Matrix3cd sum = Eigen::Matrix3cd::Zero();
  for (Helicity s : {Helicity::plus, Helicity::minus}) {
    sum += triad.eps(s).conjugate() * triad.eps(s).transpose();
  }
  return sum.real();
}

}  // namespace photonfield
