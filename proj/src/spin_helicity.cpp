#include "photonfield/spin_helicity.hpp"

#include <algorithm>
#include <cmath>

namespace photonfield {

namespace {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

// Global phase fixed so that the first component of largest modulus is real positive.
CVec3 fix_phase(const CVec3& v) {
  int pivot = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(v(i)) > std::abs(v(pivot)) + 1e-12) pivot = i;
  }
  const Complex p = v(pivot);
  return v * (std::conj(p) / std::abs(p));
}

}  // namespace

Eigen::Matrix3cd SpinMatrices::along(const Vec3& k) const {
  return k(0) * components[0] + k(1) * components[1] + k(2) * components[2];
}

SpinMatrices spin_matrices(double hbar) {
  if (!(hbar > 0.0)) throw InvalidInput("hbar must be positive");
  SpinMatrices s;
  for (int j = 0; j < 3; ++j) {
    auto& m = s.components[static_cast<std::size_t>(j)];
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) m(k, l) = -kI * hbar * static_cast<double>(levi_civita(j, k, l));
    }
  }
  return s;
}

double helicity_denominator(const Vec3& k) {
  // On the unit sphere 1 - kx ky - ky kz - kz kx = ((kx-ky)^2 + (ky-kz)^2 + (kz-kx)^2) / 2,
  // which keeps full relative accuracy near the singular directions.
  const Vec3 u = k.normalized();
  const double a = u(0) - u(1), b = u(1) - u(2), c = u(2) - u(0);
  return std::sqrt(0.5 * (a * a + b * b + c * c));
}

HelicityPair helicity_states(const Direction& dir) {
  const Vec3 k = dir.vec().normalized();
  const double d = helicity_denominator(k);
  if (d > kHelicityFormulaThreshold) {
    // 1 - k_x (kx + ky + kz) = ky (ky - kx) + kz (kz - kx) for |k| = 1, free of cancellation.
    const Vec3 real_part(k(1) * (k(1) - k(0)) + k(2) * (k(2) - k(0)), k(2) * (k(2) - k(1)) + k(0) * (k(0) - k(1)),
                         k(0) * (k(0) - k(2)) + k(1) * (k(1) - k(2)));
    const Vec3 imag_part(k(1) - k(2), k(2) - k(0), k(0) - k(1));
    const double norm = 1.0 / (2.0 * d);
    CVec3 plus, minus;
    for (int i = 0; i < 3; ++i) {
      plus(i) = norm * Complex(real_part(i), imag_part(i));
      minus(i) = norm * Complex(real_part(i), -imag_part(i));
    }
    return {plus, minus, true};
  }
  const PolarizationTriad triad = make_triad(dir);
  return {fix_phase(triad.eps_plus), fix_phase(triad.eps_minus), false};
}

Complex momentum_wavefunction(const Vec3& p, const Vec3& r, double hbar) {
  const double amplitude = std::pow(2.0 * kPi * hbar, -1.5);
  return std::polar(amplitude, p.dot(r) / hbar);
}

}  // namespace photonfield
