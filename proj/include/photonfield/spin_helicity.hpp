#pragma once

#include <array>

#include "photonfield/polarization.hpp"
#include "photonfield/types.hpp"

namespace photonfield {

/// Spin-1 matrices with (S_j)_{kl} = -i hbar epsilon_{jkl}.
struct SpinMatrices {
  std::array<Eigen::Matrix3cd, 3> components;

  const Eigen::Matrix3cd& operator[](int j) const { return components[static_cast<std::size_t>(j)]; }

  /// S·k
  Eigen::Matrix3cd along(const Vec3& k) const;
};

SpinMatrices spin_matrices(double hbar = 1.0);

struct HelicityPair {
  CVec3 chi_plus;
  CVec3 chi_minus;
  bool from_closed_form = true;

  const CVec3& chi(Helicity s) const { return s == Helicity::plus ? chi_plus : chi_minus; }
};

/// sqrt(1 - kx ky - ky kz - kz kx); vanishes only at k = ±(1,1,1)/sqrt3.
double helicity_denominator(const Vec3& k);

/// Below this denominator the closed-form eigenvectors are replaced by the
/// phase-fixed circular polarization vectors.
inline constexpr double kHelicityFormulaThreshold = 1e-6;

/// Eigenvectors of S·k with eigenvalues ±hbar. The closed form
///   chi_± = (1 - k_x Σk ± i(k_y - k_z), 1 - k_y Σk ± i(k_z - k_x), 1 - k_z Σk ± i(k_x - k_y)) / (2 d)
/// is used when d = helicity_denominator(k) exceeds the threshold, evaluated in a form that is
/// algebraically identical on the unit sphere but avoids cancellation near the singular axis.
HelicityPair helicity_states(const Direction& k);

/// (2 pi hbar)^{-3/2} exp(i p·r / hbar)
Complex momentum_wavefunction(const Vec3& p, const Vec3& r, double hbar = 1.0);

}  // namespace photonfield
