#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace photonfield {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using IVec3 = Eigen::Vector3i;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// Physical constants. Gaussian-style units; both default to 1.
struct Units {
  double hbar = 1.0;
  double c = 1.0;
};

enum class Helicity : int { minus = -1, plus = 1 };

inline int sign(Helicity s) { return static_cast<int>(s); }
inline Helicity opposite(Helicity s) { return s == Helicity::plus ? Helicity::minus : Helicity::plus; }

/// Input that violates an operation's precondition on its values (non-unit direction,
/// occupancy above the cap, unknown mode, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural requirement of an operation is not met by the configured lattice
/// (for example, a mode set missing one helicity where completeness is needed).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested construction would exceed a configured resource guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built on different Fock bases.
class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plain (non-conjugating) bilinear product a·b of complex vectors.
inline Complex bilinear(const CVec3& a, const CVec3& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

/// Plain a x b of complex vectors. Eigen's cross() conjugates the result for complex scalars.
inline CVec3 plain_cross(const CVec3& a, const CVec3& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

inline CVec3 complexify(const Vec3& v) { return v.cast<Complex>(); }

}  // namespace photonfield
