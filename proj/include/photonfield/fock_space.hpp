#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "photonfield/polarization.hpp"
#include "photonfield/sparse_operator.hpp"
#include "photonfield/types.hpp"

namespace photonfield {

/// A (helicity, lattice momentum index) label. The momentum is p = (2 pi hbar / L) n.
struct ModeSpec {
  Helicity s = Helicity::plus;
  IVec3 n = IVec3::Zero();

  friend bool operator==(const ModeSpec& a, const ModeSpec& b) { return a.s == b.s && a.n == b.n; }
};

/// Periodic box of side L with a finite list of modes and a per-mode occupancy cap.
struct LatticeConfig {
  double box_length = 2.0 * kPi;
  Units units;
  std::vector<ModeSpec> modes;
  int n_max = 1;
  TransverseGauge gauge;
  std::size_t max_dimension = 65536;
  /// Budget for the nonzeros of a single field component operator, ~2 * modes * dim.
  std::size_t max_nonzeros = 200000;
};

/// All momenta n with max_i |n_i| <= cutoff (n != 0), each with both helicities.
std::vector<ModeSpec> cube_modes(int cutoff);

struct Mode {
  Helicity s;
  IVec3 n;
  Vec3 p;
  double omega;
  PolarizationTriad triad;

  const Vec3& k() const { return triad.k.vec(); }
  const CVec3& eps() const { return triad.eps(s); }
};

/// The derived, immutable mode list of a lattice. Independent of any Fock truncation,
/// so lattice sums over many modes do not require a Fock basis.
class ModeSet {
 public:
  explicit ModeSet(const LatticeConfig& config);

  const std::vector<Mode>& modes() const { return modes_; }
  std::size_t size() const { return modes_.size(); }
  const Mode& operator[](std::size_t i) const { return modes_[i]; }

  double box_length() const { return box_length_; }
  const Units& units() const { return units_; }
  /// Momentum-space cell volume (2 pi hbar / L)^3.
  double delta3p() const { return delta3p_; }

  /// Index of `spec` in the mode list; throws InvalidInput for an unknown mode.
  std::size_t index_of(const ModeSpec& spec) const;
  bool contains(const ModeSpec& spec) const;

  /// Distinct momentum indices in first-appearance order.
  std::vector<IVec3> distinct_momenta() const;
  /// Every momentum present with both helicities.
  bool has_both_helicities() const;
  /// The momentum set is closed under n -> -n.
  bool momentum_symmetric() const;

 private:
  double box_length_;
  Units units_;
  double delta3p_;
  std::vector<Mode> modes_;
};

/// Truncated multi-mode occupation-number basis. Index ordering is lexicographic in
/// the occupancy tuple with the first mode most significant.
class FockBasis {
 public:
  const ModeSet& mode_set() const { return modes_; }
  const std::vector<Mode>& modes() const { return modes_.modes(); }
  std::size_t num_modes() const { return modes_.size(); }
  int n_max() const { return n_max_; }
  std::size_t dim() const { return dim_; }
  std::uint64_t id() const { return id_; }

  std::size_t stride(std::size_t mode) const { return strides_[mode]; }
  int occupancy(std::size_t index, std::size_t mode) const {
    return static_cast<int>((index / strides_[mode]) % static_cast<std::size_t>(n_max_ + 1));
  }
  std::vector<int> occupancies(std::size_t index) const;
  /// Throws InvalidInput for a tuple of the wrong length or with entries outside [0, n_max].
  std::size_t index_of(std::span<const int> occupancies) const;

 private:
  FockBasis(ModeSet modes, int n_max);
  friend FockBasis build_basis(const LatticeConfig& config);

  ModeSet modes_;
  int n_max_;
  std::size_t dim_;
  std::vector<std::size_t> strides_;
  std::uint64_t id_;
};

/// Throws InvalidInput for an invalid lattice and ResourceLimitError when the dimension
/// guard or the nonzero budget would be exceeded.
FockBasis build_basis(const LatticeConfig& config);

SparseOperator creation(const FockBasis& basis, std::size_t mode);
SparseOperator creation(const FockBasis& basis, const ModeSpec& mode);
SparseOperator annihilation(const FockBasis& basis, std::size_t mode);
SparseOperator annihilation(const FockBasis& basis, const ModeSpec& mode);

SparseOperator number_operator(const FockBasis& basis, std::size_t mode);
SparseOperator number_operator(const FockBasis& basis, const ModeSpec& mode);
SparseOperator total_number(const FockBasis& basis);
SparseOperator identity(const FockBasis& basis);

/// Orthogonal projector onto tuples with every occupancy <= n_max - margin.
SparseOperator safe_projector(const FockBasis& basis, int margin);

/// sum_m (a_coeffs[m] a_m + adag_coeffs[m] a_m^dag)
SparseOperator ladder_sum(const FockBasis& basis, std::span<const Complex> a_coeffs,
                          std::span<const Complex> adag_coeffs, Symmetry symmetry = Symmetry::none);

/// Diagonal operator sum_m weights[m] N_m.
SparseOperator weighted_number(const FockBasis& basis, std::span<const double> weights);

}  // namespace photonfield
