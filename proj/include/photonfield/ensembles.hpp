#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "photonfield/field_operators.hpp"
#include "photonfield/fock_space.hpp"
#include "photonfield/sparse_operator.hpp"
#include "photonfield/types.hpp"

namespace photonfield {

/// Normalized state vector on a Fock basis. `norm_deficit` is the probability mass that a
/// truncated profile lost before normalization (0 for states built from explicit tuples).
struct FockState {
  std::uint64_t basis_id = 0;
  Eigen::VectorXcd coefficients;
  double norm_deficit = 0.0;
};

/// Occupancy tuple -> amplitude.
using CoefficientMap = std::map<std::vector<int>, Complex>;

struct CoefficientProfile {
  CoefficientMap coefficients;
  double norm_deficit = 0.0;
};

FockState vacuum(const FockBasis& basis);
/// Throws InvalidInput for occupancies above n_max or a tuple of the wrong length.
FockState number_state(const FockBasis& basis, std::span<const int> occupancies);

/// Normalizes the map onto the basis. Throws InvalidInput for an empty or zero-norm map.
FockState superposition(const FockBasis& basis, const CoefficientMap& coefficients, double norm_deficit = 0.0);
FockState superposition(const FockBasis& basis, const CoefficientProfile& profile);

/// C_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!) for n <= cap in one mode, all other modes empty.
/// norm_deficit is the Poisson tail beyond cap, summed directly.
CoefficientProfile coherent_profile(const FockBasis& basis, Complex alpha, std::size_t mode, int cap);

/// sum_{n > cap} e^{-mean} mean^n / n!
double poisson_tail(double mean, int cap);

/// Product of single-mode coherent profiles truncated at n_max. The deficit is
/// 1 - prod_m (1 - tail_m).
FockState coherent_product_state(const FockBasis& basis, std::span<const Complex> alphas);

/// <psi, Op psi>. Throws BasisMismatch if the operator and state live on different bases.
Complex expectation(const SparseOperator& op, const FockState& state);

/// <a_m> = sum conj(C_n) C_{n + e_m} sqrt(n_m + 1), one entry per mode.
struct AmplitudeProfile {
  std::vector<Complex> mean_annihilation;
};

AmplitudeProfile amplitude_profile(const FockBasis& basis, const FockState& state);

/// <F> = sum_m ( f_m <a_m> + c.c. ) with the lattice amplitudes f_m of `field_form`.
Vec3 field_expectation_closed_form(const ModeSet& modes, const AmplitudeProfile& profile, FieldKind kind,
                                   const SpacetimePoint& x);
Vec3 field_expectation_closed_form(const FockBasis& basis, const FockState& state, FieldKind kind,
                                   const SpacetimePoint& x);

/// <psi, F_i psi> from the operator matrices.
Vec3 field_expectation_matrix(const FockBasis& basis, const FockState& state, FieldKind kind,
                              const SpacetimePoint& x);

/// <psi, F_i F_i psi> per component.
Vec3 field_square_expectation(const FockBasis& basis, const FockState& state, FieldKind kind,
                              const SpacetimePoint& x);

struct GridRow {
  SpacetimePoint x;
  Vec3 value;
};

/// Closed-form <F> at each point, in input order.
std::vector<GridRow> expectation_grid(const FockBasis& basis, const FockState& state, FieldKind kind,
                                      std::span<const SpacetimePoint> points);

/// `count` points at fixed r with t = t_begin + k (t_end - t_begin) / count, k = 0..count-1.
std::vector<SpacetimePoint> time_points(const Vec3& r, double t_begin, double t_end, int count);

/// Header `t,x,y,z,Fx,Fy,Fz`, shortest round-trip decimals.
void write_grid_csv(std::ostream& out, std::span<const GridRow> rows);

struct VacuumScanRow {
  int cutoff;
  std::size_t modes;
  /// sum_m |f_m|^2 from the field amplitudes
  double mode_sum;
  /// closed lattice sum
  double lattice_sum;
};

/// <0|F·F|0> on cube_modes(K) for each cutoff K. Uses mode lists only, no Fock basis.
std::vector<VacuumScanRow> vacuum_scan(double box_length, const Units& units, FieldKind kind,
                                       std::span<const int> cutoffs, const TransverseGauge& gauge = {});

/// Header `cutoff,modes,mean_square`, one row per cutoff.
void write_vacuum_scan_csv(std::ostream& out, std::span<const VacuumScanRow> rows);

}  // namespace photonfield
