#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "photonfield/fock_space.hpp"
#include "photonfield/sparse_operator.hpp"
#include "photonfield/types.hpp"

namespace photonfield {

struct SpacetimePoint {
  Vec3 r = Vec3::Zero();
  double t = 0.0;
};

enum class FieldKind { E, B, A };

std::string_view to_string(FieldKind kind);
/// Accepts "E", "B" or "A"; throws InvalidInput otherwise.
FieldKind parse_field_kind(std::string_view name);

/// A vector field linear in the ladder operators,
///   F_i = sum_m ( amplitudes[m]_i a_m + conj(amplitudes[m]_i) a_m^dag ).
/// Amplitudes carry the full spacetime phase of the evaluation point.
struct LinearForm {
  std::vector<CVec3> amplitudes;

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(Complex s, LinearForm a);
};

/// Per-mode amplitudes of E, B or A at x:
///   E: (1/2 pi hbar) sqrt(d3p) sqrt(omega) i eps        e^{i(p·r - E t)/hbar}
///   B: (1/2 pi hbar) sqrt(d3p) sqrt(omega) i (k x eps)  e^{i(p·r - E t)/hbar}
///   A: (c/2 pi hbar) sqrt(d3p) / sqrt(omega) eps        e^{i(p·r - E t)/hbar}
LinearForm field_form(const ModeSet& modes, FieldKind kind, const SpacetimePoint& x);

/// Exact per-mode derivatives: d/dt -> -i omega, grad -> i p / hbar.
LinearForm time_derivative(const LinearForm& form, const ModeSet& modes);
LinearForm curl(const LinearForm& form, const ModeSet& modes);
std::vector<Complex> divergence(const LinearForm& form, const ModeSet& modes);

/// Three hermitian (or antihermitian) component operators.
struct VectorOperator {
  std::array<SparseOperator, 3> components;

  const SparseOperator& operator[](int i) const { return components[static_cast<std::size_t>(i)]; }
  /// sqrt(sum_i ||F_i||_F^2)
  double frobenius() const;
};

/// sum_m ( f_m a_m + conj(f_m) a_m^dag ), flagged hermitian.
SparseOperator linear_functional(const FockBasis& basis, std::span<const Complex> coeffs);

VectorOperator to_operator(const FockBasis& basis, const LinearForm& form);
SparseOperator to_operator(const FockBasis& basis, std::span<const Complex> scalar_form);

/// E(r,t), B(r,t) or A(r,t) on the truncated Fock space.
VectorOperator field(const FockBasis& basis, FieldKind kind, const SpacetimePoint& x);

/// [F, N] in closed form: the field's mode sum with the h.c. term sign-flipped,
/// sum_m ( f_m a_m - conj(f_m) a_m^dag ), flagged antihermitian.
VectorOperator field_number_commutator(const FockBasis& basis, FieldKind kind, const SpacetimePoint& x);

/// H = sum hbar omega N,  P = sum p N,  S = sum s hbar k N.
SparseOperator observable_H(const FockBasis& basis);
VectorOperator observable_P(const FockBasis& basis);
VectorOperator observable_S(const FockBasis& basis);

/// Finite lattice remnant of the symmetrized ladder products:
/// E0 = 1/2 sum hbar omega, P0 = 1/2 sum p, S0 = 1/2 sum s hbar k.
struct ZeroPointConstants {
  double energy;
  Vec3 momentum;
  Vec3 spin;
};

ZeroPointConstants zero_point_constants(const ModeSet& modes);

/// Normal-ordered variant of a quadratic observable: quadratic - zero_point * I.
SparseOperator normal_ordered(const SparseOperator& quadratic, double zero_point);

/// Coefficient matrices of a form quadratic in the ladder operators:
///   sum_{m,m'} ( aa(m,m') a_m a_m' + a_adag(m,m') a_m a_m'^dag
///              + adag_a(m,m') a_m^dag a_m' + adag_adag(m,m') a_m^dag a_m'^dag ).
struct QuadraticForm {
  Eigen::MatrixXcd aa;
  Eigen::MatrixXcd a_adag;
  Eigen::MatrixXcd adag_a;
  Eigen::MatrixXcd adag_adag;

  explicit QuadraticForm(std::size_t modes);
};

/// Adds weight * integral over the box of F(r) G(r), for scalar components F and G
/// given by their r = 0 amplitudes. The integral of e^{i(p - p')·r/hbar} is L^3 delta_{n,n'}.
void add_box_integral(QuadraticForm& q, const ModeSet& modes, std::span<const Complex> f,
                      std::span<const Complex> g, Complex weight);

SparseOperator to_operator(const FockBasis& basis, const QuadraticForm& q, Symmetry symmetry = Symmetry::hermitian);

/// (1/8 pi) int (E^2 + B^2) with fields evaluated at time t.
SparseOperator quadratic_H_from_fields(const FockBasis& basis, double t = 0.0);
/// (1/8 pi c) int (E x B - B x E)
VectorOperator quadratic_P_from_fields(const FockBasis& basis, double t = 0.0);
/// (1/8 pi c) int (E x A - A x E)
VectorOperator quadratic_S_from_fields(const FockBasis& basis, double t = 0.0);

/// Largest entrywise deviation of the margin-1 projections of
/// quadratic_X - X - X0 I, each relative to max(largest |entry| of X + X0 I, natural unit).
struct IdentityResiduals {
  double energy;
  double momentum;
  double spin;
};

IdentityResiduals check_quadratic_identities(const FockBasis& basis, double t = 0.0);

/// Relative residual at steps h and h/2. The Richardson ratio at_h / at_half_h is
/// ~4 for a second-order difference; it is meaningful only above the rounding floor.
struct FiniteDifferenceResidual {
  double at_h = 0.0;
  double at_half_h = 0.0;

  double ratio() const { return at_half_h > 0.0 ? at_h / at_half_h : 0.0; }
  bool ratio_applicable(double floor = 1e-11) const { return at_half_h > floor; }
};

/// E = -(1/c) dA/dt and B = curl A.
struct DerivativeReport {
  FiniteDifferenceResidual electric;
  FiniteDifferenceResidual magnetic;
  /// Same relations using exact per-mode derivatives.
  double analytic = 0.0;
};

DerivativeReport check_derivative_relations(const FockBasis& basis, const SpacetimePoint& x, double h);

/// -curl E - (1/c) dB/dt, curl B - (1/c) dE/dt, div E, div B, each relative to
/// max(||E||, ||B||) * max(omega)/c.
struct MaxwellReport {
  FiniteDifferenceResidual faraday;
  FiniteDifferenceResidual ampere;
  FiniteDifferenceResidual gauss_e;
  FiniteDifferenceResidual gauss_b;
  double analytic = 0.0;
};

MaxwellReport check_maxwell(const FockBasis& basis, const SpacetimePoint& x, double h);

/// Scalar value c_ij of [F1_i(x1), F2_j(x2)] = c_ij * 1 (exact on the margin-1 subspace),
///   c_ij = (1/(2 pi hbar)^2) sum_n d3p omega W_ij(n) (e^{i theta} - e^{-i theta}),
///   theta = p·(r1 - r2)/hbar - omega (t1 - t2),
/// where W = delta - k k for [E,E] and [B,B], epsilon_ijl k_l for [E,B], -epsilon_ijl k_l for
/// [B,E]. For momentum-symmetric sets this equals
///   (-2i/(2 pi hbar)^2) sum_n d3p omega (delta_ij - k_i k_j) e^{i p·rho/hbar} sin(omega tau).
/// Requires both helicities for every momentum (helicity completeness) and kinds in {E, B}.
Eigen::Matrix3cd field_commutator_closed_form(const ModeSet& modes, FieldKind first, FieldKind second,
                                              const SpacetimePoint& x1, const SpacetimePoint& x2);

/// max_ij of max |P [F1_i, F2_j] P - c_ij P| with P the margin-1 projector.
double field_commutator_residual(const FockBasis& basis, FieldKind first, FieldKind second,
                                 const SpacetimePoint& x1, const SpacetimePoint& x2);

/// max_i of max |[F_i, N] - closed form_i| over the whole space.
double field_number_commutator_residual(const FockBasis& basis, FieldKind kind, const SpacetimePoint& x);

/// D(rho, tau) = (-1/(2 pi hbar)^3) sum_n d3p e^{i p·rho/hbar} sin(omega tau)/omega over the
/// distinct momenta. Requires a momentum set closed under n -> -n.
double discrete_pauli_jordan(const ModeSet& modes, const Vec3& rho, double tau);

/// <0|F·F|0> as the closed lattice sum: (1/(2 pi hbar)^2) sum_modes d3p omega for E and B,
/// (c^2/(2 pi hbar)^2) sum_modes d3p / omega for A.
double vacuum_square_lattice_sum(const ModeSet& modes, FieldKind kind);

/// <0|F·F|0> from the field amplitudes, sum_m |amplitude_m|^2.
double vacuum_square_mode_sum(const ModeSet& modes, FieldKind kind, const SpacetimePoint& x = {});

}  // namespace photonfield
