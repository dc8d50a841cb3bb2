#pragma once

#include <cstdint>
#include <iosfwd>

#include <Eigen/SparseCore>

#include "photonfield/types.hpp"

namespace photonfield {

enum class Symmetry { none, hermitian, antihermitian };

/// Complex sparse matrix on a Fock basis, tagged with the basis identity and a
/// symmetry flag. The flag is a claim; `symmetry_residual` checks it.
class SparseOperator {
 public:
  using Matrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

  SparseOperator(std::uint64_t basis_id, Matrix matrix, Symmetry symmetry = Symmetry::none);

  static SparseOperator zero(std::uint64_t basis_id, std::size_t dim);
  static SparseOperator scaled_identity(std::uint64_t basis_id, std::size_t dim, Complex value);

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::uint64_t basis_id() const { return basis_id_; }
  Symmetry symmetry() const { return symmetry_; }
  std::size_t nonzeros() const { return static_cast<std::size_t>(m_.nonZeros()); }

  SparseOperator with_symmetry(Symmetry symmetry) const;
  SparseOperator adjoint() const;

  /// max |A - A^dag| for hermitian, max |A + A^dag| for antihermitian, 0 otherwise.
  double symmetry_residual() const;
  bool verify_symmetry(double tolerance = 1e-12) const { return symmetry_residual() <= tolerance; }

  double max_abs() const;
  double frobenius() const { return m_.norm(); }
  Complex entry(std::size_t row, std::size_t col) const { return m_.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)); }
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(m_); }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return m_ * v; }

  SparseOperator& operator+=(const SparseOperator& other);
  SparseOperator& operator-=(const SparseOperator& other);

  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(Complex s, const SparseOperator& a);
  friend SparseOperator operator*(double s, const SparseOperator& a) { return Complex(s, 0.0) * a; }

 private:
  std::uint64_t basis_id_;
  Matrix m_;
  Symmetry symmetry_;
};

/// Throws BasisMismatch unless both operands live on the same basis.
void require_same_basis(const SparseOperator& a, const SparseOperator& b);

/// AB - BA
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

/// P A P
SparseOperator project(const SparseOperator& projector, const SparseOperator& a);

/// Coordinate-list export: header `dim n_modes n_max`, then one `row col re im` line per
/// stored nonzero in row-major order, numbers in shortest round-trip form.
void write_coordinate_list(std::ostream& out, const SparseOperator& op, std::size_t n_modes, int n_max);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace photonfield
