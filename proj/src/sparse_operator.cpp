#include "photonfield/sparse_operator.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace photonfield {

namespace {

Symmetry combine_sum(Symmetry a, Symmetry b) { return a == b ? a : Symmetry::none; }

Symmetry scale_symmetry(Symmetry sym, Complex s) {
  if (sym == Symmetry::none) return sym;
  if (s.imag() == 0.0) return sym;
  if (s.real() == 0.0) return sym == Symmetry::hermitian ? Symmetry::antihermitian : Symmetry::hermitian;
  return Symmetry::none;
}

}  // namespace

SparseOperator::SparseOperator(std::uint64_t basis_id, Matrix matrix, Symmetry symmetry)
    : basis_id_(basis_id), m_(std::move(matrix)), symmetry_(symmetry) {
  m_.makeCompressed();
}

SparseOperator SparseOperator::zero(std::uint64_t basis_id, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return {basis_id, Matrix(n, n), Symmetry::hermitian};
}

SparseOperator SparseOperator::scaled_identity(std::uint64_t basis_id, std::size_t dim, Complex value) {
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix m(n, n);
  m.setIdentity();
  m *= value;
  return {basis_id, std::move(m), scale_symmetry(Symmetry::hermitian, value)};
}

SparseOperator SparseOperator::with_symmetry(Symmetry symmetry) const {
  SparseOperator copy = *this;
  copy.symmetry_ = symmetry;
  return copy;
}

SparseOperator SparseOperator::adjoint() const {
  return {basis_id_, Matrix(m_.adjoint()), symmetry_};
}

double SparseOperator::symmetry_residual() const {
  if (symmetry_ == Symmetry::none) return 0.0;
  const Matrix adj = m_.adjoint();
  const Matrix diff = symmetry_ == Symmetry::hermitian ? Matrix(m_ - adj) : Matrix(m_ + adj);
  double r = 0.0;
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k) {
    for (Matrix::InnerIterator it(diff, k); it; ++it) r = std::max(r, std::abs(it.value()));
  }
  return r;
}

double SparseOperator::max_abs() const {
  double r = 0.0;
  for (Eigen::Index k = 0; k < m_.outerSize(); ++k) {
    for (Matrix::InnerIterator it(m_, k); it; ++it) r = std::max(r, std::abs(it.value()));
  }
  return r;
}

void require_same_basis(const SparseOperator& a, const SparseOperator& b) {
  if (a.basis_id() != b.basis_id() || a.dim() != b.dim()) {
    throw BasisMismatch("operators are defined on different Fock bases");
  }
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& other) {
  require_same_basis(*this, other);
  m_ += other.m_;
  symmetry_ = combine_sum(symmetry_, other.symmetry_);
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& other) {
  require_same_basis(*this, other);
  m_ -= other.m_;
  symmetry_ = combine_sum(symmetry_, other.symmetry_);
  return *this;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  require_same_basis(a, b);
  return {a.basis_id_, SparseOperator::Matrix(a.m_ * b.m_), Symmetry::none};
}

SparseOperator operator*(Complex s, const SparseOperator& a) {
  return {a.basis_id_, SparseOperator::Matrix(s * a.m_), scale_symmetry(a.symmetry_, s)};
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  require_same_basis(a, b);
  SparseOperator::Matrix c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
  Symmetry sym = Symmetry::none;
  if (a.symmetry() != Symmetry::none && b.symmetry() != Symmetry::none) {
    sym = a.symmetry() == b.symmetry() ? Symmetry::antihermitian : Symmetry::hermitian;
  }
  return {a.basis_id(), std::move(c), sym};
}

SparseOperator project(const SparseOperator& projector, const SparseOperator& a) {
  require_same_basis(projector, a);
  return {a.basis_id(), SparseOperator::Matrix(projector.matrix() * a.matrix() * projector.matrix()), a.symmetry()};
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

void write_coordinate_list(std::ostream& out, const SparseOperator& op, std::size_t n_modes, int n_max) {
  std::vector<std::tuple<Eigen::Index, Eigen::Index, Complex>> entries;
  const auto& m = op.matrix();
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (SparseOperator::Matrix::InnerIterator it(m, k); it; ++it) {
      if (it.value() != Complex(0.0, 0.0)) entries.emplace_back(it.row(), it.col(), it.value());
    }
  }
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });

  out << op.dim() << ' ' << n_modes << ' ' << n_max << '\n';
  for (const auto& [row, col, v] : entries) {
    out << row << ' ' << col << ' ' << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
  }
}

}  // namespace photonfield
