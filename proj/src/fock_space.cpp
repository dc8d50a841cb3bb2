#include "photonfield/fock_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

namespace photonfield {

namespace {

std::string describe(const ModeSpec& m) {
  return std::string(m.s == Helicity::plus ? "+" : "-") + "(" + std::to_string(m.n(0)) + "," +
         std::to_string(m.n(1)) + "," + std::to_string(m.n(2)) + ")";
}

class Fnv1a {
 public:
  template <typename T>
  void add(const T& value) {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    for (unsigned char b : bytes) {
      h_ ^= b;
      h_ *= 1099511628211ull;
    }
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 14695981039346656037ull;
};

void validate(const LatticeConfig& config) {
  if (!(config.box_length > 0.0) || !std::isfinite(config.box_length)) throw InvalidInput("box_length must be positive");
  if (!(config.units.hbar > 0.0) || !(config.units.c > 0.0)) throw InvalidInput("hbar and c must be positive");
  if (config.modes.empty()) throw InvalidInput("mode list is empty");
  for (std::size_t i = 0; i < config.modes.size(); ++i) {
    const ModeSpec& m = config.modes[i];
    if (m.n.isZero()) throw InvalidInput("mode " + std::to_string(i) + " has zero momentum (excluded)");
    for (std::size_t j = 0; j < i; ++j) {
      if (config.modes[j] == m) throw InvalidInput("duplicate mode " + describe(m));
    }
  }
}

}  // namespace

std::vector<ModeSpec> cube_modes(int cutoff) {
  std::vector<ModeSpec> out;
  for (int x = -cutoff; x <= cutoff; ++x) {
    for (int y = -cutoff; y <= cutoff; ++y) {
      for (int z = -cutoff; z <= cutoff; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        out.push_back({Helicity::plus, IVec3(x, y, z)});
        out.push_back({Helicity::minus, IVec3(x, y, z)});
      }
    }
  }
  return out;
}

ModeSet::ModeSet(const LatticeConfig& config)
    : box_length_(config.box_length), units_(config.units) {
  validate(config);
  const double dp = 2.0 * kPi * units_.hbar / box_length_;
  delta3p_ = dp * dp * dp;
  modes_.reserve(config.modes.size());
  for (const ModeSpec& spec : config.modes) {
    const Vec3 p = dp * spec.n.cast<double>();
    const double omega = units_.c * p.norm() / units_.hbar;
    modes_.push_back(Mode{spec.s, spec.n, p, omega, make_triad(Direction::along(p), config.gauge)});
  }
}

std::size_t ModeSet::index_of(const ModeSpec& spec) const {
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (modes_[i].s == spec.s && modes_[i].n == spec.n) return i;
  }
  throw InvalidInput("unknown mode " + describe(spec));
}

bool ModeSet::contains(const ModeSpec& spec) const {
  return std::any_of(modes_.begin(), modes_.end(), [&](const Mode& m) { return m.s == spec.s && m.n == spec.n; });
}

std::vector<IVec3> ModeSet::distinct_momenta() const {
  std::vector<IVec3> out;
  for (const Mode& m : modes_) {
    if (std::none_of(out.begin(), out.end(), [&](const IVec3& n) { return n == m.n; })) out.push_back(m.n);
  }
  return out;
}

bool ModeSet::has_both_helicities() const {
  for (const IVec3& n : distinct_momenta()) {
    if (!contains({Helicity::plus, n}) || !contains({Helicity::minus, n})) return false;
  }
  return true;
}

bool ModeSet::momentum_symmetric() const {
  const auto momenta = distinct_momenta();
  return std::all_of(momenta.begin(), momenta.end(), [&](const IVec3& n) {
    return std::any_of(momenta.begin(), momenta.end(), [&](const IVec3& q) { return q == -n; });
  });
}

FockBasis::FockBasis(ModeSet modes, int n_max) : modes_(std::move(modes)), n_max_(n_max) {
  const std::size_t m = modes_.size();
  strides_.assign(m, 1);
  for (std::size_t i = m; i-- > 1;) strides_[i - 1] = strides_[i] * static_cast<std::size_t>(n_max_ + 1);
  dim_ = strides_.empty() ? 1 : strides_[0] * static_cast<std::size_t>(n_max_ + 1);

  Fnv1a h;
  h.add(modes_.box_length());
  h.add(modes_.units().hbar);
  h.add(modes_.units().c);
  h.add(n_max_);
  for (const Mode& mode : modes_.modes()) {
    h.add(sign(mode.s));
    for (int i = 0; i < 3; ++i) h.add(mode.n(i));
    for (int i = 0; i < 3; ++i) h.add(mode.triad.e_hat(i));
  }
  id_ = h.value();
}

std::vector<int> FockBasis::occupancies(std::size_t index) const {
  std::vector<int> occ(num_modes());
  for (std::size_t m = 0; m < occ.size(); ++m) occ[m] = occupancy(index, m);
  return occ;
}

std::size_t FockBasis::index_of(std::span<const int> occ) const {
  if (occ.size() != num_modes()) {
    throw InvalidInput("occupancy tuple has " + std::to_string(occ.size()) + " entries, expected " +
                       std::to_string(num_modes()));
  }
  std::size_t index = 0;
  for (std::size_t m = 0; m < occ.size(); ++m) {
    if (occ[m] < 0 || occ[m] > n_max_) {
      throw InvalidInput("occupancy " + std::to_string(occ[m]) + " of mode " + std::to_string(m) +
                         " outside [0, " + std::to_string(n_max_) + "]");
    }
    index += static_cast<std::size_t>(occ[m]) * strides_[m];
  }
  return index;
}

FockBasis build_basis(const LatticeConfig& config) {
  if (config.n_max < 1) throw InvalidInput("n_max must be at least 1");
  ModeSet modes(config);

  const double dim = std::pow(static_cast<double>(config.n_max + 1), static_cast<double>(modes.size()));
  if (dim > static_cast<double>(config.max_dimension)) {
    throw ResourceLimitError("Fock dimension (" + std::to_string(config.n_max) + "+1)^" +
                             std::to_string(modes.size()) + " = " + std::to_string(dim) +
                             " exceeds the dimension guard " + std::to_string(config.max_dimension) +
                             "; reduce n_max or the number of modes, or raise max_dimension");
  }
  const double nnz = 2.0 * static_cast<double>(modes.size()) * dim * config.n_max / (config.n_max + 1.0);
  if (nnz > static_cast<double>(config.max_nonzeros)) {
    throw ResourceLimitError("a field component would hold about " + std::to_string(static_cast<long long>(nnz)) +
                             " nonzeros, above the budget " + std::to_string(config.max_nonzeros) +
                             "; reduce n_max or the number of modes, or raise max_nonzeros");
  }
  return FockBasis(std::move(modes), config.n_max);
}

SparseOperator ladder_sum(const FockBasis& basis, std::span<const Complex> a_coeffs,
                          std::span<const Complex> adag_coeffs, Symmetry symmetry) {
  const std::size_t modes = basis.num_modes();
  if (a_coeffs.size() != modes || adag_coeffs.size() != modes) {
    throw InvalidInput("ladder coefficient count does not match the number of modes");
  }
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(2 * modes * basis.dim());
  for (std::size_t index = 0; index < basis.dim(); ++index) {
    for (std::size_t m = 0; m < modes; ++m) {
      const int n = basis.occupancy(index, m);
      if (n == 0) continue;
      const double amp = std::sqrt(static_cast<double>(n));
      const auto lower = static_cast<int>(index - basis.stride(m));
      const auto self = static_cast<int>(index);
      // a|n> = sqrt(n)|n-1>, a^dag|n-1> = sqrt(n)|n>
      if (a_coeffs[m] != Complex(0.0, 0.0)) triplets.emplace_back(lower, self, a_coeffs[m] * amp);
      if (adag_coeffs[m] != Complex(0.0, 0.0)) triplets.emplace_back(self, lower, adag_coeffs[m] * amp);
    }
  }
  const auto dim = static_cast<Eigen::Index>(basis.dim());
  SparseOperator::Matrix mat(dim, dim);
  mat.setFromTriplets(triplets.begin(), triplets.end());
  return {basis.id(), std::move(mat), symmetry};
}

SparseOperator creation(const FockBasis& basis, std::size_t mode) {
  if (mode >= basis.num_modes()) throw InvalidInput("unknown mode index " + std::to_string(mode));
  std::vector<Complex> a(basis.num_modes()), adag(basis.num_modes());
  adag[mode] = 1.0;
  return ladder_sum(basis, a, adag);
}

SparseOperator creation(const FockBasis& basis, const ModeSpec& mode) {
  return creation(basis, basis.mode_set().index_of(mode));
}

SparseOperator annihilation(const FockBasis& basis, std::size_t mode) {
  if (mode >= basis.num_modes()) throw InvalidInput("unknown mode index " + std::to_string(mode));
  std::vector<Complex> a(basis.num_modes()), adag(basis.num_modes());
  a[mode] = 1.0;
  return ladder_sum(basis, a, adag);
}

SparseOperator annihilation(const FockBasis& basis, const ModeSpec& mode) {
  return annihilation(basis, basis.mode_set().index_of(mode));
}

SparseOperator weighted_number(const FockBasis& basis, std::span<const double> weights) {
  if (weights.size() != basis.num_modes()) throw InvalidInput("weight count does not match the number of modes");
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(basis.dim());
  for (std::size_t index = 0; index < basis.dim(); ++index) {
    double v = 0.0;
    for (std::size_t m = 0; m < weights.size(); ++m) v += weights[m] * basis.occupancy(index, m);
    if (v != 0.0) triplets.emplace_back(static_cast<int>(index), static_cast<int>(index), v);
  }
  const auto dim = static_cast<Eigen::Index>(basis.dim());
  SparseOperator::Matrix mat(dim, dim);
  mat.setFromTriplets(triplets.begin(), triplets.end());
  return {basis.id(), std::move(mat), Symmetry::hermitian};
}

SparseOperator number_operator(const FockBasis& basis, std::size_t mode) {
  if (mode >= basis.num_modes()) throw InvalidInput("unknown mode index " + std::to_string(mode));
  std::vector<double> w(basis.num_modes(), 0.0);
  w[mode] = 1.0;
  return weighted_number(basis, w);
}

SparseOperator number_operator(const FockBasis& basis, const ModeSpec& mode) {
  return number_operator(basis, basis.mode_set().index_of(mode));
}

SparseOperator total_number(const FockBasis& basis) {
  const std::vector<double> w(basis.num_modes(), 1.0);
  return weighted_number(basis, w);
}

SparseOperator identity(const FockBasis& basis) {
  return SparseOperator::scaled_identity(basis.id(), basis.dim(), 1.0);
}

SparseOperator safe_projector(const FockBasis& basis, int margin) {
  if (margin < 0 || margin > basis.n_max()) {
    throw InvalidInput("projector margin must lie in [0, n_max]");
  }
  const int limit = basis.n_max() - margin;
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (std::size_t index = 0; index < basis.dim(); ++index) {
    bool inside = true;
    for (std::size_t m = 0; m < basis.num_modes() && inside; ++m) inside = basis.occupancy(index, m) <= limit;
    if (inside) triplets.emplace_back(static_cast<int>(index), static_cast<int>(index), 1.0);
  }
  const auto dim = static_cast<Eigen::Index>(basis.dim());
  SparseOperator::Matrix mat(dim, dim);
  mat.setFromTriplets(triplets.begin(), triplets.end());
  return {basis.id(), std::move(mat), Symmetry::hermitian};
}

}  // namespace photonfield
