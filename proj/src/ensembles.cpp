#include "photonfield/ensembles.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace photonfield {

namespace {

FockState unit_vector(const FockBasis& basis, std::size_t index) {
  FockState state;
  state.basis_id = basis.id();
  state.coefficients = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
  state.coefficients(static_cast<Eigen::Index>(index)) = 1.0;
  return state;
}

void require_state_basis(const FockBasis& basis, const FockState& state) {
  if (state.basis_id != basis.id() || static_cast<std::size_t>(state.coefficients.size()) != basis.dim()) {
    throw BasisMismatch("state is defined on a different Fock basis");
  }
}

// Single-mode coherent amplitudes for n = 0..cap.
std::vector<Complex> coherent_amplitudes(Complex alpha, int cap) {
  std::vector<Complex> c(static_cast<std::size_t>(cap) + 1);
  c[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= cap; ++n) c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n) - 1] * alpha / std::sqrt(double(n));
  return c;
}

}  // namespace

FockState vacuum(const FockBasis& basis) { return unit_vector(basis, 0); }

FockState number_state(const FockBasis& basis, std::span<const int> occupancies) {
  return unit_vector(basis, basis.index_of(occupancies));
}

FockState superposition(const FockBasis& basis, const CoefficientMap& coefficients, double norm_deficit) {
  if (coefficients.empty()) throw InvalidInput("superposition needs at least one coefficient");
  FockState state;
  state.basis_id = basis.id();
  state.coefficients = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
  for (const auto& [occ, c] : coefficients) state.coefficients(static_cast<Eigen::Index>(basis.index_of(occ))) += c;
  const double norm = state.coefficients.norm();
  if (!(norm > 0.0)) throw InvalidInput("superposition has zero norm");
  state.coefficients /= norm;
  state.norm_deficit = norm_deficit;
  return state;
}

FockState superposition(const FockBasis& basis, const CoefficientProfile& profile) {
  return superposition(basis, profile.coefficients, profile.norm_deficit);
}

double poisson_tail(double mean, int cap) {
  if (mean < 0.0) throw InvalidInput("Poisson mean must be nonnegative");
  if (mean == 0.0) return 0.0;
  // Term n = cap + 1, then the ratio recurrence; terms decrease once n > mean.
  double term = std::exp(-mean);
  for (int n = 1; n <= cap + 1; ++n) term *= mean / n;
  double sum = 0.0;
  for (int n = cap + 1; n < cap + 10000; ++n) {
    sum += term;
    if (n > mean && term < 1e-17 * sum) break;
    term *= mean / (n + 1);
  }
  return sum;
}

CoefficientProfile coherent_profile(const FockBasis& basis, Complex alpha, std::size_t mode, int cap) {
  if (mode >= basis.num_modes()) throw InvalidInput("unknown mode index " + std::to_string(mode));
  if (cap < 0 || cap > basis.n_max()) {
    throw InvalidInput("coherent cap " + std::to_string(cap) + " exceeds n_max " + std::to_string(basis.n_max()));
  }
  CoefficientProfile profile;
  const auto c = coherent_amplitudes(alpha, cap);
  for (int n = 0; n <= cap; ++n) {
    std::vector<int> occ(basis.num_modes(), 0);
    occ[mode] = n;
    profile.coefficients[occ] = c[static_cast<std::size_t>(n)];
  }
  profile.norm_deficit = poisson_tail(std::norm(alpha), cap);
  return profile;
}

FockState coherent_product_state(const FockBasis& basis, std::span<const Complex> alphas) {
  if (alphas.size() != basis.num_modes()) throw InvalidInput("one coherent amplitude per mode is required");
  std::vector<std::vector<Complex>> per_mode;
  double kept = 1.0;
  for (Complex a : alphas) {
    per_mode.push_back(coherent_amplitudes(a, basis.n_max()));
    kept *= 1.0 - poisson_tail(std::norm(a), basis.n_max());
  }
  FockState state;
  state.basis_id = basis.id();
  state.coefficients.resize(static_cast<Eigen::Index>(basis.dim()));
  for (std::size_t index = 0; index < basis.dim(); ++index) {
    Complex c = 1.0;
    for (std::size_t m = 0; m < alphas.size(); ++m) c *= per_mode[m][static_cast<std::size_t>(basis.occupancy(index, m))];
    state.coefficients(static_cast<Eigen::Index>(index)) = c;
  }
  state.coefficients.normalize();
  state.norm_deficit = 1.0 - kept;
  return state;
}

Complex expectation(const SparseOperator& op, const FockState& state) {
  if (op.basis_id() != state.basis_id || op.dim() != static_cast<std::size_t>(state.coefficients.size())) {
    throw BasisMismatch("operator and state are defined on different Fock bases");
  }
  return state.coefficients.dot(op.apply(state.coefficients));
}

AmplitudeProfile amplitude_profile(const FockBasis& basis, const FockState& state) {
  require_state_basis(basis, state);
  AmplitudeProfile profile;
  profile.mean_annihilation.assign(basis.num_modes(), 0.0);
  const auto& c = state.coefficients;
  for (std::size_t m = 0; m < basis.num_modes(); ++m) {
    Complex sum = 0.0;
    for (std::size_t index = 0; index < basis.dim(); ++index) {
      const int n = basis.occupancy(index, m);
      if (n == basis.n_max()) continue;
      const auto upper = static_cast<Eigen::Index>(index + basis.stride(m));
      sum += std::conj(c(static_cast<Eigen::Index>(index))) * c(upper) * std::sqrt(n + 1.0);
    }
    profile.mean_annihilation[m] = sum;
  }
  return profile;
}

Vec3 field_expectation_closed_form(const ModeSet& modes, const AmplitudeProfile& profile, FieldKind kind,
                                   const SpacetimePoint& x) {
  if (profile.mean_annihilation.size() != modes.size()) throw InvalidInput("amplitude profile does not match the modes");
  const LinearForm form = field_form(modes, kind, x);
  Vec3 out = Vec3::Zero();
  for (std::size_t m = 0; m < modes.size(); ++m) out += 2.0 * (form.amplitudes[m] * profile.mean_annihilation[m]).real();
  return out;
}

Vec3 field_expectation_closed_form(const FockBasis& basis, const FockState& state, FieldKind kind,
                                   const SpacetimePoint& x) {
  return field_expectation_closed_form(basis.mode_set(), amplitude_profile(basis, state), kind, x);
}

Vec3 field_expectation_matrix(const FockBasis& basis, const FockState& state, FieldKind kind,
                              const SpacetimePoint& x) {
  const VectorOperator f = field(basis, kind, x);
  Vec3 out;
  for (int i = 0; i < 3; ++i) out(i) = expectation(f[i], state).real();
  return out;
}

Vec3 field_square_expectation(const FockBasis& basis, const FockState& state, FieldKind kind,
                              const SpacetimePoint& x) {
  require_state_basis(basis, state);
  const VectorOperator f = field(basis, kind, x);
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    // <psi, F F psi> = |F psi|^2 for hermitian F
    out(i) = f[i].apply(state.coefficients).squaredNorm();
  }
  return out;
}

std::vector<GridRow> expectation_grid(const FockBasis& basis, const FockState& state, FieldKind kind,
                                      std::span<const SpacetimePoint> points) {
  const AmplitudeProfile profile = amplitude_profile(basis, state);
  std::vector<GridRow> rows;
  rows.reserve(points.size());
  for (const SpacetimePoint& x : points) {
    rows.push_back({x, field_expectation_closed_form(basis.mode_set(), profile, kind, x)});
  }
  return rows;
}

std::vector<SpacetimePoint> time_points(const Vec3& r, double t_begin, double t_end, int count) {
  if (count < 0) throw InvalidInput("point count must be nonnegative");
  std::vector<SpacetimePoint> out;
  for (int k = 0; k < count; ++k) out.push_back({r, t_begin + k * (t_end - t_begin) / count});
  return out;
}

void write_grid_csv(std::ostream& out, std::span<const GridRow> rows) {
  out << "t,x,y,z,Fx,Fy,Fz\n";
  for (const GridRow& row : rows) {
    out << format_double(row.x.t);
    for (int i = 0; i < 3; ++i) out << ',' << format_double(row.x.r(i));
    for (int i = 0; i < 3; ++i) out << ',' << format_double(row.value(i));
    out << '\n';
  }
}

std::vector<VacuumScanRow> vacuum_scan(double box_length, const Units& units, FieldKind kind,
                                       std::span<const int> cutoffs, const TransverseGauge& gauge) {
  std::vector<VacuumScanRow> rows;
  for (int k : cutoffs) {
    if (k < 1) throw InvalidInput("vacuum scan cutoffs must be at least 1");
    LatticeConfig config;
    config.box_length = box_length;
    config.units = units;
    config.gauge = gauge;
    config.modes = cube_modes(k);
    const ModeSet modes(config);
    rows.push_back({k, modes.size(), vacuum_square_mode_sum(modes, kind), vacuum_square_lattice_sum(modes, kind)});
  }
  return rows;
}

void write_vacuum_scan_csv(std::ostream& out, std::span<const VacuumScanRow> rows) {
  out << "cutoff,modes,mean_square\n";
  for (const VacuumScanRow& row : rows) {
    out << row.cutoff << ',' << row.modes << ',' << format_double(row.mode_sum) << '\n';
  }
}

}  // namespace photonfield
