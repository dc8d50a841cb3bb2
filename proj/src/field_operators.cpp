#include "photonfield/field_operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace photonfield {

namespace {

constexpr std::array<FieldKind, 3> kAllKinds = {FieldKind::E, FieldKind::B, FieldKind::A};

std::vector<Complex> component(const LinearForm& form, int i) {
  std::vector<Complex> out(form.amplitudes.size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = form.amplitudes[m](i);
  return out;
}

VectorOperator vector_op_difference(const VectorOperator& a, const VectorOperator& b) {
  return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
}

VectorOperator scale(const VectorOperator& a, Complex s) { return {{s * a[0], s * a[1], s * a[2]}}; }

double max_wavenumber(const ModeSet& modes) {
  double w = 0.0;
  for (const Mode& m : modes.modes()) w = std::max(w, m.omega);
  return w / modes.units().c;
}

SpacetimePoint shifted(const SpacetimePoint& x, int axis, double step) {
  SpacetimePoint y = x;
  if (axis < 0) {
    y.t += step;
  } else {
    y.r(axis) += step;
  }
  return y;
}

// Central difference of a field along a spatial axis (0..2) or time (-1).
VectorOperator central_difference(const FockBasis& basis, FieldKind kind, const SpacetimePoint& x, int axis, double h) {
  const VectorOperator plus = field(basis, kind, shifted(x, axis, h));
  const VectorOperator minus = field(basis, kind, shifted(x, axis, -h));
  return scale(vector_op_difference(plus, minus), 1.0 / (2.0 * h));
}

struct SpatialDerivatives {
  std::array<VectorOperator, 3> d;  // d[j][k] = d_j F_k
};

SpatialDerivatives gradient_fd(const FockBasis& basis, FieldKind kind, const SpacetimePoint& x, double h) {
  return {{central_difference(basis, kind, x, 0, h), central_difference(basis, kind, x, 1, h),
           central_difference(basis, kind, x, 2, h)}};
}

VectorOperator curl_fd(const SpatialDerivatives& g) {
  return {{g.d[1][2] - g.d[2][1], g.d[2][0] - g.d[0][2], g.d[0][1] - g.d[1][0]}};
}

SparseOperator divergence_fd(const SpatialDerivatives& g) { return g.d[0][0] + g.d[1][1] + g.d[2][2]; }

void require_completeness(const ModeSet& modes) {
  if (!modes.has_both_helicities()) {
    throw PreconditionError(
        "closed-form field commutators need both helicities for every momentum (helicity completeness "
        "sum_s eps*_s eps_s = 1 - k k); the configured mode set lacks one helicity for some momentum");
  }
}

}  // namespace

std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::E: return "E";
    case FieldKind::B: return "B";
    case FieldKind::A: return "A";
  }
  return "?";
}

FieldKind parse_field_kind(std::string_view name) {
  for (FieldKind k : kAllKinds) {
    if (to_string(k) == name) return k;
  }
  throw InvalidInput("unknown field kind '" + std::string(name) + "' (expected E, B or A)");
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  for (std::size_t m = 0; m < amplitudes.size(); ++m) amplitudes[m] += other.amplitudes[m];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  for (std::size_t m = 0; m < amplitudes.size(); ++m) amplitudes[m] -= other.amplitudes[m];
  return *this;
}

LinearForm operator*(Complex s, LinearForm a) {
  for (auto& v : a.amplitudes) v *= s;
  return a;
}

LinearForm field_form(const ModeSet& modes, FieldKind kind, const SpacetimePoint& x) {
  const Units& u = modes.units();
  const double prefactor = std::sqrt(modes.delta3p()) / (2.0 * kPi * u.hbar);
  LinearForm form;
  form.amplitudes.reserve(modes.size());
  for (const Mode& m : modes.modes()) {
    const Complex phase = std::polar(1.0, m.p.dot(x.r) / u.hbar - m.omega * x.t);
    const CVec3& eps = m.eps();
    switch (kind) {
      case FieldKind::E:
        form.amplitudes.push_back(prefactor * std::sqrt(m.omega) * kI * phase * eps);
        break;
      case FieldKind::B:
        form.amplitudes.push_back(prefactor * std::sqrt(m.omega) * kI * phase * plain_cross(complexify(m.k()), eps));
        break;
      case FieldKind::A:
        form.amplitudes.push_back(u.c * prefactor / std::sqrt(m.omega) * phase * eps);
        break;
    }
  }
  return form;
}

LinearForm time_derivative(const LinearForm& form, const ModeSet& modes) {
  LinearForm out = form;
  for (std::size_t m = 0; m < modes.size(); ++m) out.amplitudes[m] *= -kI * modes[m].omega;
  return out;
}

LinearForm curl(const LinearForm& form, const ModeSet& modes) {
  LinearForm out = form;
  for (std::size_t m = 0; m < modes.size(); ++m) {
    const CVec3 ip = kI * complexify(modes[m].p / modes.units().hbar);
    out.amplitudes[m] = plain_cross(ip, form.amplitudes[m]);
  }
  return out;
}

std::vector<Complex> divergence(const LinearForm& form, const ModeSet& modes) {
  std::vector<Complex> out(modes.size());
  for (std::size_t m = 0; m < modes.size(); ++m) {
    out[m] = bilinear(kI * complexify(modes[m].p / modes.units().hbar), form.amplitudes[m]);
  }
  return out;
}

double VectorOperator::frobenius() const {
  double s = 0.0;
  for (const auto& c : components) s += c.frobenius() * c.frobenius();
  return std::sqrt(s);
}

SparseOperator linear_functional(const FockBasis& basis, std::span<const Complex> coeffs) {
  std::vector<Complex> conj(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), conj.begin(), [](Complex c) { return std::conj(c); });
  return ladder_sum(basis, coeffs, conj, Symmetry::hermitian);
}

SparseOperator to_operator(const FockBasis& basis, std::span<const Complex> scalar_form) {
  return linear_functional(basis, scalar_form);
}

VectorOperator to_operator(const FockBasis& basis, const LinearForm& form) {
  if (form.amplitudes.size() != basis.num_modes()) throw InvalidInput("form does not match the basis modes");
  return {{linear_functional(basis, component(form, 0)), linear_functional(basis, component(form, 1)),
           linear_functional(basis, component(form, 2))}};
}

VectorOperator field(const FockBasis& basis, FieldKind kind, const SpacetimePoint& x) {
  return to_operator(basis, field_form(basis.mode_set(), kind, x));
}

VectorOperator field_number_commutator(const FockBasis& basis, FieldKind kind, const SpacetimePoint& x) {
  const LinearForm form = field_form(basis.mode_set(), kind, x);
  std::array<SparseOperator, 3> out{SparseOperator::zero(basis.id(), basis.dim()),
                                    SparseOperator::zero(basis.id(), basis.dim()),
                                    SparseOperator::zero(basis.id(), basis.dim())};
  for (int i = 0; i < 3; ++i) {
    const auto a = component(form, i);
    std::vector<Complex> adag(a.size());
    std::transform(a.begin(), a.end(), adag.begin(), [](Complex c) { return -std::conj(c); });
    out[static_cast<std::size_t>(i)] = ladder_sum(basis, a, adag, Symmetry::antihermitian);
  }
  return {out};
}

SparseOperator observable_H(const FockBasis& basis) {
  std::vector<double> w;
  for (const Mode& m : basis.modes()) w.push_back(basis.mode_set().units().hbar * m.omega);
  return weighted_number(basis, w);
}

VectorOperator observable_P(const FockBasis& basis) {
  std::array<SparseOperator, 3> out{SparseOperator::zero(basis.id(), basis.dim()),
                                    SparseOperator::zero(basis.id(), basis.dim()),
                                    SparseOperator::zero(basis.id(), basis.dim())};
  for (int i = 0; i < 3; ++i) {
    std::vector<double> w;
    for (const Mode& m : basis.modes()) w.push_back(m.p(i));
    out[static_cast<std::size_t>(i)] = weighted_number(basis, w);
  }
  return {out};
}

VectorOperator observable_S(const FockBasis& basis) {
  const double hbar = basis.mode_set().units().hbar;
  std::array<SparseOperator, 3> out{SparseOperator::zero(basis.id(), basis.dim()),
                                    SparseOperator::zero(basis.id(), basis.dim()),
                                    SparseOperator::zero(basis.id(), basis.dim())};
  for (int i = 0; i < 3; ++i) {
    std::vector<double> w;
    for (const Mode& m : basis.modes()) w.push_back(sign(m.s) * hbar * m.k()(i));
    out[static_cast<std::size_t>(i)] = weighted_number(basis, w);
  }
  return {out};
}

ZeroPointConstants zero_point_constants(const ModeSet& modes) {
  const double hbar = modes.units().hbar;
  ZeroPointConstants z{0.0, Vec3::Zero(), Vec3::Zero()};
  for (const Mode& m : modes.modes()) {
    z.energy += 0.5 * hbar * m.omega;
    z.momentum += 0.5 * m.p;
    z.spin += 0.5 * sign(m.s) * hbar * m.k();
  }
  return z;
}

SparseOperator normal_ordered(const SparseOperator& quadratic, double zero_point) {
  return quadratic - SparseOperator::scaled_identity(quadratic.basis_id(), quadratic.dim(), zero_point);
}

QuadraticForm::QuadraticForm(std::size_t modes)
    : aa(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(modes), static_cast<Eigen::Index>(modes))),
      a_adag(aa),
      adag_a(aa),
      adag_adag(aa) {}

void add_box_integral(QuadraticForm& q, const ModeSet& modes, std::span<const Complex> f,
                      std::span<const Complex> g, Complex weight) {
  const double volume = std::pow(modes.box_length(), 3);
  const Complex w = weight * volume;
  for (std::size_t m = 0; m < modes.size(); ++m) {
    for (std::size_t mp = 0; mp < modes.size(); ++mp) {
      const auto i = static_cast<Eigen::Index>(m);
      const auto j = static_cast<Eigen::Index>(mp);
      if (modes[m].n == modes[mp].n) {
        q.a_adag(i, j) += w * f[m] * std::conj(g[mp]);
        q.adag_a(i, j) += w * std::conj(f[m]) * g[mp];
      }
      if (modes[m].n == -modes[mp].n) {
        q.aa(i, j) += w * f[m] * g[mp];
        q.adag_adag(i, j) += w * std::conj(f[m]) * std::conj(g[mp]);
      }
    }
  }
}

SparseOperator to_operator(const FockBasis& basis, const QuadraticForm& q, Symmetry symmetry) {
  const std::size_t modes = basis.num_modes();
  std::vector<SparseOperator::Matrix> a, adag;
  for (std::size_t m = 0; m < modes; ++m) {
    a.push_back(annihilation(basis, m).matrix());
    adag.push_back(creation(basis, m).matrix());
  }
  const auto dim = static_cast<Eigen::Index>(basis.dim());
  SparseOperator::Matrix out(dim, dim);
  auto accumulate = [&](const Eigen::MatrixXcd& coeffs, const std::vector<SparseOperator::Matrix>& left,
                        const std::vector<SparseOperator::Matrix>& right) {
    for (std::size_t m = 0; m < modes; ++m) {
      for (std::size_t mp = 0; mp < modes; ++mp) {
        const Complex c = coeffs(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(mp));
        if (c == Complex(0.0, 0.0)) continue;
        out += c * SparseOperator::Matrix(left[m] * right[mp]);
      }
    }
  };
  accumulate(q.aa, a, a);
  accumulate(q.a_adag, a, adag);
  accumulate(q.adag_a, adag, a);
  accumulate(q.adag_adag, adag, adag);
  return {basis.id(), std::move(out), symmetry};
}

SparseOperator quadratic_H_from_fields(const FockBasis& basis, double t) {
  const ModeSet& modes = basis.mode_set();
  const SpacetimePoint x{Vec3::Zero(), t};
  const LinearForm e = field_form(modes, FieldKind::E, x);
  const LinearForm b = field_form(modes, FieldKind::B, x);
  QuadraticForm q(modes.size());
  const Complex weight = 1.0 / (8.0 * kPi);
  for (int i = 0; i < 3; ++i) {
    const auto ei = component(e, i);
    const auto bi = component(b, i);
    add_box_integral(q, modes, ei, ei, weight);
    add_box_integral(q, modes, bi, bi, weight);
  }
  return to_operator(basis, q);
}

namespace {

// (1/8 pi c) int (F x G - G x F)
VectorOperator antisymmetrized_cross(const FockBasis& basis, const LinearForm& f, const LinearForm& g) {
  const ModeSet& modes = basis.mode_set();
  const Complex weight = 1.0 / (8.0 * kPi * modes.units().c);
  std::array<SparseOperator, 3> out{SparseOperator::zero(basis.id(), basis.dim()),
                                    SparseOperator::zero(basis.id(), basis.dim()),
                                    SparseOperator::zero(basis.id(), basis.dim())};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const auto fj = component(f, j), fk = component(f, k);
    const auto gj = component(g, j), gk = component(g, k);
    QuadraticForm q(modes.size());
    // (F x G)_i = F_j G_k - F_k G_j,  (G x F)_i = G_j F_k - G_k F_j
    add_box_integral(q, modes, fj, gk, weight);
    add_box_integral(q, modes, fk, gj, -weight);
    add_box_integral(q, modes, gj, fk, -weight);
    add_box_integral(q, modes, gk, fj, weight);
    out[static_cast<std::size_t>(i)] = to_operator(basis, q);
  }
  return {out};
}

}  // namespace

VectorOperator quadratic_P_from_fields(const FockBasis& basis, double t) {
  const SpacetimePoint x{Vec3::Zero(), t};
  return antisymmetrized_cross(basis, field_form(basis.mode_set(), FieldKind::E, x),
                               field_form(basis.mode_set(), FieldKind::B, x));
}

VectorOperator quadratic_S_from_fields(const FockBasis& basis, double t) {
  const SpacetimePoint x{Vec3::Zero(), t};
  return antisymmetrized_cross(basis, field_form(basis.mode_set(), FieldKind::E, x),
                               field_form(basis.mode_set(), FieldKind::A, x));
}

namespace {

double identity_residual(const FockBasis& basis, const SparseOperator& projector, const SparseOperator& quadratic,
                         const SparseOperator& observable, double zero_point, double unit) {
  const SparseOperator reference =
      observable + SparseOperator::scaled_identity(basis.id(), basis.dim(), zero_point);
  const SparseOperator ref_p = project(projector, reference);
  const double scale = std::max(ref_p.max_abs(), unit);
  return project(projector, quadratic - reference).max_abs() / scale;
}

}  // namespace

IdentityResiduals check_quadratic_identities(const FockBasis& basis, double t) {
  const ModeSet& modes = basis.mode_set();
  const Units& u = modes.units();
  const SparseOperator projector = safe_projector(basis, 1);
  const ZeroPointConstants z = zero_point_constants(modes);
  double omega_max = 0.0;
  for (const Mode& m : modes.modes()) omega_max = std::max(omega_max, m.omega);

  IdentityResiduals r{};
  r.energy = identity_residual(basis, projector, quadratic_H_from_fields(basis, t), observable_H(basis), z.energy,
                               u.hbar * omega_max);
  const VectorOperator qp = quadratic_P_from_fields(basis, t);
  const VectorOperator qs = quadratic_S_from_fields(basis, t);
  const VectorOperator p = observable_P(basis);
  const VectorOperator s = observable_S(basis);
  r.momentum = 0.0;
  r.spin = 0.0;
  for (int i = 0; i < 3; ++i) {
    r.momentum = std::max(r.momentum, identity_residual(basis, projector, qp[i], p[i], z.momentum(i),
                                                        u.hbar * omega_max / u.c));
    r.spin = std::max(r.spin, identity_residual(basis, projector, qs[i], s[i], z.spin(i), u.hbar));
  }
  return r;
}

DerivativeReport check_derivative_relations(const FockBasis& basis, const SpacetimePoint& x, double h) {
  if (!(h > 0.0)) throw InvalidInput("finite-difference step must be positive");
  const ModeSet& modes = basis.mode_set();
  const double c = modes.units().c;
  const VectorOperator e = field(basis, FieldKind::E, x);
  const VectorOperator b = field(basis, FieldKind::B, x);
  const double e_norm = e.frobenius();
  const double b_norm = b.frobenius();

  auto residuals_at = [&](double step) {
    const VectorOperator e_fd = scale(central_difference(basis, FieldKind::A, x, -1, step), -1.0 / c);
    const VectorOperator b_fd = curl_fd(gradient_fd(basis, FieldKind::A, x, step));
    return std::pair{vector_op_difference(e_fd, e).frobenius() / e_norm,
                     vector_op_difference(b_fd, b).frobenius() / b_norm};
  };

  DerivativeReport report;
  const auto [e_h, b_h] = residuals_at(h);
  const auto [e_h2, b_h2] = residuals_at(h / 2.0);
  report.electric = {e_h, e_h2};
  report.magnetic = {b_h, b_h2};

  const LinearForm a_form = field_form(modes, FieldKind::A, x);
  const VectorOperator e_exact = to_operator(basis, Complex(-1.0 / c) * time_derivative(a_form, modes));
  const VectorOperator b_exact = to_operator(basis, curl(a_form, modes));
  report.analytic = std::max(vector_op_difference(e_exact, e).frobenius() / e_norm,
                             vector_op_difference(b_exact, b).frobenius() / b_norm);
  return report;
}

MaxwellReport check_maxwell(const FockBasis& basis, const SpacetimePoint& x, double h) {
  if (!(h > 0.0)) throw InvalidInput("finite-difference step must be positive");
  const ModeSet& modes = basis.mode_set();
  const double c = modes.units().c;
  const double scale_norm =
      std::max(field(basis, FieldKind::E, x).frobenius(), field(basis, FieldKind::B, x).frobenius()) *
      max_wavenumber(modes);

  struct Raw {
    double faraday, ampere, gauss_e, gauss_b;
  };
  auto residuals_at = [&](double step) {
    const SpatialDerivatives ge = gradient_fd(basis, FieldKind::E, x, step);
    const SpatialDerivatives gb = gradient_fd(basis, FieldKind::B, x, step);
    const VectorOperator de_dt = central_difference(basis, FieldKind::E, x, -1, step);
    const VectorOperator db_dt = central_difference(basis, FieldKind::B, x, -1, step);
    const VectorOperator curl_e = curl_fd(ge);
    const VectorOperator curl_b = curl_fd(gb);
    Raw r{};
    r.faraday = vector_op_difference(scale(curl_e, -1.0), scale(db_dt, 1.0 / c)).frobenius() / scale_norm;
    r.ampere = vector_op_difference(curl_b, scale(de_dt, 1.0 / c)).frobenius() / scale_norm;
    r.gauss_e = divergence_fd(ge).frobenius() / scale_norm;
    r.gauss_b = divergence_fd(gb).frobenius() / scale_norm;
    return r;
  };

  const Raw at_h = residuals_at(h);
  const Raw at_h2 = residuals_at(h / 2.0);
  MaxwellReport report;
  report.faraday = {at_h.faraday, at_h2.faraday};
  report.ampere = {at_h.ampere, at_h2.ampere};
  report.gauss_e = {at_h.gauss_e, at_h2.gauss_e};
  report.gauss_b = {at_h.gauss_b, at_h2.gauss_b};

  const LinearForm e_form = field_form(modes, FieldKind::E, x);
  const LinearForm b_form = field_form(modes, FieldKind::B, x);
  const Complex inv_c = 1.0 / c;
  const LinearForm faraday = Complex(-1.0) * curl(e_form, modes) - inv_c * time_derivative(b_form, modes);
  const LinearForm ampere = curl(b_form, modes) - inv_c * time_derivative(e_form, modes);
  report.analytic = std::max({to_operator(basis, faraday).frobenius(), to_operator(basis, ampere).frobenius(),
                              to_operator(basis, divergence(e_form, modes)).frobenius(),
                              to_operator(basis, divergence(b_form, modes)).frobenius()}) /
                    scale_norm;
  return report;
}

Eigen::Matrix3cd field_commutator_closed_form(const ModeSet& modes, FieldKind first, FieldKind second,
                                              const SpacetimePoint& x1, const SpacetimePoint& x2) {
  if (first == FieldKind::A || second == FieldKind::A) {
    throw InvalidInput("closed-form field commutators are defined for E and B only");
  }
  require_completeness(modes);
  const Units& u = modes.units();
  const double norm = modes.delta3p() / std::pow(2.0 * kPi * u.hbar, 2);
  const Vec3 rho = x1.r - x2.r;
  const double tau = x1.t - x2.t;

  Eigen::Matrix3cd out = Eigen::Matrix3cd::Zero();
  for (const IVec3& n : modes.distinct_momenta()) {
    const Mode& mode = modes[modes.index_of({Helicity::plus, n})];
    const Vec3& k = mode.k();
    Eigen::Matrix3d w;
    if (first == second) {
      w = Eigen::Matrix3d::Identity() - k * k.transpose();
    } else {
      // epsilon_ijl k_l
      w << 0.0, k(2), -k(1),
          -k(2), 0.0, k(0),
          k(1), -k(0), 0.0;
      if (first == FieldKind::B) w = -w;
    }
    const double theta = mode.p.dot(rho) / u.hbar - mode.omega * tau;
    out += (norm * mode.omega * Complex(0.0, 2.0 * std::sin(theta))) * w.cast<Complex>();
  }
  return out;
}

double field_commutator_residual(const FockBasis& basis, FieldKind first, FieldKind second,
                                 const SpacetimePoint& x1, const SpacetimePoint& x2) {
  const Eigen::Matrix3cd closed = field_commutator_closed_form(basis.mode_set(), first, second, x1, x2);
  const VectorOperator f1 = field(basis, first, x1);
  const VectorOperator f2 = field(basis, second, x2);
  const SparseOperator projector = safe_projector(basis, 1);
  double r = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const SparseOperator diff = project(projector, commutator(f1[i], f2[j])) - closed(i, j) * projector;
      r = std::max(r, diff.max_abs());
    }
  }
  return r;
}

double field_number_commutator_residual(const FockBasis& basis, FieldKind kind, const SpacetimePoint& x) {
  const VectorOperator f = field(basis, kind, x);
  const VectorOperator closed = field_number_commutator(basis, kind, x);
  const SparseOperator n = total_number(basis);
  double r = 0.0;
  for (int i = 0; i < 3; ++i) r = std::max(r, (commutator(f[i], n) - closed[i]).max_abs());
  return r;
}

double discrete_pauli_jordan(const ModeSet& modes, const Vec3& rho, double tau) {
  if (!modes.momentum_symmetric()) {
    throw PreconditionError("the lattice Pauli-Jordan sum needs a momentum set closed under n -> -n");
  }
  const Units& u = modes.units();
  const double dp = 2.0 * kPi * u.hbar / modes.box_length();
  Complex sum = 0.0;
  for (const IVec3& n : modes.distinct_momenta()) {
    const Vec3 p = dp * n.cast<double>();
    const double omega = u.c * p.norm() / u.hbar;
    sum += std::polar(1.0, p.dot(rho) / u.hbar) * (std::sin(omega * tau) / omega);
  }
  sum *= -modes.delta3p() / std::pow(2.0 * kPi * u.hbar, 3);
  if (std::abs(sum.imag()) > 1e-12 * std::max(1.0, std::abs(sum.real()))) {
    throw PreconditionError("lattice Pauli-Jordan sum is not real");
  }
  return sum.real();
}

double vacuum_square_lattice_sum(const ModeSet& modes, FieldKind kind) {
  const Units& u = modes.units();
  double sum = 0.0;
  for (const Mode& m : modes.modes()) sum += kind == FieldKind::A ? 1.0 / m.omega : m.omega;
  const double pref = (kind == FieldKind::A ? u.c * u.c : 1.0) / std::pow(2.0 * kPi * u.hbar, 2);
  return pref * modes.delta3p() * sum;
}

double vacuum_square_mode_sum(const ModeSet& modes, FieldKind kind, const SpacetimePoint& x) {
  const LinearForm form = field_form(modes, kind, x);
  double sum = 0.0;
  for (const CVec3& a : form.amplitudes) sum += a.squaredNorm();
  return sum;
}

}  // namespace photonfield
