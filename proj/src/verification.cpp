#include "photonfield/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "photonfield/classical_photon.hpp"
#include "photonfield/spin_helicity.hpp"

namespace photonfield {

namespace {

using nlohmann::json;
using Rng = std::mt19937_64;

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> g;
  Vec3 v;
  do {
    v = Vec3(g(rng), g(rng), g(rng));
  } while (v.norm() < 1e-3);
  return v.normalized();
}

/// Unit vector at angle ~delta from ±(1,1,1)/sqrt3, where the closed-form helicity
/// denominator is ~1.22 delta.
Vec3 near_singular_direction(Rng& rng) {
  std::uniform_real_distribution<double> log_delta(std::log(1e-7), std::log(5e-4));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const Vec3 axis = Vec3(1.0, 1.0, 1.0).normalized() * (std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0);
  const Vec3 u = Vec3(1.0, -1.0, 0.0).normalized();
  const Vec3 w = axis.cross(u);
  const double phi = angle(rng);
  return (axis + std::exp(log_delta(rng)) * (std::cos(phi) * u + std::sin(phi) * w)).normalized();
}

Eigen::VectorXcd random_state_vector(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(g(rng), g(rng));
  return v.normalized();
}

double max_omega(const ModeSet& modes) {
  double w = 0.0;
  for (const Mode& m : modes.modes()) w = std::max(w, m.omega);
  return w;
}

double min_omega(const ModeSet& modes) {
  double w = std::numeric_limits<double>::infinity();
  for (const Mode& m : modes.modes()) w = std::min(w, m.omega);
  return w;
}

SpacetimePoint random_point(Rng& rng, const ModeSet& modes) {
  std::uniform_real_distribution<double> r(0.0, modes.box_length());
  std::uniform_real_distribution<double> t(0.0, 2.0 * kPi / min_omega(modes));
  SpacetimePoint x;
  x.r = Vec3(r(rng), r(rng), r(rng));
  x.t = t(rng);
  return x;
}

/// Lazily built shared state of one verification run.
class Context {
 public:
  explicit Context(const Scenario& s) : scenario(s), modes(s.lattice) {}

  const Scenario& scenario;
  const ModeSet modes;

  const FockBasis& basis() {
    if (!basis_) basis_.emplace(build_basis(scenario.lattice));
    return *basis_;
  }
  const FockState& state() {
    if (!state_) state_ = build_state(basis(), scenario.state);
    return *state_;
  }
  const SparseOperator& projector() {
    if (!projector_) projector_ = safe_projector(basis(), 1);
    return *projector_;
  }
  const IdentityResiduals& identities_at(int which) {
    auto& slot = identities_[static_cast<std::size_t>(which)];
    if (!slot) slot = check_quadratic_identities(basis(), which == 0 ? 0.0 : scenario.sampling.later_time);
    return *slot;
  }
  const DerivativeReport& derivatives() {
    if (!derivatives_) derivatives_ = check_derivative_relations(basis(), scenario.sampling.probe, scenario.sampling.fd_step);
    return *derivatives_;
  }
  const MaxwellReport& maxwell() {
    if (!maxwell_) maxwell_ = check_maxwell(basis(), scenario.sampling.probe, scenario.sampling.fd_step);
    return *maxwell_;
  }

 private:
  std::optional<FockBasis> basis_;
  std::optional<FockState> state_;
  std::optional<SparseOperator> projector_;
  std::array<std::optional<IdentityResiduals>, 2> identities_;
  std::optional<DerivativeReport> derivatives_;
  std::optional<MaxwellReport> maxwell_;
};

struct Outcome {
  double residual;
  json params;
};

using CheckFn = std::function<Outcome(Context&, Rng&)>;

struct CheckDef {
  double tolerance;
  CheckFn run;
};

Outcome polarization_relations(Context& ctx, Rng& rng) {
  const auto& s = ctx.scenario.sampling;
  const TransverseGauge& gauge = ctx.scenario.lattice.gauge;
  double worst = 0.0;
  for (const Mode& m : ctx.modes.modes()) worst = std::max(worst, check_relations(m.triad).max_residual());
  for (int i = 0; i < s.directions; ++i) {
    worst = std::max(worst, check_relations(make_triad(Direction(random_direction(rng)), gauge)).max_residual());
  }
  return {worst, {{"random_directions", s.directions}, {"lattice_directions", ctx.modes.size()}}};
}

std::vector<Vec3> helicity_directions(Context& ctx, Rng& rng) {
  const auto& s = ctx.scenario.sampling;
  std::vector<Vec3> dirs;
  for (const Mode& m : ctx.modes.modes()) dirs.push_back(m.k());
  const int near = std::min(s.near_singular_directions, s.directions);
  for (int i = 0; i < near; ++i) dirs.push_back(near_singular_direction(rng));
  for (int i = near; i < s.directions; ++i) dirs.push_back(random_direction(rng));
  return dirs;
}

Outcome helicity_eigenvalue(Context& ctx, Rng& rng) {
  const double hbar = ctx.modes.units().hbar;
  const SpinMatrices spin = spin_matrices(hbar);
  double worst = 0.0;
  const auto dirs = helicity_directions(ctx, rng);
  for (const Vec3& k : dirs) {
    const HelicityPair chi = helicity_states(Direction(k));
    const Eigen::Matrix3cd sk = spin.along(k);
    for (Helicity s : {Helicity::plus, Helicity::minus}) {
      const CVec3 r = sk * chi.chi(s) - (sign(s) * hbar) * chi.chi(s);
      worst = std::max(worst, r.cwiseAbs().maxCoeff() / hbar);
    }
  }
  return {worst, {{"directions", dirs.size()}, {"near_singular", ctx.scenario.sampling.near_singular_directions}}};
}

Outcome helicity_polarization_overlap(Context& ctx, Rng& rng) {
  double worst = 0.0;
  const auto dirs = helicity_directions(ctx, rng);
  for (const Vec3& k : dirs) {
    const Direction d(k);
    const HelicityPair chi = helicity_states(d);
    const PolarizationTriad triad = make_triad(d, ctx.scenario.lattice.gauge);
    for (Helicity s : {Helicity::plus, Helicity::minus}) {
      worst = std::max(worst, std::abs(std::abs(chi.chi(s).dot(triad.eps(s))) - 1.0));
    }
  }
  return {worst, {{"directions", dirs.size()}}};
}

Outcome classical_boost(Context& ctx, Rng& rng) {
  const int n = ctx.scenario.sampling.boosts;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Helicity s = unit(rng) < 0.5 ? Helicity::plus : Helicity::minus;
    const ClassicalPhoton photon(0.5 + 1.5 * unit(rng), Direction(random_direction(rng)), s, 2.0 * kPi * unit(rng),
                                 ctx.scenario.lattice.gauge);
    const FieldPair f = rotating_vectors(photon, unit(rng));
    const Vec3 beta = random_direction(rng) * 0.9 * std::cbrt(unit(rng));
    const PhotonTensor boosted = boost(build_tensor(f.e, f.b), beta);
    const Eigen::Matrix4d& m = boosted.matrix();
    const FieldPair g = extract_fields(boosted);
    const double scale = g.e.squaredNorm();
    worst = std::max({worst, (m + m.transpose()).cwiseAbs().maxCoeff() / m.cwiseAbs().maxCoeff(),
                      std::abs(g.e.dot(g.b)) / scale, std::abs(g.e.squaredNorm() - g.b.squaredNorm()) / scale});
  }
  return {worst, {{"boosts", n}, {"max_speed", 0.9}}};
}

Outcome classical_doppler(Context& ctx, Rng& rng) {
  std::uniform_real_distribution<double> speed(-0.9, 0.9);
  const int n = std::max(1, ctx.scenario.sampling.boosts / 10);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec3 k = i == 0 ? Vec3::UnitZ() : random_direction(rng);
    const double b = i == 0 ? 0.6 : speed(rng);
    const ClassicalPhoton photon(1.0, Direction(k), Helicity::plus, 0.0, ctx.scenario.lattice.gauge);
    const FieldPair f = rotating_vectors(photon, 0.0);
    const FieldPair g = extract_fields(boost(build_tensor(f.e, f.b), b * k));
    const double gamma = 1.0 / std::sqrt(1.0 - b * b);
    worst = std::max(worst, std::abs(g.e.norm() / f.e.norm() - gamma * (1.0 - b)));
  }
  return {worst, {{"boosts", n}, {"reference_beta", 0.6}}};
}

Outcome ladder_algebra(Context& ctx, Rng&) {
  const FockBasis& basis = ctx.basis();
  const SparseOperator& p = ctx.projector();
  const std::size_t m = basis.num_modes();
  std::vector<SparseOperator> a, ad;
  for (std::size_t i = 0; i < m; ++i) {
    a.push_back(annihilation(basis, i));
    ad.push_back(creation(basis, i));
  }
  const SparseOperator one = identity(basis);
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    worst = std::max(worst, (ad[i] * a[i] - number_operator(basis, i)).max_abs());
    for (std::size_t j = 0; j < m; ++j) {
      const SparseOperator expected = i == j ? one : SparseOperator::zero(basis.id(), basis.dim());
      worst = std::max(worst, project(p, commutator(a[i], ad[j]) - expected).max_abs());
      worst = std::max(worst, commutator(a[i], a[j]).max_abs());
    }
  }
  return {worst, {{"modes", m}, {"n_max", basis.n_max()}, {"dimension", basis.dim()}, {"projection_margin", 1}}};
}

Outcome hermiticity(Context& ctx, Rng&) {
  const FockBasis& basis = ctx.basis();
  const SpacetimePoint& x = ctx.scenario.sampling.probe;
  double worst = observable_H(basis).symmetry_residual();
  for (FieldKind k : {FieldKind::E, FieldKind::B, FieldKind::A}) {
    const VectorOperator f = field(basis, k, x);
    const VectorOperator c = field_number_commutator(basis, k, x);
    for (int i = 0; i < 3; ++i) worst = std::max({worst, f[i].symmetry_residual(), c[i].symmetry_residual()});
  }
  return {worst, {{"t", x.t}}};
}

Outcome identity_check(Context& ctx, double IdentityResiduals::*member) {
  const double r = std::max(ctx.identities_at(0).*member, ctx.identities_at(1).*member);
  return {r, {{"times", {0.0, ctx.scenario.sampling.later_time}}, {"projection_margin", 1}}};
}

Outcome conservation(Context& ctx, Rng&) {
  const FockBasis& basis = ctx.basis();
  const SparseOperator& p = ctx.projector();
  const double t = ctx.scenario.sampling.later_time;
  const Units& u = ctx.modes.units();
  const double w = max_omega(ctx.modes);
  auto drift = [&](const SparseOperator& a, const SparseOperator& b, double unit) {
    const SparseOperator pa = project(p, a);
    return project(p, a - b).max_abs() / std::max(pa.max_abs(), unit);
  };
  double worst = drift(quadratic_H_from_fields(basis, 0.0), quadratic_H_from_fields(basis, t), u.hbar * w);
  const VectorOperator p0 = quadratic_P_from_fields(basis, 0.0), p1 = quadratic_P_from_fields(basis, t);
  const VectorOperator s0 = quadratic_S_from_fields(basis, 0.0), s1 = quadratic_S_from_fields(basis, t);
  for (int i = 0; i < 3; ++i) {
    worst = std::max({worst, drift(p0[i], p1[i], u.hbar * w / u.c), drift(s0[i], s1[i], u.hbar)});
  }
  return {worst, {{"times", {0.0, t}}}};
}

json fd_params(const FiniteDifferenceResidual& r, double h) {
  return {{"h", h}, {"residual_half_step", r.at_half_h}, {"richardson_ratio", r.ratio()}};
}

Outcome richardson(std::initializer_list<std::pair<const char*, FiniteDifferenceResidual>> parts) {
  double worst = 0.0;
  json ratios = json::object();
  for (const auto& [name, r] : parts) {
    if (!r.ratio_applicable()) {
      ratios[name] = nullptr;
      continue;
    }
    ratios[name] = r.ratio();
    worst = std::max(worst, std::abs(r.ratio() - 4.0));
  }
  return {worst, {{"expected_ratio", 4.0}, {"ratios", ratios}, {"floor", 1e-11}}};
}

Outcome commutator_matrix_path(Context& ctx, Rng& rng) {
  const int n = ctx.scenario.sampling.point_pairs;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const SpacetimePoint x1 = random_point(rng, ctx.modes), x2 = random_point(rng, ctx.modes);
    for (auto [f1, f2] : {std::pair{FieldKind::E, FieldKind::E}, {FieldKind::B, FieldKind::B},
                          {FieldKind::E, FieldKind::B}, {FieldKind::B, FieldKind::E}}) {
      worst = std::max(worst, field_commutator_residual(ctx.basis(), f1, f2, x1, x2));
    }
  }
  return {worst, {{"point_pairs", n}, {"pairs", {"EE", "BB", "EB", "BE"}}, {"projection_margin", 1}}};
}

Outcome commutator_equal_time(Context& ctx, Rng& rng) {
  if (!ctx.modes.momentum_symmetric()) {
    throw PreconditionError("equal-time commutators vanish only for momentum sets closed under n -> -n");
  }
  const int n = ctx.scenario.sampling.point_pairs;
  const FockBasis& basis = ctx.basis();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    SpacetimePoint x1 = random_point(rng, ctx.modes), x2 = random_point(rng, ctx.modes);
    x2.t = x1.t;
    for (FieldKind k : {FieldKind::E, FieldKind::B}) {
      worst = std::max(worst, field_commutator_closed_form(ctx.modes, k, k, x1, x2).cwiseAbs().maxCoeff());
      const VectorOperator f1 = field(basis, k, x1), f2 = field(basis, k, x2);
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) worst = std::max(worst, project(ctx.projector(), commutator(f1[a], f2[b])).max_abs());
      }
    }
  }
  return {worst, {{"point_pairs", n}}};
}

Outcome commutator_ee_equals_bb(Context& ctx, Rng& rng) {
  const int n = ctx.scenario.sampling.point_pairs;
  const FockBasis& basis = ctx.basis();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const SpacetimePoint x1 = random_point(rng, ctx.modes), x2 = random_point(rng, ctx.modes);
    worst = std::max(worst, (field_commutator_closed_form(ctx.modes, FieldKind::E, FieldKind::E, x1, x2) -
                             field_commutator_closed_form(ctx.modes, FieldKind::B, FieldKind::B, x1, x2))
                                .cwiseAbs()
                                .maxCoeff());
    const VectorOperator e1 = field(basis, FieldKind::E, x1), e2 = field(basis, FieldKind::E, x2);
    const VectorOperator b1 = field(basis, FieldKind::B, x1), b2 = field(basis, FieldKind::B, x2);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        worst = std::max(worst,
                         project(ctx.projector(), commutator(e1[a], e2[b]) - commutator(b1[a], b2[b])).max_abs());
      }
    }
  }
  return {worst, {{"point_pairs", n}}};
}

Outcome field_number(Context& ctx, Rng& rng) {
  double worst = 0.0;
  std::vector<SpacetimePoint> points{ctx.scenario.sampling.probe};
  for (int i = 0; i < 3; ++i) points.push_back(random_point(rng, ctx.modes));
  for (const SpacetimePoint& x : points) {
    for (FieldKind k : {FieldKind::E, FieldKind::B, FieldKind::A}) {
      worst = std::max(worst, field_number_commutator_residual(ctx.basis(), k, x));
    }
  }
  return {worst, {{"points", points.size()}, {"fields", {"E", "B", "A"}}}};
}

std::vector<FockState> sample_states(Context& ctx, Rng& rng) {
  std::vector<FockState> states{ctx.state()};
  for (int i = 0; i < ctx.scenario.sampling.random_states; ++i) {
    states.push_back({ctx.basis().id(), random_state_vector(rng, ctx.basis().dim()), 0.0});
  }
  return states;
}

Outcome expectation_two_path(Context& ctx, Rng& rng) {
  const FockBasis& basis = ctx.basis();
  const auto states = sample_states(ctx, rng);
  std::vector<SpacetimePoint> points;
  for (int i = 0; i < ctx.scenario.sampling.random_points; ++i) points.push_back(random_point(rng, ctx.modes));
  std::vector<AmplitudeProfile> profiles;
  for (const FockState& s : states) profiles.push_back(amplitude_profile(basis, s));
  double worst = 0.0;
  for (const SpacetimePoint& x : points) {
    for (FieldKind k : {FieldKind::E, FieldKind::B, FieldKind::A}) {
      const VectorOperator f = field(basis, k, x);
      for (std::size_t j = 0; j < states.size(); ++j) {
        const Vec3 closed = field_expectation_closed_form(ctx.modes, profiles[j], k, x);
        for (int i = 0; i < 3; ++i) {
          worst = std::max(worst, std::abs(expectation(f[i], states[j]).real() - closed(i)));
        }
      }
    }
  }
  return {worst, {{"states", states.size()}, {"points", points.size()}, {"fields", {"E", "B", "A"}}}};
}

Outcome amplitude_check(Context& ctx, Rng& rng) {
  const FockBasis& basis = ctx.basis();
  const auto states = sample_states(ctx, rng);
  double worst = 0.0;
  for (std::size_t m = 0; m < basis.num_modes(); ++m) {
    const SparseOperator a = annihilation(basis, m);
    for (const FockState& s : states) {
      worst = std::max(worst, std::abs(amplitude_profile(basis, s).mean_annihilation[m] - expectation(a, s)));
    }
  }
  return {worst, {{"states", states.size()}}};
}

Outcome variance_nonnegative(Context& ctx, Rng& rng) {
  const FockBasis& basis = ctx.basis();
  const auto states = sample_states(ctx, rng);
  const SpacetimePoint& x = ctx.scenario.sampling.probe;
  double worst = 0.0;
  for (FieldKind k : {FieldKind::E, FieldKind::B, FieldKind::A}) {
    const VectorOperator f = field(basis, k, x);
    for (const FockState& s : states) {
      for (int i = 0; i < 3; ++i) {
        const Eigen::VectorXcd fv = f[i].apply(s.coefficients);
        const double mean = s.coefficients.dot(fv).real();
        worst = std::max(worst, mean * mean - fv.squaredNorm());
      }
    }
  }
  return {std::max(worst, 0.0), {{"states", states.size()}}};
}

Outcome vacuum_fluctuation(Context& ctx, Rng&) {
  const FockBasis& basis = ctx.basis();
  const FockState vac = vacuum(basis);
  const SpacetimePoint& x = ctx.scenario.sampling.probe;
  double worst = 0.0;
  json sums = json::object();
  for (FieldKind k : {FieldKind::E, FieldKind::B, FieldKind::A}) {
    const double lattice = vacuum_square_lattice_sum(ctx.modes, k);
    const double matrix = field_square_expectation(basis, vac, k, x).sum();
    const double modes = vacuum_square_mode_sum(ctx.modes, k, x);
    const Vec3 mean = field_expectation_matrix(basis, vac, k, x);
    worst = std::max({worst, std::abs(matrix - lattice) / lattice, std::abs(modes - lattice) / lattice,
                      mean.cwiseAbs().maxCoeff()});
    sums[std::string(to_string(k))] = lattice;
  }
  return {worst, {{"lattice_sum", sums}}};
}

const std::map<std::string, CheckDef>& registry() {
  static const std::map<std::string, CheckDef> checks = [] {
    std::map<std::string, CheckDef> c;
    c["polarization_relations"] = {1e-12, polarization_relations};
    c["helicity_eigenvalue"] = {1e-10, helicity_eigenvalue};
    c["helicity_polarization_overlap"] = {1e-10, helicity_polarization_overlap};
    c["classical_boost"] = {1e-9, classical_boost};
    c["classical_doppler"] = {1e-10, classical_doppler};
    c["ladder_algebra"] = {1e-12, ladder_algebra};
    c["hermiticity"] = {1e-12, hermiticity};
    c["energy_identity"] = {1e-10, [](Context& ctx, Rng&) { return identity_check(ctx, &IdentityResiduals::energy); }};
    c["momentum_identity"] = {1e-10,
                              [](Context& ctx, Rng&) { return identity_check(ctx, &IdentityResiduals::momentum); }};
    c["spin_identity"] = {1e-10, [](Context& ctx, Rng&) { return identity_check(ctx, &IdentityResiduals::spin); }};
    c["conservation"] = {1e-10, conservation};

    const auto fd = [](FiniteDifferenceResidual DerivativeReport::*member) {
      return [member](Context& ctx, Rng&) {
        const auto& r = ctx.derivatives().*member;
        return Outcome{r.at_h, fd_params(r, ctx.scenario.sampling.fd_step)};
      };
    };
    c["derivative.electric"] = {1e-6, fd(&DerivativeReport::electric)};
    c["derivative.magnetic"] = {1e-6, fd(&DerivativeReport::magnetic)};
    c["derivative.analytic"] = {1e-12, [](Context& ctx, Rng&) { return Outcome{ctx.derivatives().analytic, {}}; }};
    c["derivative.richardson"] = {0.8, [](Context& ctx, Rng&) {
                                    const auto& d = ctx.derivatives();
                                    return richardson({{"electric", d.electric}, {"magnetic", d.magnetic}});
                                  }};

    const auto mx = [](FiniteDifferenceResidual MaxwellReport::*member) {
      return [member](Context& ctx, Rng&) {
        const auto& r = ctx.maxwell().*member;
        return Outcome{r.at_h, fd_params(r, ctx.scenario.sampling.fd_step)};
      };
    };
    c["maxwell.faraday"] = {1e-6, mx(&MaxwellReport::faraday)};
    c["maxwell.ampere"] = {1e-6, mx(&MaxwellReport::ampere)};
    c["maxwell.gauss_e"] = {1e-6, mx(&MaxwellReport::gauss_e)};
    c["maxwell.gauss_b"] = {1e-6, mx(&MaxwellReport::gauss_b)};
    c["maxwell.analytic"] = {1e-12, [](Context& ctx, Rng&) { return Outcome{ctx.maxwell().analytic, {}}; }};
    c["maxwell.richardson"] = {0.8, [](Context& ctx, Rng&) {
                                 const auto& m = ctx.maxwell();
                                 return richardson({{"faraday", m.faraday},
                                                    {"ampere", m.ampere},
                                                    {"gauss_e", m.gauss_e},
                                                    {"gauss_b", m.gauss_b}});
                               }};

    c["commutator.matrix_path"] = {1e-10, commutator_matrix_path};
    c["commutator.equal_time"] = {1e-12, commutator_equal_time};
    c["commutator.ee_equals_bb"] = {1e-12, commutator_ee_equals_bb};
    c["field_number_commutator"] = {1e-12, field_number};
    c["expectation_two_path"] = {1e-10, expectation_two_path};
    c["amplitude_profile"] = {1e-12, amplitude_check};
    c["variance_nonnegative"] = {1e-12, variance_nonnegative};
    c["vacuum_fluctuation"] = {1e-12, vacuum_fluctuation};
    return c;
  }();
  return checks;
}

}  // namespace

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

double base_tolerance(const std::string& check) {
  const auto it = registry().find(check);
  if (it == registry().end()) throw InvalidInput("unknown check '" + check + "'");
  return it->second.tolerance;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

json Report::to_json() const {
  json records = json::array();
  for (const CheckResult& c : checks) {
    records.push_back({{"check", c.check},
                       {"params", c.params.is_null() ? json::object() : c.params},
                       {"residual", c.residual},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
  }
  return {{"schema", "photonfield.report/1"},
          {"scenario", scenario},
          {"seed", seed},
          {"tolerance_scale", tolerance_scale},
          {"passed", passed()},
          {"checks", records}};
}

Report run_checks(const Scenario& scenario, const VerifyOptions& options) {
  if (!(options.tolerance_scale >= 0.0) || !std::isfinite(options.tolerance_scale)) {
    throw InvalidInput("tolerance scale must be a finite nonnegative number");
  }
  Report report;
  report.scenario = scenario.name;
  report.seed = options.seed.value_or(scenario.seed);
  report.tolerance_scale = options.tolerance_scale;

  std::vector<std::string> names = scenario.checks.empty() ? registered_checks() : scenario.checks;
  std::sort(names.begin(), names.end());

  Context ctx(scenario);
  for (const std::string& name : names) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw InvalidInput("unknown check '" + name + "'");
    Rng rng(report.seed ^ name_hash(name));
    Outcome o = it->second.run(ctx, rng);
    CheckResult r;
    r.check = name;
    r.params = std::move(o.params);
    r.residual = o.residual;
    r.tolerance = it->second.tolerance * options.tolerance_scale;
    r.pass = std::isfinite(r.residual) && r.residual <= r.tolerance;
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace photonfield
