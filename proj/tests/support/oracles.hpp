#pragma once

// Independent reference implementations used by the tests. Nothing here calls the
// library's operator builders: ladder matrices come from Kronecker products, fields from
// explicit per-mode loops, box integrals from grid quadrature.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Dense = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr Complex I{0.0, 1.0};

inline Dense kron(const Dense& a, const Dense& b) {
  Dense out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/// Truncated single-mode annihilator: a|n> = sqrt(n)|n-1>.
inline Dense single_mode_a(int n_max) {
  Dense a = Dense::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

/// a_m = 1 x ... x a x ... x 1 with mode 0 as the leftmost (most significant) factor.
inline std::vector<Dense> ladder(int modes, int n_max) {
  const Dense a = single_mode_a(n_max);
  const Dense one = Dense::Identity(n_max + 1, n_max + 1);
  std::vector<Dense> out;
  for (int m = 0; m < modes; ++m) {
    Dense acc = Dense::Identity(1, 1);
    for (int j = 0; j < modes; ++j) acc = kron(acc, j == m ? a : one);
    out.push_back(acc);
  }
  return out;
}

inline CVec3 circular(const Vec3& e_hat, const Vec3& b_hat, int s) {
  const CVec3 e = e_hat.cast<Complex>(), b = b_hat.cast<Complex>();
  return s > 0 ? CVec3((e + I * b) / std::sqrt(2.0)) : CVec3((I * e + b) / std::sqrt(2.0));
}

inline CVec3 cross(const CVec3& a, const CVec3& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

/// Minimal mode description for the oracle field builder.
struct OracleMode {
  int s;
  Eigen::Vector3i n;
  Vec3 e_hat;
  Vec3 b_hat;
};

struct Lattice {
  double L = 2.0 * pi;
  double hbar = 1.0;
  double c = 1.0;
};

enum class Kind { E, B, A };

/// Dense field components by direct summation of the mode expansion.
inline std::array<Dense, 3> field(const std::vector<OracleMode>& modes, const std::vector<Dense>& a, const Lattice& lat,
                                  Kind kind, const Vec3& r, double t) {
  const double dp = 2.0 * pi * lat.hbar / lat.L;
  const double d3p = dp * dp * dp;
  const Eigen::Index dim = a.front().rows();
  std::array<Dense, 3> out{Dense::Zero(dim, dim), Dense::Zero(dim, dim), Dense::Zero(dim, dim)};
  for (std::size_t m = 0; m < modes.size(); ++m) {
    const Vec3 p = dp * modes[m].n.cast<double>();
    const double omega = lat.c * p.norm() / lat.hbar;
    const Vec3 k = p.normalized();
    const CVec3 eps = circular(modes[m].e_hat, modes[m].b_hat, modes[m].s);
    const Complex phase = std::exp(I * (p.dot(r) / lat.hbar - omega * t));
    CVec3 amp;
    switch (kind) {
      case Kind::E: amp = I * std::sqrt(omega) * eps; break;
      case Kind::B: amp = I * std::sqrt(omega) * cross(k.cast<Complex>(), eps); break;
      case Kind::A: amp = lat.c / std::sqrt(omega) * eps; break;
    }
    amp *= std::sqrt(d3p) / (2.0 * pi * lat.hbar) * phase;
    for (int i = 0; i < 3; ++i) {
      out[static_cast<std::size_t>(i)] += amp(i) * a[m] + std::conj(amp(i)) * a[m].adjoint();
    }
  }
  return out;
}

/// Exact box integral of a trigonometric polynomial by an N^3 midpoint grid. The grid is
/// exact when N exceeds twice the largest |n_i| present in the integrand's factors.
template <typename F>
Dense box_quadrature(const Lattice& lat, int n, Eigen::Index dim, F&& integrand) {
  Dense acc = Dense::Zero(dim, dim);
  const double h = lat.L / n;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) acc += integrand(Vec3((x + 0.5) * h, (y + 0.5) * h, (z + 0.5) * h));
    }
  }
  return acc * (h * h * h);
}

/// (S_j)_{kl} = -i epsilon_{jkl}, written out explicitly.
inline std::array<Eigen::Matrix3cd, 3> spin() {
  std::array<Eigen::Matrix3cd, 3> s;
  for (auto& m : s) m.setZero();
  s[0](1, 2) = -I;
  s[0](2, 1) = I;
  s[1](2, 0) = -I;
  s[1](0, 2) = I;
  s[2](0, 1) = -I;
  s[2](1, 0) = I;
  return s;
}

/// Eigenvector of S·k for eigenvalue `lambda` from a general complex eigensolver.
inline CVec3 spin_eigenvector(const Vec3& k, double lambda) {
  const auto s = spin();
  const Eigen::Matrix3cd sk = k(0) * s[0] + k(1) * s[1] + k(2) * s[2];
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(sk);
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(solver.eigenvalues()(i) - lambda) < std::abs(solver.eigenvalues()(best) - lambda)) best = i;
  }
  return solver.eigenvectors().col(best).normalized();
}

/// Poisson tail via log-gamma terms in long double, summed from the far end.
inline double poisson_tail(double mean, int cap) {
  long double sum = 0.0L;
  for (int n = cap + 400; n > cap; --n) {
    sum += std::exp(static_cast<long double>(n) * std::log(static_cast<long double>(mean)) - mean -
                    std::lgamma(static_cast<long double>(n) + 1.0L));
  }
  return static_cast<double>(sum);
}

inline Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec3 v;
  do {
    v = Vec3(g(rng), g(rng), g(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

/// Relation residual of a dense matrix against a target, entrywise maximum.
inline double max_abs(const Dense& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace oracle
