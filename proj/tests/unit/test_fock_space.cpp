#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "photonfield/fock_space.hpp"

using namespace photonfield;

namespace {

LatticeConfig lattice(std::vector<ModeSpec> modes, int n_max) {
  LatticeConfig c;
  c.modes = std::move(modes);
  c.n_max = n_max;
  return c;
}

ModeSpec mode(Helicity s, int x, int y, int z) { return {s, IVec3(x, y, z)}; }

std::vector<ModeSpec> four_modes() {
  return {mode(Helicity::plus, 0, 0, 1), mode(Helicity::minus, 0, 0, 1), mode(Helicity::plus, 0, 0, -1),
          mode(Helicity::minus, 0, 0, -1)};
}

double diff(const SparseOperator& a, const oracle::Dense& b) { return oracle::max_abs(a.dense() - b); }

}  // namespace

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(build_basis(lattice({mode(Helicity::plus, 0, 0, 0)}, 1)), InvalidInput);
  CHECK_THROWS_AS(build_basis(lattice({mode(Helicity::plus, 0, 0, 1), mode(Helicity::plus, 0, 0, 1)}, 1)),
                  InvalidInput);
  CHECK_THROWS_AS(build_basis(lattice({mode(Helicity::plus, 0, 0, 1)}, 0)), InvalidInput);
  CHECK_THROWS_AS(build_basis(lattice({}, 1)), InvalidInput);
  LatticeConfig bad = lattice({mode(Helicity::plus, 0, 0, 1)}, 1);
  bad.box_length = -1.0;
  CHECK_THROWS_AS(build_basis(bad), InvalidInput);
  bad = lattice({mode(Helicity::plus, 0, 0, 1)}, 1);
  bad.units.hbar = 0.0;
  CHECK_THROWS_AS(build_basis(bad), InvalidInput);
}

TEST_CASE("dimension guard names the required resources") {
  LatticeConfig c = lattice(four_modes(), 3);
  c.max_dimension = 100;
  try {
    build_basis(c);
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    CHECK(std::string(e.what()).find("256") != std::string::npos);
  }
  c = lattice(cube_modes(2), 1);  // 124 modes, 2^124 states
  CHECK_THROWS_AS(build_basis(c), ResourceLimitError);
  c = lattice(four_modes(), 3);
  c.max_nonzeros = 10;
  CHECK_THROWS_AS(build_basis(c), ResourceLimitError);
}

TEST_CASE("mode derivation") {
  LatticeConfig c = lattice({mode(Helicity::minus, 1, 2, 2)}, 1);
  c.box_length = kPi;
  c.units.c = 3.0;
  const ModeSet ms(c);
  const Mode& m = ms[0];
  CHECK((m.p - Vec3(2, 4, 4)).norm() < 1e-12);
  CHECK(std::abs(m.omega - 18.0) < 1e-12);
  CHECK((m.k() - Vec3(1, 2, 2) / 3.0).norm() < 1e-12);
  CHECK(std::abs(bilinear(m.eps(), complexify(m.k()))) < 1e-12);
  CHECK(std::abs(ms.delta3p() - 8.0) < 1e-12);
  CHECK(ms.index_of(mode(Helicity::minus, 1, 2, 2)) == 0);
  CHECK_THROWS_AS(ms.index_of(mode(Helicity::plus, 1, 2, 2)), InvalidInput);
}

TEST_CASE("mode set predicates") {
  CHECK(ModeSet(lattice(four_modes(), 1)).has_both_helicities());
  CHECK(ModeSet(lattice(four_modes(), 1)).momentum_symmetric());
  const ModeSet half(lattice({mode(Helicity::plus, 0, 0, 1), mode(Helicity::plus, 0, 0, -1)}, 1));
  CHECK_FALSE(half.has_both_helicities());
  CHECK(half.momentum_symmetric());
  CHECK(half.distinct_momenta().size() == 2);
  const ModeSet one(lattice({mode(Helicity::plus, 0, 0, 1), mode(Helicity::minus, 0, 0, 1)}, 1));
  CHECK(one.has_both_helicities());
  CHECK_FALSE(one.momentum_symmetric());
}

TEST_CASE("cube modes") {
  const auto c1 = cube_modes(1);
  CHECK(c1.size() == 52);
  CHECK(cube_modes(2).size() == 248);
  const ModeSet ms(lattice(c1, 1));
  CHECK(ms.has_both_helicities());
  CHECK(ms.momentum_symmetric());
  for (const auto& m : c1) CHECK(m.n.cwiseAbs().maxCoeff() == 1);
}

TEST_CASE("basis enumeration") {
  const FockBasis one = build_basis(lattice({mode(Helicity::plus, 0, 0, 1)}, 3));
  CHECK(one.dim() == 4);
  for (int n = 0; n <= 3; ++n) CHECK(one.occupancies(static_cast<std::size_t>(n)) == std::vector<int>{n});

  const FockBasis two = build_basis(lattice({mode(Helicity::plus, 0, 0, 1), mode(Helicity::minus, 0, 0, 1)}, 1));
  CHECK(two.dim() == 4);
  const std::vector<std::vector<int>> order{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(two.occupancies(i) == order[i]);
    CHECK(two.index_of(order[i]) == i);
  }
  const std::vector<int> too_big{2, 0}, short_tuple{1};
  CHECK_THROWS_AS(two.index_of(too_big), InvalidInput);
  CHECK_THROWS_AS(two.index_of(short_tuple), InvalidInput);

  const FockBasis four = build_basis(lattice(four_modes(), 3));
  CHECK(four.dim() == 256);
  for (std::size_t i = 0; i < four.dim(); ++i) CHECK(four.index_of(four.occupancies(i)) == i);
}

TEST_CASE("basis identity distinguishes lattices") {
  const FockBasis a = build_basis(lattice(four_modes(), 1));
  const FockBasis b = build_basis(lattice(four_modes(), 1));
  const FockBasis c = build_basis(lattice(four_modes(), 2));
  CHECK(a.id() == b.id());
  CHECK(a.id() != c.id());
  CHECK_THROWS_AS(annihilation(a, 0) * annihilation(c, 0), BasisMismatch);
  CHECK_THROWS_AS(commutator(annihilation(a, 0), annihilation(c, 0)), BasisMismatch);
}

TEST_CASE("ladder operators match Kronecker products") {
  const FockBasis b = build_basis(lattice({mode(Helicity::plus, 0, 0, 1), mode(Helicity::minus, 0, 0, 1),
                                           mode(Helicity::plus, 1, 0, 0)},
                                          2));
  const auto ref = oracle::ladder(3, 2);
  for (std::size_t m = 0; m < 3; ++m) {
    CHECK(diff(annihilation(b, m), ref[m]) == 0.0);
    CHECK(diff(creation(b, m), ref[m].adjoint()) == 0.0);
    CHECK(diff(number_operator(b, m), ref[m].adjoint() * ref[m]) < 1e-14);
    CHECK((creation(b, m).matrix() - annihilation(b, m).adjoint().matrix()).norm() == 0.0);
  }
  CHECK(diff(annihilation(b, mode(Helicity::minus, 0, 0, 1)), ref[1]) == 0.0);
  CHECK_THROWS_AS(annihilation(b, 3), InvalidInput);
  CHECK_THROWS_AS(creation(b, mode(Helicity::minus, 1, 0, 0)), InvalidInput);
}

TEST_CASE("single-mode ladder examples") {
  const FockBasis b = build_basis(lattice({mode(Helicity::plus, 0, 0, 1)}, 3));
  const SparseOperator ad = creation(b, 0), a = annihilation(b, 0);
  CHECK(std::abs(ad.entry(3, 2) - std::sqrt(3.0)) < 1e-15);
  CHECK(a.dense().col(0).isZero(0.0));
  CHECK(ad.dense().col(3).isZero(0.0));
  CHECK(diff(number_operator(b, 0), Eigen::Vector4cd(0, 1, 2, 3).asDiagonal().toDenseMatrix()) == 0.0);
}

TEST_CASE("commutation relations on the safe subspace") {
  const FockBasis b = build_basis(lattice(four_modes(), 3));
  const SparseOperator p = safe_projector(b, 1);
  for (std::size_t m = 0; m < 4; ++m) {
    for (std::size_t k = 0; k < 4; ++k) {
      const SparseOperator c = commutator(annihilation(b, m), creation(b, k));
      const SparseOperator expected = m == k ? p : SparseOperator::zero(b.id(), b.dim());
      CHECK((project(p, c) - expected).max_abs() < 1e-14);
      CHECK(commutator(annihilation(b, m), annihilation(b, k)).max_abs() == 0.0);
      CHECK(commutator(number_operator(b, m), number_operator(b, k)).max_abs() == 0.0);
    }
  }
  // Outside the safe subspace the deviation sits on top-occupancy states.
  const Eigen::MatrixXcd full = commutator(annihilation(b, 0), creation(b, 0)).dense();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const double dev = std::abs(full(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) - 1.0);
    if (b.occupancy(i, 0) < 3) {
      CHECK(dev < 1e-14);
    } else {
      CHECK(std::abs(dev - 4.0) < 1e-14);
    }
  }
}

TEST_CASE("number operators") {
  const FockBasis b = build_basis(lattice({mode(Helicity::plus, 0, 0, 1), mode(Helicity::minus, 0, 0, 1)}, 1));
  CHECK(diff(total_number(b), Eigen::Vector4cd(0, 1, 1, 2).asDiagonal().toDenseMatrix()) == 0.0);
  const std::vector<double> w{2.0, -1.0};
  CHECK(diff(weighted_number(b, w), Eigen::Vector4cd(0, -1, 2, 1).asDiagonal().toDenseMatrix()) == 0.0);
  CHECK(total_number(b).verify_symmetry());
}

TEST_CASE("safe projector") {
  const FockBasis b = build_basis(lattice({mode(Helicity::plus, 0, 0, 1)}, 3));
  CHECK(diff(safe_projector(b, 0), Eigen::MatrixXcd::Identity(4, 4)) == 0.0);
  CHECK(diff(safe_projector(b, 1), Eigen::Vector4cd(1, 1, 1, 0).asDiagonal().toDenseMatrix()) == 0.0);
  CHECK_THROWS_AS(safe_projector(b, 4), InvalidInput);
  const FockBasis f = build_basis(lattice(four_modes(), 3));
  for (int margin = 0; margin <= 3; ++margin) {
    const SparseOperator p = safe_projector(f, margin);
    CHECK((p * p - p).max_abs() == 0.0);
    CHECK(std::abs(p.dense().trace() - std::pow(4.0 - margin, 4.0)) < 1e-12);
  }
}

TEST_CASE("ladder sum and symmetry flags") {
  const FockBasis b = build_basis(lattice({mode(Helicity::plus, 0, 0, 1), mode(Helicity::minus, 0, 0, 1)}, 2));
  const std::vector<Complex> f{Complex(0.3, -0.1), Complex(-0.2, 0.5)};
  const std::vector<Complex> g{std::conj(f[0]), std::conj(f[1])};
  const SparseOperator h = ladder_sum(b, f, g, Symmetry::hermitian);
  const auto ref = oracle::ladder(2, 2);
  CHECK(diff(h, f[0] * ref[0] + g[0] * ref[0].adjoint() + f[1] * ref[1] + g[1] * ref[1].adjoint()) < 1e-15);
  CHECK(h.verify_symmetry());
  const std::vector<Complex> ng{-g[0], -g[1]};
  CHECK(ladder_sum(b, f, ng, Symmetry::antihermitian).verify_symmetry());
  CHECK_FALSE(ladder_sum(b, f, f, Symmetry::hermitian).verify_symmetry());
}

TEST_CASE("sparse operator arithmetic") {
  const FockBasis b = build_basis(lattice({mode(Helicity::plus, 0, 0, 1)}, 2));
  const SparseOperator a = annihilation(b, 0);
  const auto ref = oracle::ladder(1, 2)[0];
  CHECK(diff(a + a.adjoint(), ref + ref.adjoint()) == 0.0);
  CHECK(diff(Complex(0, 2) * a, Complex(0, 2) * ref) == 0.0);
  CHECK(diff(a * a.adjoint(), ref * ref.adjoint()) < 1e-15);
  CHECK(std::abs(SparseOperator::scaled_identity(b.id(), 3, 2.0).frobenius() - 2.0 * std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("coordinate list export") {
  const FockBasis b = build_basis(lattice({mode(Helicity::plus, 0, 0, 1)}, 2));
  std::ostringstream out;
  write_coordinate_list(out, annihilation(b, 0), 1, 2);
  CHECK(out.str() == "3 1 2\n0 1 1 0\n1 2 1.4142135623730951 0\n");
  std::ostringstream again;
  write_coordinate_list(again, annihilation(b, 0), 1, 2);
  CHECK(out.str() == again.str());
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.0) == "-0");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}
