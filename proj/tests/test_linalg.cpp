#include <random>

#include "doctest.h"
#include "q2sat/linalg.hpp"
#include "support.hpp"

using namespace q2sat;
using namespace q2sat::test;

namespace {

PureState ghz3() { return PureState(3, ket("000") + ket("111")); }
PureState w3() { return PureState(3, ket("001") + ket("010") + ket("100")); }

double dist(const MatX& a, const MatX& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("PureState validates and normalizes") {
  const PureState s(2, ket("01") * 3.0);
  CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-12);
  CHECK_THROWS_AS(PureState(2, VecX::Zero(4)), std::invalid_argument);
  CHECK_THROWS_AS(PureState(3, VecX::Ones(4)), std::invalid_argument);
  const Vec2 f[] = {Vec2(1, 0), Vec2(0, 1), Vec2(1, 0)};
  CHECK(PureState::product(f)[2] == Complex(1.0));  // |010>
}

TEST_CASE("partial_trace_pair examples") {
  SUBCASE("product state") {
    const Mat4 rho = partial_trace_pair(PureState(3, ket("000")), 0, 1);
    CHECK(dist(rho, ket2("00") * ket2("00").adjoint()) < 1e-12);
  }
  SUBCASE("GHZ") {
    const Mat4 want = 0.5 * (ket2("00") * ket2("00").adjoint() + ket2("11") * ket2("11").adjoint());
    CHECK(dist(partial_trace_pair(ghz3(), 0, 1), want) < 1e-12);
  }
  SUBCASE("W") {
    const Vec4 psi = bell_psi_plus();
    const Mat4 want = ket2("00") * ket2("00").adjoint() / 3.0 + psi * psi.adjoint() * (2.0 / 3.0);
    CHECK(dist(partial_trace_pair(w3(), 0, 1), want) < 1e-12);
  }
  SUBCASE("orientation follows the argument order") {
    const PureState s(2, ket("01"));
    CHECK(dist(partial_trace_pair(s, 0, 1), ket2("01") * ket2("01").adjoint()) < 1e-12);
    CHECK(dist(partial_trace_pair(s, 1, 0), ket2("10") * ket2("10").adjoint()) < 1e-12);
  }
  SUBCASE("bad indices") {
    CHECK_THROWS_AS(partial_trace_pair(ghz3(), 1, 1), IndexError);
    CHECK_THROWS_AS(partial_trace_pair(ghz3(), 0, 3), IndexError);
    CHECK_THROWS_AS(partial_trace_pair(ghz3(), -1, 2), IndexError);
  }
}

TEST_CASE("partial trace of random product states is the product of factors") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<Vec2> f;
    for (int q = 0; q < n; ++q) f.push_back(random_unit2(rng));
    const PureState s = PureState::product(f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Vec4 v = kron(f[i], f[j]);
        CHECK(dist(partial_trace_pair(s, i, j), v * v.adjoint()) < 1e-12);
      }
  }
}

TEST_CASE("partial trace is PSD with unit trace on random states") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 7;
    const PureState s(n, gaussian(rng, Eigen::Index{1} << n));
    const Mat4 rho = partial_trace_pair(s, 0, n - 1);
    CHECK(std::abs(rho.trace() - 1.0) < 1e-10);
    Eigen::SelfAdjointEigenSolver<Mat4> es(rho);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
  }
}

TEST_CASE("support_projector examples") {
  const Mat4 rho_ghz = partial_trace_pair(ghz3(), 0, 1);
  const auto sp = support_projector(rho_ghz);
  CHECK(sp.rank == 2);
  const Mat4 want = ket2("00") * ket2("00").adjoint() + ket2("11") * ket2("11").adjoint();
  CHECK(dist(sp.projector, want) < 1e-10);

  const auto full = support_projector(Mat4::Identity() / 4.0);
  CHECK(full.rank == 4);
  CHECK(dist(full.projector, Mat4::Identity()) < 1e-10);

  CHECK(support_projector(ket2("01") * ket2("01").adjoint()).rank == 1);

  Mat4 bad = Mat4::Identity();
  bad(3, 3) = -0.5;
  CHECK_THROWS_AS(support_projector(bad), NotPsdError);
}

TEST_CASE("support projector fixes the matrix: P rho P = rho") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = 1 + trial % 4;
    MatX g(4, rank);
    for (int c = 0; c < rank; ++c) g.col(c) = gaussian(rng, 4);
    const MatX rho = g * g.adjoint();
    const auto sp = support_projector(rho);
    CHECK(sp.rank == rank);
    CHECK(dist(sp.projector * rho * sp.projector, rho) < 1e-9 * rho.norm());
    CHECK(dist(sp.projector * sp.projector, sp.projector) < 1e-10);
  }
}

TEST_CASE("zero_eigenspace") {
  MatX h = MatX::Zero(4, 4);
  h(1, 1) = 1.0;
  h(2, 2) = 2.0;
  const auto basis = zero_eigenspace(h, 1e-9);
  REQUIRE(basis.size() == 2);
  CHECK(outside(basis, ket2("00")) < 1e-12);
  CHECK(outside(basis, ket2("11")) < 1e-12);

  // Dimension agrees with a count from an independent eigendecomposition.
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 8;
    const int kernel = trial % 5;
    MatX g(dim, dim - kernel);
    for (int c = 0; c < dim - kernel; ++c) g.col(c) = gaussian(rng, dim);
    const MatX hh = g * g.adjoint();
    Eigen::ComplexEigenSolver<MatX> ces(hh);
    int count = 0;
    for (int k = 0; k < dim; ++k) count += std::abs(ces.eigenvalues()[k]) <= 1e-9 ? 1 : 0;
    const auto zb = zero_eigenspace(hh, 1e-9);
    CHECK(static_cast<int>(zb.size()) == count);
    for (std::size_t a = 0; a < zb.size(); ++a)
      for (std::size_t b = 0; b < zb.size(); ++b)
        CHECK(std::abs(zb[a].dot(zb[b]) - (a == b ? 1.0 : 0.0)) < 1e-10);
  }
}

TEST_CASE("product_state_in_2d examples") {
  SUBCASE("span{|00>, |11>} gives |0>|0>") {
    const auto [a, b] = product_state_in_2d(ket2("00"), ket2("11"));
    CHECK(fidelity(kron(a, b), ket2("00")) > 1 - 1e-12);
  }
  SUBCASE("span{|01>, Phi+} gives |0>|1>") {
    const auto [a, b] = product_state_in_2d(ket2("01"), bell_phi_plus());
    CHECK(fidelity(kron(a, b), ket2("01")) > 1 - 1e-12);
  }
  SUBCASE("span{Phi+, Psi+} gives |+>|+>") {
    const auto [a, b] = product_state_in_2d(bell_phi_plus(), bell_psi_plus());
    const Vec4 plus_plus = Vec4::Constant(0.5);
    CHECK(fidelity(kron(a, b), plus_plus) > 1 - 1e-12);
  }
}

TEST_CASE("product_state_in_2d on random subspaces") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 1000; ++trial) {
    Eigen::Matrix<Complex, 4, 2> m;
    m.col(0) = gaussian(rng, 4);
    m.col(1) = gaussian(rng, 4);
    const Mat4 q = Eigen::HouseholderQR<Eigen::Matrix<Complex, 4, 2>>(m).householderQ();
    const Vec4 b0 = q.col(0), b1 = q.col(1);
    const auto [a, b] = product_state_in_2d(b0, b1);
    const Vec4 v = kron(a, b);
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    CHECK((v - b0 * b0.dot(v) - b1 * b1.dot(v)).norm() < 1e-10);
    CHECK(concurrence(v) < 1e-10);
  }
}

TEST_CASE("concurrence examples") {
  CHECK(std::abs(concurrence(bell_phi_plus()) - 1.0) < 1e-12);
  CHECK(concurrence(ket2("00")) < 1e-15);
  CHECK(concurrence((ket2("00") + ket2("01")) * kInvSqrt2) < 1e-15);
}

TEST_CASE("span_basis and complement_basis") {
  const Vec4 vs[] = {ket2("00"), ket2("00") * Complex(0, 2), ket2("01")};
  const auto basis = span_basis(vs);
  CHECK(basis.size() == 2);
  const auto comp = complement_basis(basis);
  REQUIRE(comp.size() == 2);
  CHECK(fidelity(comp[0], ket2("10")) > 1 - 1e-12);
  CHECK(fidelity(comp[1], ket2("11")) > 1 - 1e-12);
  CHECK(swap_factors(ket2("01")) == ket2("10"));
}
