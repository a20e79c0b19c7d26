#include <random>

#include "doctest.h"
#include "q2sat/generators.hpp"
#include "q2sat/oracle.hpp"
#include "support.hpp"

using namespace q2sat;
using namespace q2sat::test;

namespace {

PureState ghz(int n) { return PureState(n, ket(std::string(n, '0')) + ket(std::string(n, '1'))); }
PureState w3() { return PureState(3, ket("001") + ket("010") + ket("100")); }

// Pi_ij (x) I written out entry by entry from the range vectors.
MatX lifted(const Constraint& c, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Mat4 p = c.projector();
  MatX out = MatX::Zero(dim, dim);
  const int si = n - 1 - c.pair.first;
  const int sj = n - 1 - c.pair.second;
  for (Eigen::Index x = 0; x < dim; ++x)
    for (Eigen::Index y = 0; y < dim; ++y) {
      const Eigen::Index rest = ~((Eigen::Index{1} << si) | (Eigen::Index{1} << sj));
      if ((x & rest) != (y & rest)) continue;
      out(x, y) = p(2 * ((x >> si) & 1) + ((x >> sj) & 1), 2 * ((y >> si) & 1) + ((y >> sj) & 1));
    }
  return out;
}

// Intersection of the lifted supports: kernel of the stacked complements.
std::vector<VecX> support_intersection(const Instance& inst) {
  const int n = inst.num_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  MatX stack(dim * static_cast<Eigen::Index>(std::max<std::size_t>(inst.size(), 1)), dim);
  stack.setZero();
  Eigen::Index row = 0;
  for (const auto& [p, c] : inst.constraints()) {
    stack.middleRows(row, dim) = lifted(c, n);
    row += dim;
  }
  Eigen::JacobiSVD<MatX> svd(stack, Eigen::ComputeFullV);
  std::vector<VecX> out;
  const auto& s = svd.singularValues();
  for (Eigen::Index k = 0; k < dim; ++k)
    if (k >= s.size() || s[k] < 1e-6) out.push_back(svd.matrixV().col(k));
  return out;
}

}  // namespace

TEST_CASE("dense_hamiltonian examples") {
  CHECK(oracle::dense_hamiltonian(Instance(2)).isZero());
  const RawConstraint one[] = {{0, 1, {ket2("00")}}};
  MatX want = MatX::Zero(4, 4);
  want(0, 0) = 1.0;
  CHECK((oracle::dense_hamiltonian(canonicalize(one, 2)) - want).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::SelfAdjointEigenSolver<MatX> es(oracle::dense_hamiltonian(build_h_psi(w3())));
  int zeros = 0;
  for (Eigen::Index k = 0; k < 8; ++k) zeros += std::abs(es.eigenvalues()[k]) < 1e-9 ? 1 : 0;
  CHECK(zeros == 2);

  CHECK_THROWS_AS(oracle::dense_hamiltonian(Instance(13)), CapacityError);
  CHECK_NOTHROW(oracle::dense_hamiltonian(Instance(3), 3));
  CHECK_THROWS_AS(oracle::dense_hamiltonian(Instance(4), 3), CapacityError);
}

TEST_CASE("dense Hamiltonian matches the entrywise lift") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = gen::random_instance(4, 5, 3, seed);
    MatX sum = MatX::Zero(16, 16);
    for (const auto& [p, c] : inst.constraints()) sum += lifted(c, 4);
    CHECK((oracle::dense_hamiltonian(inst) - sum).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("ground_space examples") {
  const auto g = oracle::ground_space(build_h_psi(ghz(3)));
  CHECK(g.is_frustration_free);
  CHECK(g.dimension == 2);
  CHECK(oracle::membership_residual(g.basis, ket("000")) < 1e-9);
  CHECK(oracle::membership_residual(g.basis, ket("111")) < 1e-9);

  const auto w = oracle::ground_space(build_h_psi(w3()));
  CHECK(w.dimension == 2);
  CHECK(oracle::membership_residual(w.basis, ket("000")) < 1e-9);
  CHECK(oracle::membership_residual(w.basis, w3().amplitudes()) < 1e-9);

  const RawConstraint full[] = {{0, 1, {ket2("00"), ket2("01"), ket2("10"), ket2("11")}}};
  const auto u = oracle::ground_space(canonicalize(full, 2));
  CHECK_FALSE(u.is_frustration_free);
  CHECK(u.dimension == 0);
  CHECK(u.min_eigenvalue > 0.5);
}

TEST_CASE("ground space equals the intersection of lifted supports") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 24; ++trial) {
    const int n = 3 + trial % 6;
    const PureState psi = trial % 3 == 0 ? gen::random_product_superposition(n, 2, trial + 1)
                                         : PureState(n, gaussian(rng, Eigen::Index{1} << n));
    const Instance h = build_h_psi(psi);
    const auto gs = oracle::ground_space(h);
    const auto inter = support_intersection(h);
    CHECK(static_cast<std::size_t>(gs.dimension) == inter.size());
    for (const auto& v : inter) CHECK(oracle::membership_residual(gs.basis, v) < 1e-9);
    for (const auto& v : gs.basis) CHECK(outside(inter, v) < 1e-5);
    CHECK(oracle::membership_residual(gs.basis, psi.amplitudes()) < 1e-9);
  }
}

TEST_CASE("energy_residuals examples") {
  const Instance h = build_h_psi(w3());
  for (double r : oracle::energy_residuals(h, PureState(3, ket("000")))) CHECK(r < 1e-12);
  const auto bad = oracle::energy_residuals(h, PureState(3, ket("111")));
  CHECK(*std::max_element(bad.begin(), bad.end()) > 0.1);
  CHECK(oracle::energy_residuals(Instance(3), w3()).empty());
}

TEST_CASE("genuinely_entangled examples") {
  CHECK(oracle::genuinely_entangled(w3()));
  VecX zero_bell = VecX::Zero(8);
  zero_bell[0] = zero_bell[3] = kInvSqrt2;
  CHECK_FALSE(oracle::genuinely_entangled(PureState(3, zero_bell)));
  CHECK(oracle::genuinely_entangled(ghz(4)));
  CHECK_FALSE(oracle::genuinely_entangled(PureState(4, ket("0110"))));
}

TEST_CASE("slocc3_classify examples") {
  const auto g = oracle::slocc3_classify(ghz(3));
  CHECK(g.label == oracle::Slocc3Class::Ghz);
  CHECK(std::abs(g.tangle - 1.0) < 1e-12);
  const auto w = oracle::slocc3_classify(w3());
  CHECK(w.label == oracle::Slocc3Class::W);
  CHECK(w.tangle < 1e-12);
  VecX zero_bell = VecX::Zero(8);
  zero_bell[0] = zero_bell[3] = kInvSqrt2;
  CHECK(oracle::slocc3_classify(PureState(3, zero_bell)).label == oracle::Slocc3Class::Biseparable);
  CHECK(oracle::label_name(oracle::Slocc3Class::Ghz) == "GHZ-class");
  CHECK(oracle::label_name(oracle::Slocc3Class::W) == "W-class");
}

TEST_CASE("SLOCC labels are invariant under bounded local operators") {
  VecX zero_bell = VecX::Zero(8);
  zero_bell[0] = zero_bell[3] = kInvSqrt2;
  const std::pair<PureState, oracle::Slocc3Class> fixtures[] = {
      {ghz(3), oracle::Slocc3Class::Ghz},
      {w3(), oracle::Slocc3Class::W},
      {PureState(3, zero_bell), oracle::Slocc3Class::Biseparable}};
  for (const auto& [state, label] : fixtures)
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
      CHECK(oracle::slocc3_classify(gen::apply_locals(state, gen::random_locals(3, seed, 10.0))).label == label);
}
