#include <random>
#include <set>

#include "doctest.h"
#include "q2sat/generators.hpp"
#include "q2sat/oracle.hpp"
#include "q2sat/solver.hpp"
#include "support.hpp"

using namespace q2sat;
using namespace q2sat::test;

TEST_CASE("named states") {
  const PureState g = gen::named_state("GHZ", 3);
  for (int k = 0; k < 8; ++k) CHECK(std::abs(g[k] - ((k == 0 || k == 7) ? kInvSqrt2 : 0.0)) < 1e-15);
  const PureState w = gen::named_state("W", 3);
  for (int k = 0; k < 8; ++k)
    CHECK(std::abs(w[k] - ((k == 1 || k == 2 || k == 4) ? 1.0 / std::sqrt(3.0) : 0.0)) < 1e-15);
  const PureState d = gen::named_state("Dicke(2)", 4);
  int support = 0;
  for (int k = 0; k < 16; ++k) support += std::abs(d[k]) > 0 ? 1 : 0;
  CHECK(support == 6);
  CHECK_THROWS_AS(gen::named_state("AKLT", 4), std::invalid_argument);
  CHECK_THROWS_AS(gen::named_state("GHZ", 1), std::invalid_argument);
}

TEST_CASE("cluster states") {
  const PureState line = gen::named_state("cluster-line", 4);
  for (int k = 0; k < 16; ++k) CHECK(std::abs(std::abs(line[k]) - 0.25) < 1e-15);
  CHECK(oracle::genuinely_entangled(line));
  const Instance h = build_h_psi(line);
  const auto singles = solver::product_of_singles_witness(h);
  for (double r : oracle::energy_residuals(h, PureState::product(singles))) CHECK(r < 1e-9);
  CHECK(oracle::genuinely_entangled(gen::named_state("cluster-ring", 5)));
}

TEST_CASE("random_genuine_state") {
  const PureState a = gen::random_genuine_state(4, 1);
  CHECK(oracle::genuinely_entangled(a));
  CHECK(a.amplitudes() == gen::random_genuine_state(4, 1).amplitudes());
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto label = oracle::slocc3_classify(gen::random_genuine_state(3, seed)).label;
    CHECK(label != oracle::Slocc3Class::Biseparable);
  }
  CHECK_THROWS_AS(gen::random_genuine_state(2, 1), std::invalid_argument);
}

TEST_CASE("planted instances") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto singles = gen::planted_instance(6, 8, gen::BlockLayout::AllSingles, seed);
    CHECK(singles.instance.size() == 8);
    const PureState hidden = assemble_state(singles.hidden, 6);
    double total = 0.0;
    for (double r : oracle::energy_residuals(singles.instance, hidden)) total += r;
    CHECK(total < 1e-12);
    CHECK(solver::solve(singles.instance, seed).status == solver::Status::Satisfiable);

    const auto paired = gen::planted_instance(6, 8, gen::BlockLayout::OnePair, seed);
    CHECK(std::any_of(paired.hidden.begin(), paired.hidden.end(), [](const Block& b) { return b.size() == 2; }));
    const auto r = solver::solve(paired.instance, seed);
    REQUIRE(r.status == solver::Status::Satisfiable);
    CHECK(blocks_at_most(r.blocks, 2));
  }
  CHECK(gen::planted_instance(5, 0, gen::BlockLayout::AllSingles, 1).instance.empty());
  CHECK_THROWS_AS(gen::planted_instance(3, 4, gen::BlockLayout::AllSingles, 1), std::invalid_argument);
}

TEST_CASE("random_homogeneous") {
  const Instance a = gen::random_homogeneous(3, 3, 9);
  CHECK(a.size() == 3);
  CHECK(a.max_rank() == 1);
  CHECK((solver::solve(a, 9).status == solver::Status::Satisfiable) == (oracle::ground_energy(a) < 1e-9));
  CHECK(solver::solve(gen::random_homogeneous(2, 1, 4)).status == solver::Status::Satisfiable);
  CHECK(projector_distance(a, gen::random_homogeneous(3, 3, 9)) == 0.0);
  CHECK_THROWS_AS(gen::random_homogeneous(3, 4, 1), std::invalid_argument);
}

TEST_CASE("random_locals") {
  for (const auto& u : gen::random_locals(5, 3, 1.0)) CHECK((u * u.adjoint() - Mat2::Identity()).norm() < 1e-12);
  for (const auto& l : gen::random_locals(20, 4, 10.0)) {
    Eigen::JacobiSVD<Mat2> svd(l);
    CHECK(svd.singularValues()[0] / svd.singularValues()[1] <= 10.0 + 1e-9);
    CHECK(std::abs(l.determinant()) >= 1e-6);
    CHECK((l * l.inverse() - Mat2::Identity()).norm() < 1e-10);
  }
  CHECK_THROWS_AS(gen::random_locals(2, 1, 0.5), std::invalid_argument);
}

TEST_CASE("trial seeds are distinct and order independent") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t k = 0; k < 1000; ++k) seen.insert(gen::trial_seed(42, k));
  CHECK(seen.size() == 1000);
  CHECK(gen::trial_seed(42, 7) == gen::trial_seed(42, 7));
  CHECK(gen::trial_seed(42, 7) != gen::trial_seed(43, 7));
}
