#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "q2sat/blocks.hpp"
#include "q2sat/instance.hpp"

namespace q2sat::gen {

/// Named states: "W", "GHZ", "cluster-line", "cluster-ring", "Dicke(k)".
/// W is the k = 1 Dicke state and accepts any n >= 2.
PureState named_state(const std::string& name, int n);

PureState dicke_state(int n, int k);

/// Graph state: |+>^n followed by controlled-phase on every edge.
PureState graph_state(int n, const std::vector<std::pair<int, int>>& edges);

/// Complex-Gaussian amplitudes, resampled until genuinely entangled. 3 <= n <= 12.
PureState random_genuine_state(int n, std::uint64_t seed);

/// Genuinely entangled superposition of `terms` random product states. Pair
/// supports have rank min(terms, 4) generically, so 2 terms give rank-2
/// constraints and 3 terms give rank-1 (homogeneous) ones.
PureState random_product_superposition(int n, int terms, std::uint64_t seed);

Vec2 random_qubit(std::mt19937_64& rng);
Vec4 random_two_qubit(std::mt19937_64& rng);

enum class BlockLayout { AllSingles, OnePair, RandomPairs };

struct Planted {
  Instance instance;
  std::vector<Block> hidden;
};

/// Instance with m constraints on distinct pairs, each orthogonal to the
/// hidden product state's restriction to its pair. Pairs whose restriction
/// has full rank (two qubits from two different entangled blocks) cannot
/// carry a constraint and are never sampled. Constraint ranks are drawn from
/// 1..max_rank (capped by what the restriction allows).
Planted planted_instance(int n, int m, BlockLayout layout, std::uint64_t seed, int max_rank = 2);

/// m distinct pairs, each with one Haar-random rank-1 vector.
Instance random_homogeneous(int n, int m, std::uint64_t seed);

/// m distinct pairs with constraint ranks drawn uniformly from 1..max_rank.
Instance random_instance(int n, int m, int max_rank, std::uint64_t seed);

/// m distinct pairs, each forbidding one random computational basis state.
Instance random_classical_homogeneous(int n, int m, std::uint64_t seed);

/// n invertible 2x2 operators U diag(1, s) W with s in [1/cond_bound, 1];
/// cond_bound == 1 gives unitaries.
std::vector<Mat2> random_locals(int n, std::uint64_t seed, double cond_bound);

/// (L_1 (x) ... (x) L_n) |state>, renormalized.
PureState apply_locals(const PureState& state, std::span<const Mat2> locals);

/// Seed of trial `index` under master seed `master`; independent of evaluation order.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

}  // namespace q2sat::gen
