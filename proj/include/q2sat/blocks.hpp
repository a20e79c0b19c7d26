#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "q2sat/instance.hpp"

namespace q2sat {

/// One factor of a product state. `state` has 2^|qubits| amplitudes with
/// qubits[0] as the most significant factor.
struct Block {
  std::vector<int> qubits;
  VecX state;
  /// For a pair block produced by an isometry merge: the orthonormal basis of
  /// the two-dimensional subspace the pair was confined to.
  std::optional<std::array<Vec4, 2>> pair_support;

  std::size_t size() const { return qubits.size(); }
};

Block single_block(int qubit, const Vec2& state);
Block pair_block(int a, int b, const Vec4& state);

/// Throws std::invalid_argument unless the blocks partition {0..n-1} and
/// carry states of matching dimension.
void check_partition(std::span<const Block> blocks, int n);

/// Single-qubit reduced density matrix of `qubit` inside `block`.
Mat2 marginal(const Block& block, int qubit);

/// Per-constraint energy <Psi|Pi|Psi> of the product of blocks, evaluated
/// from block marginals without forming the 2^n vector.
std::vector<double> blockwise_residuals(const Instance& inst, std::span<const Block> blocks);

/// Dense tensor product of the blocks.
PureState assemble_state(std::span<const Block> blocks, int n);

/// True when every block has at most `max_size` qubits.
bool blocks_at_most(std::span<const Block> blocks, std::size_t max_size);

}  // namespace q2sat
