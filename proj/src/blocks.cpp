#include "q2sat/blocks.hpp"

#include <algorithm>
#include <string>

namespace q2sat {

Block single_block(int qubit, const Vec2& state) { return {{qubit}, state.normalized(), std::nullopt}; }

Block pair_block(int a, int b, const Vec4& state) { return {{a, b}, state.normalized(), std::nullopt}; }

void check_partition(std::span<const Block> blocks, int n) {
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& b : blocks) {
    if (b.qubits.empty()) throw std::invalid_argument("block with no qubits");
    if (b.state.size() != (Eigen::Index{1} << b.qubits.size()))
      throw std::invalid_argument("block state has wrong dimension");
    for (int q : b.qubits) {
      if (q < 0 || q >= n) throw std::invalid_argument("block qubit " + std::to_string(q + 1) + " out of range");
      if (seen[static_cast<std::size_t>(q)]++) throw std::invalid_argument("qubit " + std::to_string(q + 1) + " in two blocks");
    }
  }
  for (int q = 0; q < n; ++q)
    if (!seen[static_cast<std::size_t>(q)]) throw std::invalid_argument("qubit " + std::to_string(q + 1) + " not covered");
}

Mat2 marginal(const Block& block, int qubit) {
  const auto pos = std::find(block.qubits.begin(), block.qubits.end(), qubit) - block.qubits.begin();
  const int k = static_cast<int>(block.qubits.size());
  const std::size_t bit = std::size_t{1} << (k - 1 - pos);
  Mat2 rho = Mat2::Zero();
  for (Eigen::Index x = 0; x < block.state.size(); ++x) {
    if (x & bit) continue;
    const auto y = static_cast<Eigen::Index>(x | bit);
    const Complex v0 = block.state[x];
    const Complex v1 = block.state[y];
    rho(0, 0) += v0 * std::conj(v0);
    rho(0, 1) += v0 * std::conj(v1);
    rho(1, 0) += v1 * std::conj(v0);
    rho(1, 1) += v1 * std::conj(v1);
  }
  return rho / block.state.squaredNorm();
}

std::vector<double> blockwise_residuals(const Instance& inst, std::span<const Block> blocks) {
  std::vector<const Block*> owner(static_cast<std::size_t>(inst.num_qubits()), nullptr);
  for (const auto& b : blocks)
    for (int q : b.qubits) owner.at(static_cast<std::size_t>(q)) = &b;

  std::vector<double> out;
  out.reserve(inst.size());
  for (const auto& [pair, c] : inst.constraints()) {
    const Block* bi = owner.at(static_cast<std::size_t>(pair.first));
    const Block* bj = owner.at(static_cast<std::size_t>(pair.second));
    if (!bi || !bj) throw std::invalid_argument("blockwise_residuals: qubit not covered by any block");
    double energy = 0.0;
    if (bi == bj && bi->size() == 2) {
      const Vec4 chi = bi->qubits[0] == pair.first ? Vec4(bi->state) : swap_factors(Vec4(bi->state));
      for (const auto& v : c.range) energy += std::norm(v.dot(chi)) / chi.squaredNorm();
    } else if (bi == bj) {
      throw std::invalid_argument("blockwise_residuals: blocks larger than two qubits are not supported");
    } else {
      const Mat4 rho = kron(marginal(*bi, pair.first), marginal(*bj, pair.second));
      for (const auto& v : c.range) energy += (v.adjoint() * rho * v)(0, 0).real();
    }
    out.push_back(std::max(energy, 0.0));
  }
  return out;
}

PureState assemble_state(std::span<const Block> blocks, int n) {
  check_partition(blocks, n);
  VecX amps = VecX::Ones(Eigen::Index{1} << n);
  for (Eigen::Index x = 0; x < amps.size(); ++x) {
    for (const auto& b : blocks) {
      const int k = static_cast<int>(b.qubits.size());
      Eigen::Index sub = 0;
      for (int p = 0; p < k; ++p) {
        const int q = b.qubits[static_cast<std::size_t>(p)];
        if (x & static_cast<Eigen::Index>(bit_of(n, q))) sub |= Eigen::Index{1} << (k - 1 - p);
      }
      amps[x] *= b.state[sub];
    }
  }
  return PureState(n, std::move(amps));
}

bool blocks_at_most(std::span<const Block> blocks, std::size_t max_size) {
  return std::all_of(blocks.begin(), blocks.end(), [&](const Block& b) { return b.size() <= max_size; });
}

}  // namespace q2sat
