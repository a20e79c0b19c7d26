#include <algorithm>
#include <string>

#include "q2sat/solver.hpp"

namespace q2sat::solver {
namespace {

// Replaces the qubit at `pos` by the pair (a, b) through V.
Block expand(const Block& block, std::size_t pos, int a, int b, const std::array<Vec4, 2>& isometry) {
  const int k = static_cast<int>(block.qubits.size());
  const int shift = k - 1 - static_cast<int>(pos);
  Block out;
  out.qubits = block.qubits;
  out.qubits[pos] = a;
  out.qubits.insert(out.qubits.begin() + static_cast<std::ptrdiff_t>(pos) + 1, b);
  out.state = VecX::Zero(Eigen::Index{1} << (k + 1));
  for (Eigen::Index x = 0; x < block.state.size(); ++x) {
    const int l = static_cast<int>((x >> shift) & 1);
    const Eigen::Index high = x >> (shift + 1);
    const Eigen::Index low = x & ((Eigen::Index{1} << shift) - 1);
    for (Eigen::Index ab = 0; ab < 4; ++ab) {
      const Eigen::Index y = (((high << 2) | ab) << shift) | low;
      out.state[y] += isometry[static_cast<std::size_t>(l)][ab] * block.state[x];
    }
  }
  return out;
}

void split_pair(const Block& pair, std::vector<Block>& out) {
  Eigen::JacobiSVD<Mat2> svd(as_matrix(Vec4(pair.state)), Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.push_back(single_block(pair.qubits[0], svd.matrixU().col(0)));
  out.push_back(single_block(pair.qubits[1], svd.matrixV().col(0).conjugate()));
}

// Splits product factors off a block of at most three qubits. Returns false
// on a genuinely entangled three-qubit block.
bool factorize(const Block& block, const Tolerances& tol, std::vector<Block>& out) {
  if (block.size() == 1) {
    out.push_back(block);
    return true;
  }
  if (block.size() == 2) {
    if (concurrence(Vec4(block.state)) < tol.entangled)
      split_pair(block, out);
    else
      out.push_back(block);
    return true;
  }
  if (block.size() != 3) throw InternalInconsistency("unwind: block of " + std::to_string(block.size()) + " qubits");
  for (int p = 0; p < 3; ++p) {
    Eigen::Matrix<Complex, 2, 4> m;
    std::vector<int> rest;
    for (int q = 0; q < 3; ++q)
      if (q != p) rest.push_back(q);
    for (int x = 0; x < 8; ++x) {
      const int row = (x >> (2 - p)) & 1;
      const int col = (((x >> (2 - rest[0])) & 1) << 1) | ((x >> (2 - rest[1])) & 1);
      m(row, col) = block.state[x];
    }
    Eigen::JacobiSVD<Eigen::Matrix<Complex, 2, 4>> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s[1] > tol.factorize * s[0]) continue;
    out.push_back(single_block(block.qubits[static_cast<std::size_t>(p)], svd.matrixU().col(0)));
    const Block remainder = pair_block(block.qubits[static_cast<std::size_t>(rest[0])],
                                       block.qubits[static_cast<std::size_t>(rest[1])],
                                       svd.matrixV().col(0).conjugate());
    return factorize(remainder, tol, out);
  }
  return false;
}

// A genuinely entangled block has full-rank single-qubit marginals, so every
// constraint leaving it is satisfied whatever state the block holds. Any
// solution of the constraints among its own qubits can take its place.
void resolve_block(const Block& block, const Instance& level, const Tolerances& tol, std::vector<Block>& out) {
  std::vector<int> qs = block.qubits;
  std::sort(qs.begin(), qs.end());
  auto local = [&](int q) { return static_cast<int>(std::find(qs.begin(), qs.end(), q) - qs.begin()); };
  Instance sub(static_cast<int>(qs.size()));
  for (const auto& [p, c] : level.constraints())
    if (std::binary_search(qs.begin(), qs.end(), p.first) && std::binary_search(qs.begin(), qs.end(), p.second))
      sub.set({QubitPair(local(p.first), local(p.second)), c.range});
  const SolveResult inner = solve(sub, 0, tol);
  if (inner.status != Status::Satisfiable)
    throw InternalInconsistency("unwind: constraints inside an entangled block are unsatisfiable");
  for (Block b : inner.blocks) {
    for (int& q : b.qubits) q = qs[static_cast<std::size_t>(q)];
    out.push_back(std::move(b));
  }
}

}  // namespace

std::vector<Block> unwind(std::vector<Block> blocks, std::span<const ReductionStep> trace, const Tolerances& tol) {
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    const ReductionStep& step = *it;
    switch (step.kind) {
      case StepKind::UnitPropagation:
        blocks.push_back(single_block(step.qubits[0], step.unit));
        break;
      case StepKind::Rank3Freeze:
        blocks.push_back(pair_block(step.qubits[0], step.qubits[1], step.frozen));
        break;
      case StepKind::Rank2Merge: {
        const int a = step.qubits[0];
        const int b = step.qubits[1];
        auto target = std::find_if(blocks.begin(), blocks.end(), [&](const Block& blk) {
          return std::find(blk.qubits.begin(), blk.qubits.end(), step.logical) != blk.qubits.end();
        });
        if (target == blocks.end()) throw std::invalid_argument("unwind: logical qubit has no block");
        Block merged = std::move(*target);
        blocks.erase(target);
        for (auto& blk : blocks)
          for (int& q : blk.qubits)
            if (q >= b) ++q;
        const auto pos = static_cast<std::size_t>(
            std::find(merged.qubits.begin(), merged.qubits.end(), step.logical) - merged.qubits.begin());
        for (std::size_t p = 0; p < merged.qubits.size(); ++p)
          if (p != pos && merged.qubits[p] >= b) ++merged.qubits[p];
        const bool was_single = merged.size() == 1;
        Block expanded = expand(merged, pos, a, b, step.isometry);

        if (!was_single) {
          if (!factorize(expanded, tol, blocks)) {
            if (!step.level) throw InternalInconsistency("unwind: entangled three-qubit block without level instance");
            resolve_block(expanded, *step.level, tol, blocks);
          }
        } else if (concurrence(Vec4(expanded.state)) < tol.entangled) {
          split_pair(expanded, blocks);
        } else if (step.from_logical[0] || step.from_logical[1]) {
          // The state inside the allowed subspace was a free choice; a product
          // member of the same subspace keeps every block at one qubit.
          const auto [pa, pb] = product_state_in_2d(step.isometry[0], step.isometry[1]);
          blocks.push_back(single_block(a, pa));
          blocks.push_back(single_block(b, pb));
        } else {
          expanded.pair_support = step.isometry;
          blocks.push_back(std::move(expanded));
        }
        break;
      }
    }
  }
  return blocks;
}

}  // namespace q2sat::solver
