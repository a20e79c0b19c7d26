#include <algorithm>
#include <optional>
#include <string>

#include "q2sat/solver.hpp"

namespace q2sat::solver {
namespace {

std::optional<QubitPair> lowest_with_rank(const Instance& inst, int rank) {
  for (const auto& [pair, c] : inst.constraints())
    if (c.rank() == rank) return pair;
  return std::nullopt;
}

std::string pair_text(QubitPair p) {
  return "(" + std::to_string(p.first + 1) + ", " + std::to_string(p.second + 1) + ")";
}

}  // namespace

SolveResult solve(const Instance& inst, std::uint64_t seed, const Tolerances& tol) {
  const Instance original = canonicalize(inst);
  const int n = original.num_qubits();
  SolveResult result;
  auto unsatisfiable = [&](std::string reason) {
    result.status = Status::Unsatisfiable;
    result.reason = std::move(reason);
    return result;
  };

  Instance work = original;
  std::vector<bool> active(static_cast<std::size_t>(n), true);
  std::vector<bool> logical(static_cast<std::size_t>(n), false);
  std::vector<std::pair<int, Vec2>> pending;

  while (true) {
    if (const auto full = lowest_with_rank(work, 4)) return unsatisfiable("rank-4 constraint on " + pair_text(*full));

    if (!pending.empty()) {
      auto prop = propagate_units(work, pending, tol);
      pending.clear();
      if (prop.conflict) return unsatisfiable("conflicting unit propagation");
      work = std::move(prop.reduced);
      for (const auto& [q, state] : prop.assigned) {
        active[static_cast<std::size_t>(q)] = false;
        ReductionStep step;
        step.kind = StepKind::UnitPropagation;
        step.qubits = {q};
        step.unit = state;
        result.trace.push_back(step);
      }
      continue;
    }

    if (const auto pair = lowest_with_rank(work, 3)) {
      auto frozen = freeze_rank3(work, *pair, tol);
      if (frozen.conflict) return unsatisfiable("empty kernel around frozen pair " + pair_text(*pair));
      work = std::move(frozen.reduced);
      if (frozen.step) {
        active[static_cast<std::size_t>(pair->first)] = false;
        active[static_cast<std::size_t>(pair->second)] = false;
        result.trace.push_back(*frozen.step);
      }
      pending = std::move(frozen.units);
      continue;
    }

    if (const auto pair = lowest_with_rank(work, 2)) {
      auto merged = merge_rank2(work, *pair);
      merged.step.from_logical = {logical[static_cast<std::size_t>(pair->first)],
                                  logical[static_cast<std::size_t>(pair->second)]};
      result.trace.push_back(merged.step);
      work = std::move(merged.reduced);
      active.erase(active.begin() + pair->second);
      logical.erase(logical.begin() + pair->second);
      logical[static_cast<std::size_t>(pair->first)] = true;
      continue;
    }

    auto closure = completion_closure(work, tol);
    work = std::move(closure.closed);
    if (closure.growth) {
      const std::vector<Vec4> both{closure.growth->existing, closure.growth->added};
      work.set({closure.growth->pair, span_basis(both)});
      continue;
    }
    break;
  }

  const auto assignment = extract_product(work, seed, 64, tol);
  std::vector<Block> blocks;
  for (int q = 0; q < work.num_qubits(); ++q)
    if (active[static_cast<std::size_t>(q)]) blocks.push_back(single_block(q, assignment[static_cast<std::size_t>(q)]));
  result.blocks = unwind(std::move(blocks), result.trace, tol);
  std::sort(result.blocks.begin(), result.blocks.end(),
            [](const Block& x, const Block& y) { return x.qubits.front() < y.qubits.front(); });

  check_partition(result.blocks, n);
  if (!blocks_at_most(result.blocks, 2)) throw InternalInconsistency("solve: block larger than two qubits");
  result.residuals = blockwise_residuals(original, result.blocks);
  result.max_residual = result.residuals.empty() ? 0.0 : *std::max_element(result.residuals.begin(), result.residuals.end());
  if (result.max_residual >= tol.residual)
    throw InternalInconsistency("solve: witness residual " + std::to_string(result.max_residual) + " exceeds tolerance");
  result.status = Status::Satisfiable;
  return result;
}

std::vector<Vec2> product_of_singles_witness(const Instance& inst, std::uint64_t seed, const Tolerances& tol) {
  if (!inst.flags.is_h_psi) throw PreconditionError("product_of_singles_witness: instance was not built from a state");
  const SolveResult solved = solve(inst, seed, tol);
  if (solved.status != Status::Satisfiable) throw InternalInconsistency("product_of_singles_witness: " + solved.reason);

  std::vector<Vec2> singles(static_cast<std::size_t>(inst.num_qubits()), Vec2(1.0, 0.0));
  for (const auto& block : solved.blocks) {
    if (block.size() == 1) {
      singles[static_cast<std::size_t>(block.qubits[0])] = block.state;
      continue;
    }
    const Vec4 chi = block.state;
    std::pair<Vec2, Vec2> factors;
    if (concurrence(chi) < tol.entangled) {
      Eigen::JacobiSVD<Mat2> svd(as_matrix(chi), Eigen::ComputeFullU | Eigen::ComputeFullV);
      factors = {svd.matrixU().col(0), svd.matrixV().col(0).conjugate()};
    } else if (block.pair_support) {
      factors = product_state_in_2d((*block.pair_support)[0], (*block.pair_support)[1]);
    } else {
      throw InternalInconsistency("product_of_singles_witness: forced entangled pair block");
    }
    singles[static_cast<std::size_t>(block.qubits[0])] = factors.first;
    singles[static_cast<std::size_t>(block.qubits[1])] = factors.second;
  }

  std::vector<Block> check;
  for (int q = 0; q < inst.num_qubits(); ++q) check.push_back(single_block(q, singles[static_cast<std::size_t>(q)]));
  for (const double r : blockwise_residuals(canonicalize(inst), check))
    if (r >= tol.residual)
      throw InternalInconsistency("product_of_singles_witness: residual " + std::to_string(r) + " exceeds tolerance");
  return singles;
}

}  // namespace q2sat::solver
