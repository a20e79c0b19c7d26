#pragma once

// Product ground states for two-body frustration-free qubit Hamiltonians.
//
// The pipeline reduces an instance with three moves until every constraint
// has rank <= 1:
//   unit propagation   a qubit forced into a pure state is removed and its
//                      constraints become conditions on the partners;
//   rank-3 freeze      the single allowed pair state is fixed, and its cross
//                      constraints collapse to single-qubit conditions;
//   rank-2 merge       the pair's allowed 2-D subspace is encoded as one
//                      logical qubit through an isometry V.
// The homogeneous remainder is completed (implied rank-1 constraints added
// until a fixpoint), a product assignment is extracted by propagation from
// generic seeds, and the trace is unwound back onto the original qubits.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "q2sat/blocks.hpp"
#include "q2sat/instance.hpp"

namespace q2sat::solver {

struct Tolerances {
  double kernel = 1e-9;         // singular-value cut for single-qubit conditions
  double entangled = 1e-10;     // concurrence above which a pair state is entangled
  double omega_zero = 1e-10;    // completion vectors below this norm are dropped
  double independence = 1e-8;   // residual above which a completion vector is new
  double consistency = 1e-8;    // allowed overlap defect between repeated units
  double factorize = 1e-8;      // relative singular-value cut when splitting blocks
  double residual = 1e-9;       // per-constraint energy accepted for a witness
};

enum class StepKind { UnitPropagation, Rank3Freeze, Rank2Merge };

struct ReductionStep {
  StepKind kind = StepKind::UnitPropagation;
  /// Qubit indices at the level where the step ran (one for a unit, the pair
  /// for a freeze or merge, first < second).
  std::vector<int> qubits;
  Vec2 unit = Vec2::Zero();
  Vec4 frozen = Vec4::Zero();
  /// V|0>, V|1> on (qubits[0], qubits[1]).
  std::array<Vec4, 2> isometry{Vec4::Zero(), Vec4::Zero()};
  /// Index of the logical qubit after a merge; qubits above qubits[1] shift down by one.
  int logical = -1;
  int qubits_before = 0;
  /// Whether qubits[0] / qubits[1] were themselves logical (earlier merges).
  std::array<bool, 2> from_logical{false, false};
  /// Instance the merge was applied to. Unwinding re-solves the constraints
  /// among three qubits from it when an expanded pair does not factorize.
  std::shared_ptr<const Instance> level;
};

std::string_view step_name(StepKind k);

struct Propagation {
  bool conflict = false;
  Instance reduced;
  std::vector<std::pair<int, Vec2>> assigned;  // in assignment order
};

/// Assigns the units, removes every constraint touching an assigned qubit and
/// forces partners whose allowed space drops to one dimension.
Propagation propagate_units(const Instance& inst, std::span<const std::pair<int, Vec2>> units,
                            const Tolerances& tol = {});

struct Freeze {
  bool conflict = false;
  Instance reduced;
  std::optional<ReductionStep> step;  // absent when the allowed pair state is a product
  std::vector<std::pair<int, Vec2>> units;
};

/// Handles a rank-3 constraint. A product allowed state becomes two units; an
/// entangled one freezes the pair and reduces its cross constraints to
/// conditions on the partners.
Freeze freeze_rank3(const Instance& inst, QubitPair pair, const Tolerances& tol = {});

struct Merge {
  Instance reduced;
  ReductionStep step;
};

/// Encodes a rank-2 pair as one logical qubit at index pair.first; qubits
/// above pair.second shift down by one.
Merge merge_rank2(const Instance& inst, QubitPair pair);

/// Completion rule: omega = phi * eps * theta as 2x2 matrices, with
/// eps = |0><1| - |1><0|; phi on (i, j), theta on (j, k), omega on (i, k).
Vec4 compose_completion(const Vec4& phi, const Vec4& theta);

struct RankGrowth {
  QubitPair pair;
  Vec4 existing;
  Vec4 added;
};

struct Closure {
  Instance closed;
  std::optional<RankGrowth> growth;
  int added = 0;
  std::vector<QubitPair> added_pairs;
};

/// Adds implied rank-1 constraints until a fixpoint, stopping at the first
/// pair that would need a second independent vector. Throws
/// PreconditionError on a constraint of rank > 1.
Closure completion_closure(const Instance& inst, const Tolerances& tol = {});

/// Product assignment for a completed homogeneous instance. Unconstrained
/// qubits get |0>; each connected component is seeded with a random state and
/// propagated, retrying from fresh seeds on conflict.
std::vector<Vec2> extract_product(const Instance& inst, std::uint64_t seed, int max_retries = 64,
                                  const Tolerances& tol = {});

/// Replays `trace` backwards, mapping blocks on the reduced qubits to blocks
/// on the original qubits. Blocks never exceed two qubits.
std::vector<Block> unwind(std::vector<Block> blocks, std::span<const ReductionStep> trace, const Tolerances& tol = {});

enum class Status { Satisfiable, Unsatisfiable };

struct SolveResult {
  Status status = Status::Unsatisfiable;
  std::vector<Block> blocks;
  std::vector<ReductionStep> trace;
  std::vector<double> residuals;
  double max_residual = 0.0;
  std::string reason;  // what certified unsatisfiability
};

SolveResult solve(const Instance& inst, std::uint64_t seed = 0, const Tolerances& tol = {});

/// All-singles witness for an instance built from a genuinely entangled
/// state. Entangled pair blocks left by merges are replaced by a product
/// inside the pair's allowed subspace; the result is checked against every
/// constraint. Throws PreconditionError without the is_h_psi flag and
/// InternalInconsistency if the check fails.
std::vector<Vec2> product_of_singles_witness(const Instance& inst, std::uint64_t seed = 0, const Tolerances& tol = {});

}  // namespace q2sat::solver
