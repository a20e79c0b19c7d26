#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "q2sat/linalg.hpp"
#include "q2sat/types.hpp"

namespace q2sat {

/// Two-qubit projector stored by an orthonormal basis of its range. Range
/// vectors use pair.first as the left tensor factor.
struct Constraint {
  QubitPair pair;
  std::vector<Vec4> range;

  int rank() const { return static_cast<int>(range.size()); }
  Mat4 projector() const { return projector_from(range); }
  /// Range vectors with `left` as the left tensor factor.
  std::vector<Vec4> oriented(int left) const;
};

/// A constraint as supplied by a user or generator, before canonicalization.
/// Vectors use `left` as the left tensor factor; they need not be orthonormal.
struct RawConstraint {
  int left = 0;
  int right = 1;
  std::vector<Vec4> range;
};

struct InstanceFlags {
  bool is_h_psi = false;
};

/// Two-body frustration-free instance: at most one nonzero-rank constraint
/// per pair.
class Instance {
 public:
  explicit Instance(int n = 0) : n_(n) {}

  int num_qubits() const { return n_; }
  const std::map<QubitPair, Constraint>& constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }
  bool empty() const { return constraints_.empty(); }

  const Constraint* find(QubitPair pair) const;
  std::vector<QubitPair> pairs_touching(int qubit) const;
  int max_rank() const;

  /// Replaces the constraint on c.pair; a rank-0 constraint erases it.
  void set(Constraint c);
  void erase(QubitPair pair) { constraints_.erase(pair); }

  InstanceFlags flags;

 private:
  int n_;
  std::map<QubitPair, Constraint> constraints_;
};

/// Merges same-pair constraints by span, normalizes orientation, drops rank 0.
/// Throws IndexError on equal or out-of-range qubits.
Instance canonicalize(std::span<const RawConstraint> raw, int n);

/// Re-canonicalizes an existing instance; idempotent.
Instance canonicalize(const Instance& inst);

/// The two-body Hamiltonian whose terms project onto the complements of the
/// pair supports of `state`.
Instance build_h_psi(const PureState& state, double tol = 1e-8);

/// Terms become (L_i (x) L_j)^dagger Pi (L_i (x) L_j), re-projectorized onto
/// their support. Throws InvalidOperatorError when |det L| <= 1e-10.
Instance slocc_transform(const Instance& inst, std::span<const Mat2> locals);

/// Largest projector-entry difference over all pairs (missing pairs count as
/// zero projectors). Qubit counts must agree.
double projector_distance(const Instance& a, const Instance& b);

}  // namespace q2sat
