#pragma once

// Brute-force checks on the dense 2^n x 2^n Hamiltonian. Independent of the
// solver: nothing here calls into the reduction pipeline.

#include <string_view>
#include <vector>

#include "q2sat/instance.hpp"

namespace q2sat::oracle {

inline constexpr int kDefaultCap = 12;

/// Sum of projectors, each extended by identity. Throws CapacityError above `cap` qubits.
HermitianOp dense_hamiltonian(const Instance& inst, int cap = kDefaultCap);

struct GroundSpaceReport {
  bool is_frustration_free = false;
  int dimension = 0;
  std::vector<VecX> basis;
  double min_eigenvalue = 0.0;
};

GroundSpaceReport ground_space(const Instance& inst, double tol = 1e-9, int cap = kDefaultCap);

/// Smallest eigenvalue only (cheaper than the full report).
double ground_energy(const Instance& inst, int cap = kDefaultCap);

/// Squared norm of the component of `v` orthogonal to the span of `basis`.
double membership_residual(const std::vector<VecX>& basis, const VecX& v);

/// ||Pi |state>||^2 per constraint, in constraint order.
std::vector<double> energy_residuals(const Instance& inst, const PureState& state);

/// True iff every bipartition has a reduced state with second eigenvalue > tol.
bool genuinely_entangled(const PureState& state, double tol = 1e-10);

enum class Slocc3Class { Ghz, W, Biseparable };

struct Slocc3Result {
  Slocc3Class label = Slocc3Class::Biseparable;
  double tangle = 0.0;
};

/// 3-tangle 4|Det(a)| from Cayley's hyperdeterminant of the normalized 2x2x2 tensor.
double three_tangle(const PureState& state);

Slocc3Result slocc3_classify(const PureState& state, double tol = 1e-8);

std::string_view label_name(Slocc3Class c);

}  // namespace q2sat::oracle
