#pragma once

// Randomized property campaigns. Each trial draws its own seed from the
// master seed and the trial index, so reports are reproducible regardless of
// how trials are scheduled across threads.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace q2sat::campaign {

struct Options {
  int trials = 50;
  std::uint64_t seed = 1;
  int nmax = 6;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  int passed = 0;
  double worst_residual = 0.0;
  double seconds = 0.0;
  std::vector<std::string> failures;  // first few failing trials
  std::map<std::string, double> metrics;

  bool ok() const { return trials > 0 && passed == trials; }
};

/// Random genuinely entangled states on n = 3..nmax, trials spread round
/// robin over n: the all-singles witness must verify on the dense
/// Hamiltonian and the ground space must have dimension >= 2.
SuiteReport theorem1(const Options& opt);

/// Planted, random homogeneous and random mixed-rank instances on
/// n = 3..nmax: solver verdict must match the dense ground energy, and every
/// witness must use blocks of at most two qubits with small residuals.
SuiteReport theorem2(const Options& opt);

/// Hand-derived completion triples, then random computational-basis
/// homogeneous instances compared against classical resolution closure.
SuiteReport closure(const Options& opt);

/// Random 2-D subspaces of C^4: the returned product must lie in the subspace.
SuiteReport parthasarathy(const Options& opt);

/// States whose pair supports all have rank >= 3: completion adds nothing.
SuiteReport closure_stability(const Options& opt);

/// Instances with a rank-2 constraint on n = 3..nmax: dense ground-space
/// dimension is unchanged by the merge and unwound witnesses verify.
SuiteReport merge_invariance(const Options& opt);

/// SLOCC labels of fixtures under random local operators (trials per
/// fixture), then solver verdict invariance under slocc_transform on
/// trials/2 planted and trials/4 random homogeneous instances.
SuiteReport slocc(const Options& opt);

/// Names accepted by run(): theorem1, theorem2, closure, parthasarathy,
/// stability, merge, slocc.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument on an unknown suite.
SuiteReport run(const std::string& suite, const Options& opt);

/// Computational-basis clause closure, used as the classical reference:
/// each entry (i, xi, k, xk) forbids q_i = xi together with q_k = xk.
struct Clause {
  int i;
  int xi;
  int k;
  int xk;
  auto operator<=>(const Clause&) const = default;
};
std::vector<Clause> resolution_closure(std::vector<Clause> clauses);

}  // namespace q2sat::campaign
