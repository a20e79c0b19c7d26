#include <deque>
#include <optional>
#include <random>

#include "conditions.hpp"
#include "q2sat/solver.hpp"

namespace q2sat::solver {

Vec4 compose_completion(const Vec4& phi, const Vec4& theta) {
  Mat2 eps;
  eps << 0.0, 1.0, -1.0, 0.0;
  const Mat2 omega = as_matrix(phi) * eps * as_matrix(theta);
  return Vec4(omega(0, 0), omega(0, 1), omega(1, 0), omega(1, 1));
}

Closure completion_closure(const Instance& inst, const Tolerances& tol) {
  if (inst.max_rank() > 1) throw PreconditionError("completion_closure: instance is not homogeneous");
  Closure out;
  out.closed = inst;
  bool changed = true;
  while (changed) {
    changed = false;
    const auto snapshot = out.closed.constraints();
    for (const auto& [first_pair, first] : snapshot) {
      for (const int i : {first_pair.first, first_pair.second}) {
        const int j = first_pair.other(i);
        const Vec4 phi = first.oriented(i).front();
        for (const QubitPair second_pair : out.closed.pairs_touching(j)) {
          const int k = second_pair.other(j);
          if (k == i) continue;
          const Vec4 theta = out.closed.find(second_pair)->oriented(j).front();
          Vec4 omega = compose_completion(phi, theta);
          const double norm = omega.norm();
          if (norm <= tol.omega_zero) continue;
          omega /= norm;
          if (k < i) omega = swap_factors(omega);
          const QubitPair target(i, k);
          if (const Constraint* existing = out.closed.find(target)) {
            const Vec4& v = existing->range.front();
            const double residual = (omega - v * v.dot(omega)).norm();
            if (residual > tol.independence) {
              out.growth = RankGrowth{target, v, omega};
              return out;
            }
            continue;
          }
          out.closed.set({target, {omega}});
          out.added += 1;
          out.added_pairs.push_back(target);
          changed = true;
        }
      }
    }
  }
  return out;
}

namespace {

Vec2 random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec2 v(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
  return v.normalized();
}

}  // namespace

std::vector<Vec2> extract_product(const Instance& inst, std::uint64_t seed, int max_retries, const Tolerances& tol) {
  if (inst.max_rank() > 1) throw PreconditionError("extract_product: instance is not homogeneous");
  const int n = inst.num_qubits();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<std::optional<Vec2>> assigned(static_cast<std::size_t>(n));
    bool conflict = false;
    for (int root = 0; root < n && !conflict; ++root) {
      if (assigned[static_cast<std::size_t>(root)]) continue;
      const auto touching = inst.pairs_touching(root);
      if (touching.empty()) {
        assigned[static_cast<std::size_t>(root)] = Vec2(1.0, 0.0);
        continue;
      }
      assigned[static_cast<std::size_t>(root)] = random_qubit(rng);
      std::deque<int> queue{root};
      while (!queue.empty() && !conflict) {
        const int q = queue.front();
        queue.pop_front();
        const Vec2 a = *assigned[static_cast<std::size_t>(q)];
        for (const QubitPair pair : inst.pairs_touching(q)) {
          const int p = pair.other(q);
          const Vec2 row = detail::contract_left(inst.find(pair)->oriented(q).front(), a);
          if (row.norm() <= tol.omega_zero) continue;
          auto& slot = assigned[static_cast<std::size_t>(p)];
          if (slot) {
            if (std::abs(row.cwiseProduct(*slot).sum()) > tol.consistency) conflict = true;
            continue;
          }
          slot = Vec2(row[1], -row[0]).normalized();
          queue.push_back(p);
        }
      }
    }
    if (conflict) continue;
    std::vector<Vec2> out;
    out.reserve(assigned.size());
    for (const auto& s : assigned) out.push_back(*s);
    return out;
  }
  throw InternalInconsistency("extract_product: no consistent assignment after retries");
}

}  // namespace q2sat::solver
