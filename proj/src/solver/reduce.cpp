#include <algorithm>
#include <deque>
#include <map>

#include "conditions.hpp"
#include "q2sat/solver.hpp"

namespace q2sat::solver {

std::string_view step_name(StepKind k) {
  switch (k) {
    case StepKind::UnitPropagation: return "unit-propagation";
    case StepKind::Rank3Freeze: return "rank3-freeze";
    case StepKind::Rank2Merge: break;
  }
  return "rank2-merge";
}

Propagation propagate_units(const Instance& inst, std::span<const std::pair<int, Vec2>> units, const Tolerances& tol) {
  Propagation out;
  out.reduced = inst;
  std::map<int, Vec2> assigned;
  std::deque<std::pair<int, Vec2>> queue(units.begin(), units.end());

  while (!queue.empty()) {
    auto [q, state] = queue.front();
    queue.pop_front();
    if (q < 0 || q >= inst.num_qubits()) throw IndexError("propagate_units: qubit out of range");
    state.normalize();
    if (const auto it = assigned.find(q); it != assigned.end()) {
      if (overlap(it->second, state) < 1.0 - tol.consistency) {
        out.conflict = true;
        return out;
      }
      continue;
    }
    assigned.emplace(q, state);
    out.assigned.emplace_back(q, state);

    for (const QubitPair pair : out.reduced.pairs_touching(q)) {
      const Constraint c = *out.reduced.find(pair);
      out.reduced.erase(pair);
      const int partner = pair.other(q);
      std::vector<Vec2> rows;
      for (const auto& phi : c.oriented(q)) rows.push_back(detail::contract_left(phi, state));
      const auto kernel = detail::condition_kernel(rows, tol.kernel);
      if (kernel.dimension == 0) {
        out.conflict = true;
        return out;
      }
      if (kernel.dimension == 1) queue.emplace_back(partner, kernel.vector);
    }
  }
  return out;
}

Freeze freeze_rank3(const Instance& inst, QubitPair pair, const Tolerances& tol) {
  const Constraint* c = inst.find(pair);
  if (!c || c->rank() != 3) throw PreconditionError("freeze_rank3: constraint is not rank 3");
  const Vec4 chi = complement_basis(c->range).at(0);
  const int a = pair.first;
  const int b = pair.second;

  Freeze out;
  out.reduced = inst;
  if (concurrence(chi) < tol.entangled) {
    Eigen::JacobiSVD<Mat2> svd(as_matrix(chi), Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.units.emplace_back(a, Vec2(svd.matrixU().col(0)));
    out.units.emplace_back(b, Vec2(svd.matrixV().col(0).conjugate()));
    return out;
  }

  out.reduced.erase(pair);
  std::map<int, std::vector<Vec2>> rows;
  for (const int side : {a, b}) {
    for (const QubitPair cross : inst.pairs_touching(side)) {
      if (cross == pair) continue;
      const int partner = cross.other(side);
      for (const auto& phi : inst.find(cross)->oriented(side)) {
        for (int fixed = 0; fixed < 2; ++fixed) {
          // Component `fixed` of the untouched pair qubit.
          Vec2 row = Vec2::Zero();
          for (int g = 0; g < 2; ++g)
            for (int s = 0; s < 2; ++s) {
              const Complex amp = side == a ? chi[2 * s + fixed] : chi[2 * fixed + s];
              row[g] += std::conj(phi[2 * s + g]) * amp;
            }
          rows[partner].push_back(row);
        }
      }
      out.reduced.erase(cross);
    }
  }
  for (const auto& [partner, r] : rows) {
    const auto kernel = detail::condition_kernel(r, tol.kernel);
    if (kernel.dimension == 0) {
      out.conflict = true;
      return out;
    }
    if (kernel.dimension == 1) out.units.emplace_back(partner, kernel.vector);
  }
  ReductionStep step;
  step.kind = StepKind::Rank3Freeze;
  step.qubits = {a, b};
  step.frozen = chi;
  out.step = step;
  return out;
}

Merge merge_rank2(const Instance& inst, QubitPair pair) {
  const Constraint* c = inst.find(pair);
  if (!c || c->rank() != 2) throw PreconditionError("merge_rank2: constraint is not rank 2");
  const auto allowed = complement_basis(c->range);
  const int a = pair.first;
  const int b = pair.second;
  const int n = inst.num_qubits();
  auto relabel = [&](int x) { return x < b ? x : (x == b ? a : x - 1); };

  Merge out;
  out.reduced = Instance(n - 1);
  std::map<int, std::vector<Vec4>> lifted;  // partner (old index) -> vectors on (logical, partner)
  for (const auto& [p, con] : inst.constraints()) {
    if (p == pair) continue;
    if (!p.contains(a) && !p.contains(b)) {
      out.reduced.set({QubitPair(relabel(p.first), relabel(p.second)), con.range});
      continue;
    }
    const int side = p.contains(a) ? a : b;
    const int partner = p.other(side);
    for (const auto& phi : con.oriented(side)) {
      for (int fixed = 0; fixed < 2; ++fixed) {
        // (V (x) I)^dagger (phi (x) |fixed>) with `fixed` on the other pair qubit.
        Vec4 u = Vec4::Zero();
        for (int x = 0; x < 2; ++x)
          for (int g = 0; g < 2; ++g)
            for (int s = 0; s < 2; ++s) {
              const int idx = side == a ? 2 * s + fixed : 2 * fixed + s;
              u[2 * x + g] += std::conj(allowed[static_cast<std::size_t>(x)][idx]) * phi[2 * s + g];
            }
        lifted[partner].push_back(u);
      }
    }
  }
  for (auto& [partner, vectors] : lifted) {
    const int k = relabel(partner);
    if (k < a)
      for (auto& v : vectors) v = swap_factors(v);
    out.reduced.set({QubitPair(a, k), span_basis(vectors)});
  }

  out.step.kind = StepKind::Rank2Merge;
  out.step.qubits = {a, b};
  out.step.isometry = {allowed[0], allowed[1]};
  out.step.logical = a;
  out.step.qubits_before = n;
  out.step.level = std::make_shared<const Instance>(inst);
  return out;
}

}  // namespace q2sat::solver
