#include "q2sat/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace q2sat {

std::vector<Vec4> Constraint::oriented(int left) const {
  if (left == pair.first) return range;
  std::vector<Vec4> out;
  out.reserve(range.size());
  for (const auto& v : range) out.push_back(swap_factors(v));
  return out;
}

const Constraint* Instance::find(QubitPair pair) const {
  const auto it = constraints_.find(pair);
  return it == constraints_.end() ? nullptr : &it->second;
}

std::vector<QubitPair> Instance::pairs_touching(int qubit) const {
  std::vector<QubitPair> out;
  for (const auto& [pair, c] : constraints_)
    if (pair.contains(qubit)) out.push_back(pair);
  return out;
}

int Instance::max_rank() const {
  int r = 0;
  for (const auto& [pair, c] : constraints_) r = std::max(r, c.rank());
  return r;
}

void Instance::set(Constraint c) {
  if (c.pair.first < 0 || c.pair.second >= n_ || c.pair.first == c.pair.second)
    throw IndexError("Instance::set: pair out of range");
  if (c.range.empty()) {
    constraints_.erase(c.pair);
    return;
  }
  const QubitPair key = c.pair;
  constraints_[key] = std::move(c);
}

Instance canonicalize(std::span<const RawConstraint> raw, int n) {
  std::map<QubitPair, std::vector<Vec4>> grouped;
  for (const auto& rc : raw) {
    if (rc.left < 0 || rc.right < 0 || rc.left >= n || rc.right >= n || rc.left == rc.right)
      throw IndexError("canonicalize: invalid pair (" + std::to_string(rc.left) + ", " + std::to_string(rc.right) +
                       ")");
    auto& bucket = grouped[QubitPair(rc.left, rc.right)];
    for (const auto& v : rc.range) bucket.push_back(rc.left < rc.right ? v : swap_factors(v));
  }
  Instance out(n);
  for (auto& [pair, vectors] : grouped) out.set({pair, span_basis(vectors)});
  return out;
}

Instance canonicalize(const Instance& inst) {
  std::vector<RawConstraint> raw;
  for (const auto& [pair, c] : inst.constraints()) raw.push_back({pair.first, pair.second, c.range});
  Instance out = canonicalize(raw, inst.num_qubits());
  out.flags = inst.flags;
  return out;
}

Instance build_h_psi(const PureState& state, double tol) {
  const int n = state.num_qubits();
  Instance out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto split = split_support(partial_trace_pair(state, i, j), tol);
      Constraint c{QubitPair(i, j), {}};
      for (const auto& v : split.complement) c.range.emplace_back(v);
      out.set(std::move(c));
    }
  }
  out.flags.is_h_psi = true;
  return out;
}

Instance slocc_transform(const Instance& inst, std::span<const Mat2> locals) {
  const int n = inst.num_qubits();
  if (static_cast<int>(locals.size()) != n)
    throw InvalidOperatorError("slocc_transform: expected " + std::to_string(n) + " local operators");
  for (std::size_t k = 0; k < locals.size(); ++k)
    if (std::abs(locals[k].determinant()) <= 1e-10)
      throw InvalidOperatorError("slocc_transform: local operator " + std::to_string(k + 1) + " is singular");

  Instance out(n);
  for (const auto& [pair, c] : inst.constraints()) {
    // range(K^dagger Pi K) = K^dagger range(Pi) for invertible K.
    const Mat4 k = kron(locals[pair.first], locals[pair.second]);
    std::vector<Vec4> mapped;
    for (const auto& v : c.range) mapped.emplace_back(k.adjoint() * v);
    out.set({pair, span_basis(mapped)});
  }
  return out;
}

double projector_distance(const Instance& a, const Instance& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("projector_distance: qubit counts differ");
  double worst = 0.0;
  auto proj = [](const Instance& inst, QubitPair p) -> Mat4 {
    const Constraint* c = inst.find(p);
    return c ? c->projector() : Mat4::Zero();
  };
  for (const auto& [pair, c] : a.constraints()) worst = std::max(worst, (proj(a, pair) - proj(b, pair)).cwiseAbs().maxCoeff());
  for (const auto& [pair, c] : b.constraints()) worst = std::max(worst, (proj(a, pair) - proj(b, pair)).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace q2sat
