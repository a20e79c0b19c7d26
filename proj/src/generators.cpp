#include "q2sat/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <regex>

#include "q2sat/oracle.hpp"

namespace q2sat::gen {
namespace {

std::vector<QubitPair> all_pairs(int n) {
  std::vector<QubitPair> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<QubitPair> sample_pairs(std::vector<QubitPair> pool, int m, std::mt19937_64& rng) {
  if (m < 0 || m > static_cast<int>(pool.size()))
    throw std::invalid_argument("requested " + std::to_string(m) + " pairs but only " + std::to_string(pool.size()) +
                                " are available");
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(m));
  std::sort(pool.begin(), pool.end());
  return pool;
}

Mat2 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat2 z;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) z(r, c) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Mat2> qr(z);
  Mat2 q = qr.householderQ();
  const Mat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < 2; ++c) q.col(c) *= std::polar(1.0, std::arg(r(c, c)));
  return q;
}

}  // namespace

Vec2 random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Vec2(Complex(g(rng), g(rng)), Complex(g(rng), g(rng))).normalized();
}

Vec4 random_two_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec4 v;
  for (int k = 0; k < 4; ++k) v[k] = Complex(g(rng), g(rng));
  return v.normalized();
}

PureState dicke_state(int n, int k) {
  if (n < 2 || k < 1 || k >= n) throw std::invalid_argument("Dicke state needs n >= 2 and 1 <= k < n");
  VecX v = VecX::Zero(Eigen::Index{1} << n);
  for (Eigen::Index x = 0; x < v.size(); ++x)
    if (std::popcount(static_cast<std::uint64_t>(x)) == k) v[x] = 1.0;
  return PureState(n, std::move(v));
}

PureState graph_state(int n, const std::vector<std::pair<int, int>>& edges) {
  VecX v(Eigen::Index{1} << n);
  for (Eigen::Index x = 0; x < v.size(); ++x) {
    int parity = 0;
    for (const auto& [a, b] : edges)
      parity ^= ((x & static_cast<Eigen::Index>(bit_of(n, a))) && (x & static_cast<Eigen::Index>(bit_of(n, b)))) ? 1 : 0;
    v[x] = parity ? -1.0 : 1.0;
  }
  return PureState(n, std::move(v));
}

PureState named_state(const std::string& name, int n) {
  if (name == "GHZ" || name == "ghz") {
    if (n < 2) throw std::invalid_argument("GHZ needs n >= 2");
    VecX v = VecX::Zero(Eigen::Index{1} << n);
    v[0] = 1.0;
    v[v.size() - 1] = 1.0;
    return PureState(n, std::move(v));
  }
  if (name == "W" || name == "w") return dicke_state(n, 1);
  if (name == "cluster-line" || name == "cluster-ring") {
    const bool ring = name == "cluster-ring";
    if (n < (ring ? 3 : 2)) throw std::invalid_argument(name + " needs more qubits");
    std::vector<std::pair<int, int>> edges;
    for (int q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
    if (ring) edges.emplace_back(n - 1, 0);
    return graph_state(n, edges);
  }
  static const std::regex dicke(R"([Dd]icke\((\d+)\))");
  std::smatch match;
  if (std::regex_match(name, match, dicke)) return dicke_state(n, std::stoi(match[1].str()));
  throw std::invalid_argument("unknown state name '" + name + "'");
}

PureState random_genuine_state(int n, std::uint64_t seed) {
  if (n < 3 || n > 12) throw std::invalid_argument("random_genuine_state: n must be in 3..12");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  while (true) {
    VecX v(Eigen::Index{1} << n);
    for (Eigen::Index x = 0; x < v.size(); ++x) v[x] = Complex(g(rng), g(rng));
    PureState s(n, std::move(v));
    if (oracle::genuinely_entangled(s)) return s;
  }
}

PureState random_product_superposition(int n, int terms, std::uint64_t seed) {
  if (n < 2 || terms < 2) throw std::invalid_argument("random_product_superposition: need n >= 2 and terms >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  while (true) {
    VecX sum = VecX::Zero(Eigen::Index{1} << n);
    for (int t = 0; t < terms; ++t) {
      std::vector<Vec2> factors;
      for (int q = 0; q < n; ++q) factors.push_back(random_qubit(rng));
      sum += Complex(g(rng), g(rng)) * PureState::product(factors).amplitudes();
    }
    if (!(sum.norm() > 1e-6)) continue;
    PureState s(n, std::move(sum));
    if (oracle::genuinely_entangled(s, 1e-8)) return s;
  }
}

Planted planted_instance(int n, int m, BlockLayout layout, std::uint64_t seed, int max_rank) {
  if (n < 2) throw std::invalid_argument("planted_instance: need at least 2 qubits");
  if (max_rank < 1 || max_rank > 3) throw std::invalid_argument("planted_instance: max_rank must be in 1..3");
  std::mt19937_64 rng(seed);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<int>> groups;
  std::size_t next = 0;
  if (layout == BlockLayout::OnePair) {
    groups.push_back({std::min(order[0], order[1]), std::max(order[0], order[1])});
    next = 2;
  } else if (layout == BlockLayout::RandomPairs) {
    std::bernoulli_distribution coin(0.5);
    while (next + 1 < order.size()) {
      if (coin(rng)) {
        groups.push_back({std::min(order[next], order[next + 1]), std::max(order[next], order[next + 1])});
        next += 2;
      } else {
        groups.push_back({order[next++]});
      }
    }
  }
  for (; next < order.size(); ++next) groups.push_back({order[next]});

  Planted out;
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (const auto& grp : groups) {
    Block b;
    b.qubits = grp;
    b.state = grp.size() == 1 ? VecX(random_qubit(rng)) : VecX(random_two_qubit(rng));
    for (int q : grp) owner[static_cast<std::size_t>(q)] = static_cast<int>(out.hidden.size());
    out.hidden.push_back(std::move(b));
  }
  std::sort(out.hidden.begin(), out.hidden.end(),
            [](const Block& x, const Block& y) { return x.qubits.front() < y.qubits.front(); });
  for (std::size_t k = 0; k < out.hidden.size(); ++k)
    for (int q : out.hidden[k].qubits) owner[static_cast<std::size_t>(q)] = static_cast<int>(k);

  // Support of the hidden state's restriction to each pair.
  auto restriction_support = [&](QubitPair p) -> std::vector<Vec4> {
    const Block& bi = out.hidden[static_cast<std::size_t>(owner[static_cast<std::size_t>(p.first)])];
    const Block& bj = out.hidden[static_cast<std::size_t>(owner[static_cast<std::size_t>(p.second)])];
    if (&bi == &bj) return {Vec4(bi.state)};
    if (bi.size() == 2 && bj.size() == 2) return {};
    if (bi.size() == 2) return {kron(Vec2(1, 0), Vec2(bj.state)), kron(Vec2(0, 1), Vec2(bj.state))};
    if (bj.size() == 2) return {kron(Vec2(bi.state), Vec2(1, 0)), kron(Vec2(bi.state), Vec2(0, 1))};
    return {kron(Vec2(bi.state), Vec2(bj.state))};
  };

  std::vector<QubitPair> pool;
  for (const auto p : all_pairs(n))
    if (!restriction_support(p).empty()) pool.push_back(p);
  const auto chosen = sample_pairs(pool, m, rng);

  std::vector<RawConstraint> raw;
  for (const auto p : chosen) {
    const auto allowed = complement_basis(restriction_support(p));
    const int cap = std::min(max_rank, static_cast<int>(allowed.size()));
    const int rank = std::uniform_int_distribution<int>(1, cap)(rng);
    std::normal_distribution<double> g;
    std::vector<Vec4> range;
    for (int r = 0; r < rank; ++r) {
      Vec4 v = Vec4::Zero();
      for (const auto& basis : allowed) v += Complex(g(rng), g(rng)) * basis;
      range.push_back(v);
    }
    raw.push_back({p.first, p.second, range});
  }
  out.instance = canonicalize(raw, n);
  return out;
}

Instance random_homogeneous(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto chosen = sample_pairs(all_pairs(n), m, rng);
  std::vector<RawConstraint> raw;
  for (const auto p : chosen) raw.push_back({p.first, p.second, {random_two_qubit(rng)}});
  return canonicalize(raw, n);
}

Instance random_instance(int n, int m, int max_rank, std::uint64_t seed) {
  if (max_rank < 1 || max_rank > 4) throw std::invalid_argument("random_instance: max_rank must be in 1..4");
  std::mt19937_64 rng(seed);
  const auto chosen = sample_pairs(all_pairs(n), m, rng);
  std::vector<RawConstraint> raw;
  for (const auto p : chosen) {
    const int rank = std::uniform_int_distribution<int>(1, max_rank)(rng);
    std::vector<Vec4> range;
    for (int r = 0; r < rank; ++r) range.push_back(random_two_qubit(rng));
    raw.push_back({p.first, p.second, range});
  }
  return canonicalize(raw, n);
}

Instance random_classical_homogeneous(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto chosen = sample_pairs(all_pairs(n), m, rng);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<RawConstraint> raw;
  for (const auto p : chosen) {
    Vec4 v = Vec4::Zero();
    v[pick(rng)] = 1.0;
    raw.push_back({p.first, p.second, {v}});
  }
  return canonicalize(raw, n);
}

std::vector<Mat2> random_locals(int n, std::uint64_t seed, double cond_bound) {
  if (!(cond_bound >= 1.0) || cond_bound > 1e6) throw std::invalid_argument("random_locals: cond_bound must be in [1, 1e6]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> spread(1.0 / cond_bound, 1.0);
  std::vector<Mat2> out;
  for (int q = 0; q < n; ++q) {
    const Mat2 u = random_unitary(rng);
    const Mat2 w = random_unitary(rng);
    const double s = cond_bound == 1.0 ? 1.0 : spread(rng);
    Mat2 d = Mat2::Zero();
    d(0, 0) = 1.0;
    d(1, 1) = s;
    out.push_back(u * d * w);
  }
  return out;
}

PureState apply_locals(const PureState& state, std::span<const Mat2> locals) {
  const int n = state.num_qubits();
  if (static_cast<int>(locals.size()) != n) throw std::invalid_argument("apply_locals: need one operator per qubit");
  VecX v = state.amplitudes();
  for (int q = 0; q < n; ++q) {
    const auto bit = static_cast<Eigen::Index>(bit_of(n, q));
    const Mat2& l = locals[static_cast<std::size_t>(q)];
    for (Eigen::Index x = 0; x < v.size(); ++x) {
      if (x & bit) continue;
      const Complex v0 = v[x];
      const Complex v1 = v[x | bit];
      v[x] = l(0, 0) * v0 + l(0, 1) * v1;
      v[x | bit] = l(1, 0) * v0 + l(1, 1) * v1;
    }
  }
  return PureState(n, std::move(v));
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over a counter derived from the master seed.
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace q2sat::gen
