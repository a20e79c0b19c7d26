#include "q2sat/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "q2sat/generators.hpp"
#include "q2sat/oracle.hpp"
#include "q2sat/solver.hpp"

namespace q2sat::campaign {

namespace {

constexpr double kWitnessTol = 1e-9;
constexpr std::size_t kMaxFailuresKept = 8;

struct Outcome {
  bool pass = false;
  double residual = 0.0;
  std::string message;
  std::vector<std::string> tags;
};

using TrialFn = std::function<Outcome(int index, std::uint64_t seed)>;

std::vector<Outcome> run_trials(int trials, const Options& opt, const TrialFn& fn) {
  std::vector<Outcome> out(static_cast<std::size_t>(std::max(trials, 0)));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t; (t = next.fetch_add(1)) < trials;) {
      try {
        out[static_cast<std::size_t>(t)] = fn(t, gen::trial_seed(opt.seed, static_cast<std::uint64_t>(t)));
      } catch (const std::exception& e) {
        out[static_cast<std::size_t>(t)] = {false, 0.0, std::string("exception: ") + e.what(), {}};
      }
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(trials, 1)));
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  return out;
}

void absorb(SuiteReport& report, const std::vector<Outcome>& outcomes, const std::string& prefix = "") {
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    const Outcome& o = outcomes[t];
    ++report.trials;
    if (o.pass) ++report.passed;
    report.worst_residual = std::max(report.worst_residual, o.residual);
    for (const auto& tag : o.tags) report.metrics[tag] += 1.0;
    if (!o.pass && report.failures.size() < kMaxFailuresKept)
      report.failures.push_back(prefix + "trial " + std::to_string(t) + ": " + o.message);
  }
}

template <class Body>
SuiteReport timed(const std::string& name, const Options& opt, Body&& body) {
  SuiteReport report;
  report.suite = name;
  report.seed = opt.seed;
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int n_for(int t, int nmin, int nmax) { return nmin + t % (nmax - nmin + 1); }

void check_nmax(const Options& opt, int lo, int hi) {
  if (opt.nmax < lo || opt.nmax > hi)
    throw std::invalid_argument("nmax must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

double max_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

/// Dense residual of a block witness, independent of the blockwise evaluation.
double dense_residual(const Instance& inst, std::span<const Block> blocks) {
  return max_of(oracle::energy_residuals(inst, assemble_state(blocks, inst.num_qubits())));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Planted instance with m shrunk until the layout admits it.
gen::Planted planted(int n, int m, gen::BlockLayout layout, std::uint64_t seed, int max_rank) {
  for (; m >= 1; --m) {
    try {
      return gen::planted_instance(n, m, layout, seed, max_rank);
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("no feasible planted instance");
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

SuiteReport theorem1(const Options& opt) {
  check_nmax(opt, 3, 12);
  return timed("theorem1", opt, [&](SuiteReport& report) {
    const int spread = opt.nmax - 2;
    auto trial = [&](int t, std::uint64_t seed) -> Outcome {
      const int n = n_for(t, 3, opt.nmax);
      const int family = (t / spread) % 4;
      std::optional<PureState> psi;
      std::string tag;
      switch (family) {
        case 0:
          psi = gen::random_genuine_state(n, seed);
          tag = "haar";
          break;
        case 1:
          psi = gen::random_product_superposition(n, 2, seed);
          tag = "two-term";
          break;
        case 2:
          psi = gen::random_product_superposition(n, 3, seed);
          tag = "three-term";
          break;
        default: {
          const auto locals = gen::random_locals(n, seed, 10.0);
          psi = gen::apply_locals(gen::dicke_state(n, 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n - 1))),
                                  locals);
          tag = "slocc-dicke";
        }
      }
      if (!oracle::genuinely_entangled(*psi)) return {false, 0.0, "generated state is not genuinely entangled", {}};
      const Instance h = build_h_psi(*psi);
      const auto singles = solver::product_of_singles_witness(h, seed);
      const double res = max_of(oracle::energy_residuals(h, PureState::product(singles)));
      const auto gs = oracle::ground_space(h);
      const double own = oracle::membership_residual(gs.basis, psi->amplitudes());
      Outcome o{true, res, {}, {tag}};
      if (res >= kWitnessTol) o = {false, res, "witness residual " + fmt(res), {tag}};
      else if (gs.dimension < 2) o = {false, res, "ground-space dimension " + std::to_string(gs.dimension), {tag}};
      else if (own >= kWitnessTol) o = {false, res, "state outside its own ground space", {tag}};
      return o;
    };
    absorb(report, run_trials(opt.trials, opt, trial));
  });
}

SuiteReport theorem2(const Options& opt) {
  check_nmax(opt, 3, 12);
  return timed("theorem2", opt, [&](SuiteReport& report) {
    const int spread = opt.nmax - 2;
    auto trial = [&](int t, std::uint64_t seed) -> Outcome {
      const int n = n_for(t, 3, opt.nmax);
      const int round = t / spread;
      std::mt19937_64 rng(seed ^ 0xA5A5A5A5ULL);
      const int all_pairs = n * (n - 1) / 2;
      Instance inst;
      std::string tag;
      switch (round % 3) {
        case 0: {
          const auto layout = static_cast<gen::BlockLayout>((round / 3) % 3);
          inst = planted(n, uniform(rng, 1, std::min(all_pairs, 2 * n)), layout, seed, 1 + (round / 9) % 3).instance;
          tag = "planted";
          break;
        }
        case 1:
          inst = gen::random_homogeneous(n, uniform(rng, std::max(1, n / 2), std::min(all_pairs, 2 * n)), seed);
          tag = "homogeneous";
          break;
        default:
          inst = gen::random_instance(n, uniform(rng, 1, std::min(all_pairs, n)), 2, seed);
          tag = "mixed";
      }
      const double e0 = oracle::ground_energy(inst);
      const bool oracle_sat = e0 < kWitnessTol;
      const auto result = solver::solve(inst, seed);
      const bool sat = result.status == solver::Status::Satisfiable;
      std::vector<std::string> tags{tag, sat ? "sat" : "unsat"};
      if (sat != oracle_sat)
        return {false, 0.0, std::string("verdict ") + (sat ? "sat" : "unsat") + ", ground energy " + fmt(e0), tags};
      if (!sat) return {true, 0.0, {}, tags};
      check_partition(result.blocks, n);
      if (!blocks_at_most(result.blocks, 2)) return {false, 0.0, "block larger than two qubits", tags};
      const double res = dense_residual(inst, result.blocks);
      if (res >= kWitnessTol) return {false, res, "witness residual " + fmt(res), tags};
      return {true, res, {}, tags};
    };
    absorb(report, run_trials(opt.trials, opt, trial));
  });
}

std::vector<Clause> resolution_closure(std::vector<Clause> clauses) {
  auto canonical = [](Clause c) { return c.i < c.k ? c : Clause{c.k, c.xk, c.i, c.xi}; };
  std::set<Clause> have;
  for (auto& c : clauses) {
    if (c.i == c.k) throw std::invalid_argument("resolution_closure: clause on a single variable");
    have.insert(canonical(c));
  }
  // Literal view: clause (i, xi, k, xk) seen from each of its two variables.
  struct Side {
    int self, xs, other, xo;
  };
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Side> sides;
    for (const auto& c : have) {
      sides.push_back({c.i, c.xi, c.k, c.xk});
      sides.push_back({c.k, c.xk, c.i, c.xi});
    }
    std::vector<Clause> fresh;
    for (const auto& a : sides)
      for (const auto& b : sides)
        if (a.self == b.self && a.xs != b.xs && a.other != b.other) {
          const Clause r = canonical({a.other, a.xo, b.other, b.xo});
          if (!have.contains(r)) fresh.push_back(r);
        }
    for (const auto& r : fresh) grew |= have.insert(r).second;
  }
  return {have.begin(), have.end()};
}

namespace {

std::optional<Clause> as_clause(QubitPair p, const Vec4& v) {
  int hit = -1;
  for (int k = 0; k < 4; ++k) {
    if (std::abs(v[k]) > 1.0 - 1e-12) hit = k;
    else if (std::abs(v[k]) > 1e-12) return std::nullopt;
  }
  if (hit < 0) return std::nullopt;
  return Clause{p.first, hit >> 1, p.second, hit & 1};
}

// Completion applied to every pair of range vectors, without the rank-1
// restriction of completion_closure; on basis-state inputs this is the
// quantum image of full 2-SAT resolution.
std::map<QubitPair, std::vector<Vec4>> saturate(const Instance& inst) {
  std::map<QubitPair, std::vector<Vec4>> spans;
  for (const auto& [p, c] : inst.constraints()) spans[p] = c.range;
  auto oriented = [&](int a, int b) {
    std::vector<Vec4> out;
    const auto it = spans.find(QubitPair(a, b));
    if (it == spans.end()) return out;
    for (const auto& v : it->second) out.push_back(a < b ? v : swap_factors(v));
    return out;
  };
  const int n = inst.num_qubits();
  for (bool grew = true; grew;) {
    grew = false;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          if (i == j || k == j || i == k) continue;
          for (const auto& phi : oriented(i, j))
            for (const auto& theta : oriented(j, k)) {
              Vec4 w = solver::compose_completion(phi, theta);
              if (w.norm() <= 1e-10) continue;
              if (i > k) w = swap_factors(w);
              auto& bucket = spans[QubitPair(i, k)];
              Vec4 r = w.normalized();
              for (const auto& b : bucket) r -= b.dot(r) * b;
              if (r.norm() <= 1e-8) continue;
              bucket.push_back(w.normalized());
              bucket = span_basis(bucket);
              grew = true;
            }
        }
  }
  return spans;
}

std::set<Clause> clauses_of(const std::map<QubitPair, std::vector<Vec4>>& spans, bool& all_basis) {
  std::set<Clause> out;
  all_basis = true;
  for (const auto& [p, vs] : spans)
    for (const auto& v : vs) {
      const auto c = as_clause(p, v);
      if (c) out.insert(*c);
      else all_basis = false;
    }
  return out;
}

bool same_up_to_phase(const Vec4& a, const Vec4& b, double tol) {
  if (b.norm() == 0.0) return a.norm() <= tol;
  if (a.norm() <= tol) return false;
  const Vec4 an = a.normalized();
  const Vec4 bn = b.normalized();
  const Complex phase = bn.dot(an);
  return (an - phase / std::abs(phase) * bn).norm() <= tol;
}

}  // namespace

SuiteReport closure(const Options& opt) {
  return timed("closure", opt, [&](SuiteReport& report) {
    // Hand-derived triples.
    const Vec4 e00(1, 0, 0, 0), e01(0, 1, 0, 0);
    const Vec4 singlet = Vec4(0, 1, -1, 0) / std::sqrt(2.0);
    struct Triple {
      const char* name;
      Vec4 phi, theta, expect;
    };
    const Triple triples[] = {{"|01>,|00> -> |00>", e01, e00, e00},
                              {"singlet,singlet -> singlet", singlet, singlet, singlet},
                              {"|00>,|00> -> 0", e00, e00, Vec4::Zero()}};
    std::vector<Outcome> hand;
    for (const auto& tr : triples) {
      const Vec4 w = solver::compose_completion(tr.phi, tr.theta);
      const bool ok = same_up_to_phase(w, tr.expect, 1e-12);
      hand.push_back({ok, 0.0, std::string(tr.name) + " gave norm " + fmt(w.norm()), {"hand-triple"}});
    }
    absorb(report, hand, "hand ");

    auto trial = [&](int t, std::uint64_t seed) -> Outcome {
      const int n = 4 + t % 5;
      std::mt19937_64 rng(seed ^ 0x5EEDULL);
      const int m = uniform(rng, 2, std::min(n * (n - 1) / 2, n + 2));
      const Instance inst = gen::random_classical_homogeneous(n, m, seed);

      std::vector<Clause> input;
      for (const auto& [p, c] : inst.constraints()) input.push_back(*as_clause(p, c.range.front()));
      const auto classical = resolution_closure(input);
      const std::set<Clause> classical_set(classical.begin(), classical.end());

      bool basis = true;
      const auto quantum = clauses_of(saturate(inst), basis);
      if (!basis) return {false, 0.0, "completion produced a non-basis vector", {}};
      if (quantum != classical_set)
        return {false, 0.0,
                "closure sizes differ: quantum " + std::to_string(quantum.size()) + ", classical " +
                    std::to_string(classical_set.size()),
                {}};

      // The rank-1 closure used by the solver must agree until it reports growth.
      const auto closed = solver::completion_closure(inst);
      std::map<QubitPair, std::vector<Vec4>> partial;
      for (const auto& [p, c] : closed.closed.constraints()) partial[p] = c.range;
      const auto partial_clauses = clauses_of(partial, basis);
      if (!basis) return {false, 0.0, "rank-1 closure produced a non-basis vector", {}};
      if (!std::includes(classical_set.begin(), classical_set.end(), partial_clauses.begin(), partial_clauses.end()))
        return {false, 0.0, "rank-1 closure derived a clause classical resolution does not", {}};
      if (closed.growth) {
        const auto c1 = as_clause(closed.growth->pair, closed.growth->existing);
        const auto c2 = as_clause(closed.growth->pair, closed.growth->added);
        if (!c1 || !c2 || !classical_set.contains(*c1) || !classical_set.contains(*c2))
          return {false, 0.0, "rank growth not reflected classically", {"growth"}};
        return {true, 0.0, {}, {"growth"}};
      }
      if (partial_clauses != classical_set) return {false, 0.0, "rank-1 closure stopped early", {"no-growth"}};
      return {true, 0.0, {}, {"no-growth"}};
    };
    absorb(report, run_trials(opt.trials, opt, trial));
  });
}

SuiteReport parthasarathy(const Options& opt) {
  return timed("parthasarathy", opt, [&](SuiteReport& report) {
    auto trial = [&](int, std::uint64_t seed) -> Outcome {
      std::mt19937_64 rng(seed);
      std::normal_distribution<double> g;
      Eigen::Matrix<Complex, 4, 2> m;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = Complex(g(rng), g(rng));
      const Mat4 q = Eigen::HouseholderQR<Eigen::Matrix<Complex, 4, 2>>(m).householderQ();
      const Vec4 b0 = q.col(0), b1 = q.col(1);
      const auto [a, b] = product_state_in_2d(b0, b1);
      const Vec4 v = kron(a, b);
      const double membership = (v - b0 * b0.dot(v) - b1 * b1.dot(v)).norm();
      const double conc = concurrence(v);
      const double worst = std::max(membership, conc);
      if (std::abs(v.norm() - 1.0) > 1e-12) return {false, worst, "product is not normalized", {}};
      if (membership >= 1e-10) return {false, worst, "membership residual " + fmt(membership), {}};
      if (conc >= 1e-10) return {false, worst, "concurrence " + fmt(conc), {}};
      return {true, worst, {}, {}};
    };
    absorb(report, run_trials(opt.trials, opt, trial));
  });
}

SuiteReport closure_stability(const Options& opt) {
  return timed("stability", opt, [&](SuiteReport& report) {
    auto trial = [&](int t, std::uint64_t seed) -> Outcome {
      const int n = 4 + t % 3;
      // Three-term superpositions give rank-3 pair supports generically; redraw otherwise.
      for (int attempt = 0; attempt < 16; ++attempt) {
        const PureState psi = gen::random_product_superposition(n, 3, gen::trial_seed(seed, attempt));
        const Instance h = build_h_psi(psi);
        if (!oracle::genuinely_entangled(psi) || h.max_rank() > 1 || h.size() != static_cast<std::size_t>(n * (n - 1) / 2))
          continue;
        const auto closed = solver::completion_closure(h);
        if (closed.growth) return {false, 0.0, "completion reported rank growth", {}};
        if (closed.added != 0) return {false, 0.0, std::to_string(closed.added) + " vectors added", {}};
        return {true, 0.0, {}, {}};
      }
      return {false, 0.0, "no state with rank-3 supports drawn", {}};
    };
    absorb(report, run_trials(opt.trials, opt, trial));
  });
}

SuiteReport merge_invariance(const Options& opt) {
  check_nmax(opt, 3, 10);
  return timed("merge", opt, [&](SuiteReport& report) {
    auto trial = [&](int t, std::uint64_t seed) -> Outcome {
      const int n = n_for(t, 3, opt.nmax);
      std::optional<Instance> inst;
      std::string tag;
      for (int attempt = 0; attempt < 32 && !inst; ++attempt) {
        const std::uint64_t s = gen::trial_seed(seed, attempt);
        Instance cand;
        if (t % 2 == 0) {
          std::mt19937_64 rng(s);
          const auto layout = (t / 2) % 2 == 0 ? gen::BlockLayout::AllSingles : gen::BlockLayout::OnePair;
          cand = planted(n, uniform(rng, 2, std::min(n * (n - 1) / 2, 2 * n)), layout, s, 2).instance;
          tag = "planted";
        } else {
          cand = build_h_psi(gen::random_product_superposition(n, 2, s));
          tag = "h-psi";
        }
        for (const auto& [p, c] : cand.constraints())
          if (c.rank() == 2) {
            inst = std::move(cand);
            break;
          }
      }
      if (!inst) return {false, 0.0, "no rank-2 constraint drawn", {}};
      QubitPair target;
      for (const auto& [p, c] : inst->constraints())
        if (c.rank() == 2) {
          target = p;
          break;
        }
      const auto merged = solver::merge_rank2(*inst, target);
      std::vector<std::string> tags{tag};

      // Lifted ranks stay within min(4, 2r) of what fed them.
      for (const auto& [p, c] : merged.reduced.constraints()) {
        if (!p.contains(merged.step.logical)) continue;
        const int other = p.other(merged.step.logical);
        const int orig = other >= target.second ? other + 1 : other;
        int feed = 0;
        for (int q : {target.first, target.second})
          if (const Constraint* fc = inst->find(QubitPair(q, orig))) feed += fc->rank();
        if (c.rank() > std::min(4, 2 * feed)) return {false, 0.0, "lifted rank above bound", tags};
      }

      const int before = oracle::ground_space(*inst).dimension;
      const int after = oracle::ground_space(merged.reduced).dimension;
      if (before != after)
        return {false, 0.0, "ground-space dimension " + std::to_string(before) + " -> " + std::to_string(after), tags};
      if (before == 0) {
        tags.push_back("frustrated");
        return {true, 0.0, {}, tags};
      }
      const auto reduced = solver::solve(merged.reduced, seed);
      if (reduced.status != solver::Status::Satisfiable) return {false, 0.0, "reduced instance reported unsat", tags};
      const solver::ReductionStep steps[] = {merged.step};
      const auto blocks = solver::unwind(reduced.blocks, steps);
      check_partition(blocks, n);
      if (!blocks_at_most(blocks, 2)) return {false, 0.0, "block larger than two qubits", tags};
      const double res = dense_residual(*inst, blocks);
      if (res >= kWitnessTol) return {false, res, "unwound residual " + fmt(res), tags};
      return {true, res, {}, tags};
    };
    absorb(report, run_trials(opt.trials, opt, trial));
  });
}

namespace {

// L applied blockwise to a witness of the transformed instance.
std::vector<Block> map_blocks(std::vector<Block> blocks, std::span<const Mat2> locals) {
  for (auto& b : blocks) {
    if (b.size() == 1) {
      b.state = (locals[b.qubits[0]] * Vec2(b.state)).normalized();
    } else {
      b.state = (kron(locals[b.qubits[0]], locals[b.qubits[1]]) * Vec4(b.state)).normalized();
      b.pair_support.reset();
    }
  }
  return blocks;
}

}  // namespace

SuiteReport slocc(const Options& opt) {
  check_nmax(opt, 3, 10);
  return timed("slocc", opt, [&](SuiteReport& report) {
    const Vec2 zero(1, 0);
    const Vec4 bell = Vec4(1, 0, 0, 1) / std::sqrt(2.0);
    VecX zero_bell = VecX::Zero(8), bell_zero = VecX::Zero(8);
    for (int k = 0; k < 4; ++k) {
      zero_bell[k] = bell[k];
      bell_zero[2 * k] = bell[k];
    }
    struct Fixture {
      std::string name;
      PureState state;
      oracle::Slocc3Class label;
    };
    const Vec2 plus = Vec2(1, 1) / std::sqrt(2.0);
    const Vec2 prod[] = {zero, plus, Vec2(0.6, Complex(0, 0.8))};
    const std::vector<Fixture> fixtures = {
        {"GHZ", gen::named_state("GHZ", 3), oracle::Slocc3Class::Ghz},
        {"W", gen::named_state("W", 3), oracle::Slocc3Class::W},
        {"|0>Bell", PureState(3, zero_bell), oracle::Slocc3Class::Biseparable},
        {"Bell|0>", PureState(3, bell_zero), oracle::Slocc3Class::Biseparable},
        {"product", PureState::product(prod), oracle::Slocc3Class::Biseparable},
    };
    for (const auto& f : fixtures) {
      std::vector<Outcome> fixed{{oracle::slocc3_classify(f.state).label == f.label, 0.0, "fixture mislabeled", {}}};
      absorb(report, fixed, f.name + " ");
      Options sub = opt;
      sub.seed = gen::trial_seed(opt.seed, std::hash<std::string>{}(f.name));
      auto trial = [&](int, std::uint64_t seed) -> Outcome {
        const auto locals = gen::random_locals(3, seed, 10.0);
        const auto got = oracle::slocc3_classify(gen::apply_locals(f.state, locals)).label;
        if (got != f.label) return {false, 0.0, std::string("label changed to ") + std::string(oracle::label_name(got)), {}};
        return {true, 0.0, {}, {}};
      };
      absorb(report, run_trials(opt.trials, sub, trial), f.name + " ");
    }

    // Planted instances keep their verdict, and transformed witnesses map back.
    Options inst_opt = opt;
    inst_opt.seed = gen::trial_seed(opt.seed, 0xC0FFEEULL);
    // T/2 planted instances, then T/4 random homogeneous ones for unsatisfiable coverage.
    const int planted_count = std::max(1, opt.trials / 2);
    auto verdict_trial = [&](int t, std::uint64_t seed) -> Outcome {
      const int n = n_for(t, 3, opt.nmax);
      std::mt19937_64 rng(seed);
      const bool use_planted = t < planted_count;
      Instance inst = use_planted
                          ? planted(n, uniform(rng, 1, std::min(n * (n - 1) / 2, 2 * n)),
                                    static_cast<gen::BlockLayout>(t % 3), seed, 1 + t % 3)
                                .instance
                          : gen::random_homogeneous(n, uniform(rng, n, std::min(n * (n - 1) / 2, 2 * n)), seed);
      const auto locals = gen::random_locals(n, seed ^ 0x1234ULL, 10.0);
      const Instance moved = slocc_transform(inst, locals);
      const auto r0 = solver::solve(inst, seed);
      const auto r1 = solver::solve(moved, seed);
      std::vector<std::string> tags{use_planted ? "planted" : "homogeneous"};
      if (r0.status != r1.status) return {false, 0.0, "status changed under SLOCC", tags};
      if (r1.status != solver::Status::Satisfiable) return {true, 0.0, {}, tags};
      const auto back = map_blocks(r1.blocks, locals);
      const double res = max_of(blockwise_residuals(inst, back));
      if (res >= 1e-8) return {false, res, "mapped witness residual " + fmt(res), tags};
      return {true, res, {}, tags};
    };
    absorb(report, run_trials(planted_count + opt.trials / 4, inst_opt, verdict_trial), "instance ");
  });
}

std::vector<std::string> suite_names() {
  return {"theorem1", "theorem2", "closure", "parthasarathy", "stability", "merge", "slocc"};
}

SuiteReport run(const std::string& suite, const Options& opt) {
  if (opt.trials < 1) throw std::invalid_argument("trials must be positive");
  if (suite == "theorem1") return theorem1(opt);
  if (suite == "theorem2") return theorem2(opt);
  if (suite == "closure") return closure(opt);
  if (suite == "parthasarathy") return parthasarathy(opt);
  if (suite == "stability") return closure_stability(opt);
  if (suite == "merge") return merge_invariance(opt);
  if (suite == "slocc") return slocc(opt);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace q2sat::campaign
