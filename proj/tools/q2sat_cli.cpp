// q2sat command-line driver: build, solve, verify, classify, campaign.
//
// Exit status: 0 on a completed command (including an Unsatisfiable
// verdict), 1 when a verification or campaign fails, 2 on usage or IO errors.

#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "q2sat/campaign.hpp"
#include "q2sat/generators.hpp"
#include "q2sat/io.hpp"
#include "q2sat/kernels.hpp"
#include "q2sat/oracle.hpp"
#include "q2sat/solver.hpp"

namespace {

using namespace q2sat;
using io::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string qubit_list(const std::vector<int>& qs) {
  std::string s = "(";
  for (std::size_t k = 0; k < qs.size(); ++k) s += (k ? "," : "") + std::to_string(qs[k] + 1);
  return s + ")";
}

std::string amp_list(const VecX& v) {
  std::string s = "[";
  char buf[64];
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%s%.6f%+.6fi", k ? ", " : "", v[k].real(), v[k].imag());
    s += buf;
  }
  return s + "]";
}

void emit_json(const std::string& path, json report) {
  if (!path.empty()) io::write_file(path, report.dump(2) + "\n");
}

json command_echo(int argc, char** argv) {
  json echo = json::array();
  for (int k = 0; k < argc; ++k) echo.push_back(argv[k]);
  return echo;
}

// ---- build ----------------------------------------------------------------

struct BuildArgs {
  std::string state_file, named, out;
  int n = 0;
};

int cmd_build(const BuildArgs& a) {
  std::optional<PureState> psi;
  if (!a.state_file.empty()) {
    psi = io::read_state(io::read_file(a.state_file));
  } else {
    if (a.n < 2) throw UsageError("--named requires --n >= 2");
    try {
      psi = gen::named_state(a.named, a.n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const Instance h = build_h_psi(*psi);
  std::cout << "H_psi on " << h.num_qubits() << " qubits, " << h.size() << " constraints\n";
  const int n = h.num_qubits();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Constraint* c = h.find(QubitPair(i, j));
      std::cout << "  pair (" << i + 1 << "," << j + 1 << ") rank " << (c ? c->rank() : 0) << "\n";
    }
  if (!a.out.empty()) {
    io::write_file(a.out, io::write_instance(h));
    std::cout << "wrote " << a.out << "\n";
  }
  return kOk;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string instance, json_out;
  std::uint64_t seed = 0;
  bool singles = false;
};

int cmd_solve(const SolveArgs& a, const json& echo) {
  const Instance inst = io::read_instance(io::read_file(a.instance));
  const int n = inst.num_qubits();
  json report{{"command", echo}, {"seed", a.seed}};

  if (a.singles) {
    if (!inst.flags.is_h_psi) throw UsageError("--singles-witness needs an instance built from a state (is_h_psi flag)");
    const auto singles = solver::product_of_singles_witness(inst, a.seed);
    std::vector<Block> blocks;
    for (int q = 0; q < n; ++q) blocks.push_back(single_block(q, singles[static_cast<std::size_t>(q)]));
    const auto res = blockwise_residuals(inst, blocks);
    const double worst = res.empty() ? 0.0 : *std::max_element(res.begin(), res.end());
    std::cout << "status: Satisfiable\nwitness: product of " << n << " single qubits\n";
    for (const auto& b : blocks) std::cout << "  qubit " << b.qubits[0] + 1 << ": " << amp_list(b.state) << "\n";
    std::cout << "max residual: " << sci(worst) << "\nseed: " << a.seed << "\n";
    report["status"] = "Satisfiable";
    report["witness"] = io::blocks_to_json(n, blocks);
    report["residuals"] = res;
    report["max_residual"] = worst;
    emit_json(a.json_out, report);
    return kOk;
  }

  const auto result = solver::solve(inst, a.seed);
  if (result.status == solver::Status::Unsatisfiable) {
    std::cout << "status: Unsatisfiable\nreason: " << result.reason << "\nseed: " << a.seed << "\n";
    report["status"] = "Unsatisfiable";
    report["reason"] = result.reason;
  } else {
    std::cout << "status: Satisfiable\nblocks:\n";
    for (const auto& b : result.blocks) std::cout << "  " << qubit_list(b.qubits) << " " << amp_list(b.state) << "\n";
    std::cout << "reduction steps: " << result.trace.size() << "\nmax residual: " << sci(result.max_residual)
              << "\nseed: " << a.seed << "\n";
    report["status"] = "Satisfiable";
    report["witness"] = io::blocks_to_json(n, result.blocks);
    report["residuals"] = result.residuals;
    report["max_residual"] = result.max_residual;
    json steps = json::array();
    for (const auto& s : result.trace) {
      json qs = json::array();
      for (int q : s.qubits) qs.push_back(q + 1);
      steps.push_back({{"kind", std::string(solver::step_name(s.kind))}, {"qubits", qs}});
    }
    report["trace"] = steps;
  }
  emit_json(a.json_out, report);
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string instance, state, blocks, json_out;
};

int cmd_verify(const VerifyArgs& a, const json& echo) {
  const Instance inst = io::read_instance(io::read_file(a.instance));
  std::vector<double> res;
  if (!a.state.empty()) {
    const PureState psi = io::read_state(io::read_file(a.state));
    if (psi.num_qubits() != inst.num_qubits())
      throw UsageError("state has " + std::to_string(psi.num_qubits()) + " qubits, instance has " +
                       std::to_string(inst.num_qubits()));
    res = oracle::energy_residuals(inst, psi);
  } else {
    int n = 0;
    const auto blocks = io::blocks_from_json(json::parse(io::read_file(a.blocks)), n);
    if (n != inst.num_qubits())
      throw UsageError("blocks cover " + std::to_string(n) + " qubits, instance has " + std::to_string(inst.num_qubits()));
    res = blockwise_residuals(inst, blocks);
  }
  const double total = std::accumulate(res.begin(), res.end(), 0.0);
  std::size_t k = 0;
  for (const auto& [pair, c] : inst.constraints())
    std::cout << "  pair (" << pair.first + 1 << "," << pair.second + 1 << ") residual " << sci(res[k++]) << "\n";
  const bool ok = total < 1e-9;
  std::cout << "total energy: " << sci(total) << "\n" << (ok ? "verified" : "NOT a ground state") << "\n";
  emit_json(a.json_out, {{"command", echo}, {"residuals", res}, {"total", total}, {"verified", ok}});
  return ok ? kOk : kFailed;
}

// ---- classify -------------------------------------------------------------

int cmd_classify(const std::string& file, const std::string& json_out, const json& echo) {
  const PureState psi = io::read_state(io::read_file(file));
  if (psi.num_qubits() != 3) throw UsageError("classify needs a 3-qubit state, got " + std::to_string(psi.num_qubits()));
  const bool genuine = oracle::genuinely_entangled(psi);
  const auto c = oracle::slocc3_classify(psi);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s, tangle %.6f", std::string(oracle::label_name(c.label)).c_str(), c.tangle);
  std::cout << "genuinely entangled: " << (genuine ? "yes" : "no") << "\n" << buf << "\n";
  emit_json(json_out, {{"command", echo},
                       {"genuinely_entangled", genuine},
                       {"label", std::string(oracle::label_name(c.label))},
                       {"tangle", c.tangle}});
  return kOk;
}

// ---- campaign -------------------------------------------------------------

int cmd_campaign(const std::string& suite, const campaign::Options& opt, const std::string& json_out,
                 const json& echo) {
  campaign::SuiteReport r;
  try {
    r = campaign::run(suite, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::printf("suite %s: %d/%d passed, worst residual %s, %.2f s, seed %llu\n", r.suite.c_str(), r.passed, r.trials,
              sci(r.worst_residual).c_str(), r.seconds, static_cast<unsigned long long>(r.seed));
  for (const auto& [k, v] : r.metrics) std::printf("  %s: %g\n", k.c_str(), v);
  for (const auto& f : r.failures) std::printf("  FAIL %s\n", f.c_str());
  emit_json(json_out, {{"command", echo},
                       {"suite", r.suite},
                       {"seed", r.seed},
                       {"trials", r.trials},
                       {"passed", r.passed},
                       {"worst_residual", r.worst_residual},
                       {"seconds", r.seconds},
                       {"metrics", r.metrics},
                       {"failures", r.failures}});
  return r.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum 2-SAT solver and verifier for two-body qubit Hamiltonians"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "q2sat 1.0");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build the H_psi instance of a state");
  auto* b_state = b->add_option("--state", build.state_file, "state JSON file");
  auto* b_named = b->add_option("--named", build.named, "W, GHZ, cluster-line, cluster-ring or Dicke(k)");
  b->add_option("--n", build.n, "qubit count for --named");
  b->add_option("--out", build.out, "instance JSON output");
  b_state->excludes(b_named);
  b_named->excludes(b_state);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Decide an instance and print a witness");
  s->add_option("--instance", solve.instance, "instance JSON file")->required();
  s->add_option("--seed", solve.seed, "seed for product extraction");
  s->add_flag("--singles-witness", solve.singles, "all-singles witness (instances built from a state)");
  s->add_option("--json-out", solve.json_out, "machine-readable report");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Per-constraint energies of a state or block witness");
  v->add_option("--instance", verify.instance, "instance JSON file")->required();
  auto* v_state = v->add_option("--state", verify.state, "state JSON file");
  auto* v_blocks = v->add_option("--blocks", verify.blocks, "blocks JSON file (as written by solve --json-out)");
  v->add_option("--json-out", verify.json_out, "machine-readable report");
  v_state->excludes(v_blocks);
  v_blocks->excludes(v_state);

  std::string classify_state, classify_json;
  auto* c = app.add_subcommand("classify", "SLOCC class of a 3-qubit state");
  c->add_option("--state", classify_state, "state JSON file")->required();
  c->add_option("--json-out", classify_json, "machine-readable report");

  std::string suite, campaign_json;
  campaign::Options copt;
  auto* k = app.add_subcommand("campaign", "Run a randomized property suite");
  k->add_option("--suite", suite, "theorem1, theorem2, closure, parthasarathy, stability, merge or slocc")->required();
  k->add_option("--trials", copt.trials, "number of trials")->check(CLI::PositiveNumber);
  k->add_option("--seed", copt.seed, "master seed");
  k->add_option("--nmax", copt.nmax, "largest qubit count")->check(CLI::Range(3, 12));
  k->add_option("--threads", copt.threads, "worker threads (0: all cores)");
  k->add_option("--json-out", campaign_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  const json echo = command_echo(argc, argv);
  try {
    if (*b) {
      if (build.state_file.empty() && build.named.empty()) throw UsageError("build needs --state or --named");
      return cmd_build(build);
    }
    if (*s) return cmd_solve(solve, echo);
    if (*v) {
      if (verify.state.empty() && verify.blocks.empty()) throw UsageError("verify needs --state or --blocks");
      return cmd_verify(verify, echo);
    }
    if (*c) return cmd_classify(classify_state, classify_json, echo);
    if (*k) return cmd_campaign(suite, copt, campaign_json, echo);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
