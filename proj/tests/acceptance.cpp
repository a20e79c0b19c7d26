// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every criterion also carries a wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "q2sat/campaign.hpp"
#include "q2sat/oracle.hpp"
#include "q2sat/solver.hpp"

using namespace q2sat;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Verdict()> run;
};

VecX basis(int n, std::size_t k) {
  VecX v = VecX::Zero(Eigen::Index{1} << n);
  v[static_cast<Eigen::Index>(k)] = 1.0;
  return v;
}

double max_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string summary(const campaign::SuiteReport& r) {
  std::string s = std::to_string(r.passed) + "/" + std::to_string(r.trials) + " trials, worst residual " +
                  fmt("%.2e", r.worst_residual);
  if (!r.failures.empty()) s += "; first failure: " + r.failures.front();
  return s;
}

Verdict w_golden() {
  VecX w = basis(3, 1) + basis(3, 2) + basis(3, 4);
  const Instance h = build_h_psi(PureState(3, w));
  const auto gs = oracle::ground_space(h);
  const double member = oracle::membership_residual(gs.basis, basis(3, 0));
  const auto r = solver::solve(h);
  const bool singles = r.status == solver::Status::Satisfiable && blocks_at_most(r.blocks, 1);
  const double res = singles ? max_of(oracle::energy_residuals(h, assemble_state(r.blocks, 3))) : 1.0;
  const bool ok = gs.dimension == 2 && member < 1e-9 && singles && res < 1e-9;
  return {ok, "dimension " + std::to_string(gs.dimension) + ", |000> residual " + fmt("%.1e", member) +
                  ", all-singles " + (singles ? "yes" : "no") + ", witness residual " + fmt("%.1e", res)};
}

Verdict ghz_golden() {
  const Instance h = build_h_psi(PureState(3, basis(3, 0) + basis(3, 7)));
  const auto gs = oracle::ground_space(h);
  const double r0 = oracle::membership_residual(gs.basis, basis(3, 0));
  const double r7 = oracle::membership_residual(gs.basis, basis(3, 7));
  return {gs.dimension == 2 && r0 < 1e-9 && r7 < 1e-9,
          "dimension " + std::to_string(gs.dimension) + ", residuals " + fmt("%.1e", r0) + " / " + fmt("%.1e", r7)};
}

Verdict theorem1() {
  campaign::Options opt;
  opt.trials = 200;  // round robin over n = 3..6: 50 per n
  opt.nmax = 6;
  opt.seed = 1;
  const auto r = campaign::theorem1(opt);
  return {r.ok() && r.trials >= 200, summary(r)};
}

Verdict theorem2() {
  campaign::Options opt;
  opt.trials = 240;
  opt.nmax = 10;
  opt.seed = 2;
  const auto r = campaign::theorem2(opt);
  const auto get = [&](const char* k) { return r.metrics.contains(k) ? r.metrics.at(k) : 0.0; };
  const bool mixed = get("planted") > 0 && get("homogeneous") > 0 && get("sat") > 0 && get("unsat") > 0;
  return {r.ok() && r.trials >= 200 && mixed,
          summary(r) + ", sat " + fmt("%.0f", get("sat")) + ", unsat " + fmt("%.0f", get("unsat"))};
}

Verdict completion() {
  campaign::Options opt;
  opt.trials = 200;
  opt.seed = 3;
  const auto r = campaign::closure(opt);
  return {r.ok() && r.trials >= 203, summary(r) + " (3 hand triples included)"};
}

Verdict stability() {
  campaign::Options opt;
  opt.trials = 50;
  opt.seed = 4;
  const auto r = campaign::closure_stability(opt);
  return {r.ok() && r.trials >= 50, summary(r)};
}

Verdict parthasarathy() {
  campaign::Options opt;
  opt.trials = 1000;
  opt.seed = 5;
  const auto r = campaign::parthasarathy(opt);
  return {r.ok() && r.trials == 1000 && r.worst_residual < 1e-10, summary(r)};
}

Verdict merge() {
  campaign::Options opt;
  opt.trials = 60;
  opt.nmax = 6;
  opt.seed = 6;
  const auto r = campaign::merge_invariance(opt);
  return {r.ok() && r.trials >= 50, summary(r)};
}

Verdict slocc() {
  campaign::Options opt;
  opt.trials = 100;
  opt.nmax = 6;
  opt.seed = 7;
  const auto r = campaign::slocc(opt);
  const double planted = r.metrics.contains("planted") ? r.metrics.at("planted") : 0.0;
  return {r.ok() && planted >= 50, summary(r) + ", planted " + fmt("%.0f", planted)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "W golden test", 1.0, w_golden},
      {2, "GHZ golden test", 1.0, ghz_golden},
      {3, "Theorem 1 property suite", 120.0, theorem1},
      {4, "Theorem 2 property suite", 300.0, theorem2},
      {5, "completion-rule correctness", 60.0, completion},
      {6, "H_psi closure stability", 60.0, stability},
      {7, "Parthasarathy suite", 10.0, parthasarathy},
      {8, "merge invariance", 60.0, merge},
      {9, "SLOCC suite", 60.0, slocc},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = v.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] criterion %d (%s): %s; %.2f s of %.0f s budget%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str(), secs, c.budget_s, in_time ? "" : " (over budget)");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
