#include <stdexcept>

#include "doctest.h"
#include "q2sat/campaign.hpp"

using namespace q2sat::campaign;

TEST_CASE("resolution closure") {
  // q0=0 -> q1=0 (forbid 01), q1=0 -> q2=1 (forbid 00) gives forbid (q0, q2) = (0, 0).
  const auto c = resolution_closure({{0, 0, 1, 1}, {1, 0, 2, 0}});
  CHECK(c.size() == 3);
  CHECK(std::find(c.begin(), c.end(), Clause{0, 0, 2, 0}) != c.end());
  // Same value on the shared variable does not resolve.
  CHECK(resolution_closure({{0, 0, 1, 0}, {1, 0, 2, 0}}).size() == 2);
  // Orientation is normalized.
  CHECK(resolution_closure({{2, 1, 0, 0}}) == std::vector<Clause>{{0, 0, 2, 1}});
}

TEST_CASE("suites are reproducible and independent of thread count") {
  Options a;
  a.trials = 12;
  a.seed = 5;
  a.threads = 1;
  Options b = a;
  b.threads = 3;
  for (const auto& name : suite_names()) {
    const auto ra = run(name, a);
    const auto rb = run(name, b);
    CHECK_MESSAGE(ra.ok(), name);
    CHECK(ra.trials == rb.trials);
    CHECK(ra.passed == rb.passed);
    CHECK(ra.worst_residual == rb.worst_residual);
    CHECK(ra.metrics == rb.metrics);
  }
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run("nope", Options{}), std::invalid_argument); }

TEST_CASE("merge suite on a seed whose unwinding meets entangled three-qubit blocks") {
  Options opt;
  opt.trials = 50;
  opt.seed = 1;
  opt.nmax = 6;
  const auto r = merge_invariance(opt);
  CHECK(r.ok());
  for (const auto& f : r.failures) MESSAGE(f);
}
