#include <random>
#include <vector>

#include "doctest.h"
#include "q2sat/kernels.hpp"

using namespace q2sat::kernels;

namespace {

std::vector<cplx> random_vector(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(dim);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

PairOp random_op(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  PairOp op;
  for (auto& x : op) x = {g(rng), g(rng)};
  return op;
}

double max_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

// Direct definition: out[x] = sum_y <x|op (x) I|y> in[y], no index tricks.
std::vector<cplx> naive_apply(const std::vector<cplx>& in, int n, int i, int j, const PairOp& op) {
  const std::size_t dim = in.size();
  const std::size_t bi = std::size_t{1} << (n - 1 - i);
  const std::size_t bj = std::size_t{1} << (n - 1 - j);
  std::vector<cplx> out(dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      if ((x & ~(bi | bj)) != (y & ~(bi | bj))) continue;
      const int r = ((x & bi) ? 2 : 0) | ((x & bj) ? 1 : 0);
      const int c = ((y & bi) ? 2 : 0) | ((y & bj) ? 1 : 0);
      out[x] += op[r * 4 + c] * in[y];
    }
  return out;
}

}  // namespace

TEST_CASE("scalar apply_pair matches the direct definition") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto in = random_vector(rng, std::size_t{1} << n);
        const auto op = random_op(rng);
        std::vector<cplx> out(in.size());
        scalar::apply_pair(in, out, n, i, j, op);
        CHECK(max_diff(out, naive_apply(in, n, i, j, op)) < 1e-12);
      }
}

TEST_CASE("scalar pair_density is Hermitian with unit trace") {
  std::mt19937_64 rng(12);
  auto psi = random_vector(rng, 32);
  double norm = 0.0;
  for (auto x : psi) norm += std::norm(x);
  for (auto& x : psi) x /= std::sqrt(norm);
  PairOp rho;
  scalar::pair_density(psi, 5, 3, 1, rho);
  cplx tr = 0.0;
  for (int a = 0; a < 4; ++a) {
    tr += rho[a * 4 + a];
    for (int b = 0; b < 4; ++b) CHECK(std::abs(rho[a * 4 + b] - std::conj(rho[b * 4 + a])) < 1e-14);
  }
  CHECK(std::abs(tr - 1.0) < 1e-12);
}

TEST_CASE("dispatch exposes a working backend") {
  CHECK(backend_available(Backend::Scalar));
  const auto& t = active();
  CHECK(backend_available(t.backend));
  CHECK(t.apply_pair != nullptr);
  CHECK(t.pair_density != nullptr);
  CHECK(backend_name(Backend::Scalar) == "scalar");
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  if (!backend_available(Backend::Avx2)) {
    MESSAGE("AVX2 not available on this CPU; equivalence skipped");
    return;
  }
  const auto& simd = table(Backend::Avx2);
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 9; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto in = random_vector(rng, std::size_t{1} << n);
        const auto op = random_op(rng);
        std::vector<cplx> a(in.size()), b(in.size());
        scalar::apply_pair(in, a, n, i, j, op);
        simd.apply_pair(in, b, n, i, j, op);
        CHECK_MESSAGE(max_diff(a, b) < 1e-12, "apply_pair n=" << n << " i=" << i << " j=" << j);

        PairOp ra, rb;
        scalar::pair_density(in, n, i, j, ra);
        simd.pair_density(in, n, i, j, rb);
        CHECK_MESSAGE(max_diff(ra, rb) < 1e-12, "pair_density n=" << n << " i=" << i << " j=" << j);
      }
}
