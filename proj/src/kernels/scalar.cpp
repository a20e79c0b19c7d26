#include "pair_index.hpp"
#include "q2sat/kernels.hpp"

namespace q2sat::kernels::scalar {

void apply_pair(std::span<const cplx> in, std::span<cplx> out, int n, int i, int j, const PairOp& op) {
  const detail::PairLayout layout(n, i, j);
  for (std::size_t r = 0; r < layout.rest_count; ++r) {
    const auto idx = layout.indices(r);
    const cplx x[4] = {in[idx[0]], in[idx[1]], in[idx[2]], in[idx[3]]};
    for (int row = 0; row < 4; ++row) {
      cplx acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += op[row * 4 + c] * x[c];
      out[idx[row]] = acc;
    }
  }
}

void pair_density(std::span<const cplx> psi, int n, int i, int j, PairOp& rho) {
  const detail::PairLayout layout(n, i, j);
  rho.fill(cplx{0.0});
  for (std::size_t r = 0; r < layout.rest_count; ++r) {
    const auto idx = layout.indices(r);
    for (int a = 0; a < 4; ++a) {
      const cplx xa = psi[idx[a]];
      for (int b = a; b < 4; ++b) rho[a * 4 + b] += xa * std::conj(psi[idx[b]]);
    }
  }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < a; ++b) rho[a * 4 + b] = std::conj(rho[b * 4 + a]);
}

}  // namespace q2sat::kernels::scalar
