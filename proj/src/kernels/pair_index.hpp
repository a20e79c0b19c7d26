#pragma once

#include <array>
#include <cstddef>

namespace q2sat::kernels::detail {

// Spreads a rest index over the basis index, leaving zeros at bit positions
// lo < hi.
inline std::size_t insert_zero_bits(std::size_t r, int lo, int hi) {
  const std::size_t low_mask = (std::size_t{1} << lo) - 1;
  r = ((r & ~low_mask) << 1) | (r & low_mask);
  const std::size_t high_mask = (std::size_t{1} << hi) - 1;
  return ((r & ~high_mask) << 1) | (r & high_mask);
}

struct PairLayout {
  int lo;
  int hi;
  std::size_t bit_i;
  std::size_t bit_j;
  std::size_t rest_count;

  PairLayout(int n, int i, int j) {
    const int pi = n - 1 - i;
    const int pj = n - 1 - j;
    lo = pi < pj ? pi : pj;
    hi = pi < pj ? pj : pi;
    bit_i = std::size_t{1} << pi;
    bit_j = std::size_t{1} << pj;
    rest_count = std::size_t{1} << (n - 2);
  }

  // Basis indices of |00>,|01>,|10>,|11> (qubit i left) for rest index r.
  std::array<std::size_t, 4> indices(std::size_t r) const {
    const std::size_t base = insert_zero_bits(r, lo, hi);
    return {base, base | bit_j, base | bit_i, base | bit_i | bit_j};
  }
};

}  // namespace q2sat::kernels::detail
