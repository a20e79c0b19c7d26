// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "pair_index.hpp"
#include "q2sat/kernels.hpp"

namespace q2sat::kernels::avx2 {
namespace {

// Two consecutive complex doubles, [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline cplx hsum2(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

}  // namespace

void apply_pair(std::span<const cplx> in, std::span<cplx> out, int n, int i, int j, const PairOp& op) {
  const detail::PairLayout layout(n, i, j);
  // Vectorized over pairs of rest indices, which are adjacent in memory only
  // when neither qubit sits on bit 0.
  if (layout.lo == 0 || layout.rest_count < 2) {
    scalar::apply_pair(in, out, n, i, j, op);
    return;
  }
  __m256d op_re[16];
  __m256d op_im[16];
  for (int k = 0; k < 16; ++k) {
    op_re[k] = _mm256_set1_pd(op[k].real());
    op_im[k] = _mm256_set1_pd(op[k].imag());
  }
  for (std::size_t r = 0; r < layout.rest_count; r += 2) {
    const auto idx = layout.indices(r);
    __m256d x[4];
    __m256d xs[4];
    for (int c = 0; c < 4; ++c) {
      x[c] = load2(in.data() + idx[c]);
      xs[c] = _mm256_permute_pd(x[c], 0x5);
    }
    for (int row = 0; row < 4; ++row) {
      __m256d t = _mm256_mul_pd(x[0], op_re[row * 4]);
      __m256d s = _mm256_mul_pd(xs[0], op_im[row * 4]);
      for (int c = 1; c < 4; ++c) {
        t = _mm256_fmadd_pd(x[c], op_re[row * 4 + c], t);
        s = _mm256_fmadd_pd(xs[c], op_im[row * 4 + c], s);
      }
      // re = sum(xr*or - xi*oi), im = sum(xi*or + xr*oi)
      store2(out.data() + idx[row], _mm256_addsub_pd(t, s));
    }
  }
}

void pair_density(std::span<const cplx> psi, int n, int i, int j, PairOp& rho) {
  const detail::PairLayout layout(n, i, j);
  if (layout.lo == 0 || layout.rest_count < 2) {
    scalar::pair_density(psi, n, i, j, rho);
    return;
  }
  // Upper triangle only: 10 accumulator pairs.
  __m256d t[10];
  __m256d s[10];
  for (int k = 0; k < 10; ++k) t[k] = s[k] = _mm256_setzero_pd();
  for (std::size_t r = 0; r < layout.rest_count; r += 2) {
    const auto idx = layout.indices(r);
    __m256d x[4];
    __m256d xs[4];
    __m256d yr[4];
    __m256d yi[4];
    for (int c = 0; c < 4; ++c) {
      x[c] = load2(psi.data() + idx[c]);
      xs[c] = _mm256_permute_pd(x[c], 0x5);
      yr[c] = _mm256_movedup_pd(x[c]);
      yi[c] = _mm256_permute_pd(x[c], 0xF);
    }
    int k = 0;
    for (int a = 0; a < 4; ++a) {
      for (int b = a; b < 4; ++b, ++k) {
        t[k] = _mm256_fmadd_pd(x[a], yr[b], t[k]);
        s[k] = _mm256_fmadd_pd(xs[a], yi[b], s[k]);
      }
    }
  }
  const __m256d ones = _mm256_set1_pd(1.0);
  int k = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b, ++k) {
      // x * conj(y): re = xr*yr + xi*yi, im = xi*yr - xr*yi
      const cplx v = hsum2(_mm256_fmsubadd_pd(ones, t[k], s[k]));
      rho[a * 4 + b] = v;
      rho[b * 4 + a] = std::conj(v);
    }
  }
  for (int a = 0; a < 4; ++a) rho[a * 4 + a] = {rho[a * 4 + a].real(), 0.0};
}

}  // namespace q2sat::kernels::avx2
