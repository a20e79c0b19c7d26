#pragma once

// State-vector kernels over a pair of qubits. Every kernel has a portable
// scalar reference implementation and, on x86-64, an AVX2/FMA variant. The
// variant is picked once at runtime from the CPU feature flags.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace q2sat::kernels {

using cplx = std::complex<double>;

// Row-major 4x4 operator on the pair (i, j), basis |00>,|01>,|10>,|11> with
// qubit i as the left factor.
using PairOp = std::array<cplx, 16>;

// out = (op acting on qubits i, j) * in, identity on the other qubits.
// in and out have 2^n entries and must not alias.
using ApplyPairFn = void (*)(std::span<const cplx> in, std::span<cplx> out, int n, int i, int j,
                             const PairOp& op);

// rho[ab][a'b'] = sum_rest psi[ab,rest] conj(psi[a'b',rest]); row-major 4x4.
using PairDensityFn = void (*)(std::span<const cplx> psi, int n, int i, int j, PairOp& rho);

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  Backend backend;
  ApplyPairFn apply_pair;
  PairDensityFn pair_density;
};

namespace scalar {
void apply_pair(std::span<const cplx> in, std::span<cplx> out, int n, int i, int j, const PairOp& op);
void pair_density(std::span<const cplx> psi, int n, int i, int j, PairOp& rho);
}  // namespace scalar

#if defined(Q2SAT_HAVE_AVX2)
namespace avx2 {
void apply_pair(std::span<const cplx> in, std::span<cplx> out, int n, int i, int j, const PairOp& op);
void pair_density(std::span<const cplx> psi, int n, int i, int j, PairOp& rho);
}  // namespace avx2
#endif

bool backend_available(Backend b);
const KernelTable& table(Backend b);

// Best backend the running CPU supports.
const KernelTable& active();

std::string_view backend_name(Backend b);

}  // namespace q2sat::kernels
