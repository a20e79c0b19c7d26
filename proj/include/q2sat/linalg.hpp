#pragma once

#include <span>
#include <utility>
#include <vector>

#include "q2sat/types.hpp"

namespace q2sat {

/// Normalized amplitude vector over n qubits (qubit 0 most significant).
class PureState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Normalizes `amps`; throws std::invalid_argument on a length that is not
  /// 2^n or on a zero vector.
  PureState(int n, VecX amps);

  static PureState basis(int n, std::size_t index);
  /// Tensor product of single-qubit states, factor k on qubit k.
  static PureState product(std::span<const Vec2> factors);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const VecX& amplitudes() const { return amps_; }
  Complex operator[](std::size_t k) const { return amps_[static_cast<Eigen::Index>(k)]; }

 private:
  int n_;
  VecX amps_;
};

/// 4x4 reduced density matrix of qubits (i, j), qubit i as the left factor.
Mat4 partial_trace_pair(const PureState& state, int i, int j);

struct SupportSplit {
  std::vector<VecX> support;     // eigenvalue > tol * max
  std::vector<VecX> complement;  // the rest, orthonormal, spanning the kernel
};

/// Splits an (approximately) PSD matrix into support and kernel eigenvectors
/// using a threshold relative to the largest eigenvalue. Throws NotPsdError
/// when an eigenvalue is below -tol * max.
SupportSplit split_support(const HermitianOp& rho, double tol = 1e-8);

struct SupportProjector {
  HermitianOp projector;
  int rank = 0;
};

SupportProjector support_projector(const HermitianOp& rho, double tol = 1e-8);

/// Orthonormal basis of the eigenspace of H with eigenvalue <= tol.
std::vector<VecX> zero_eigenspace(const HermitianOp& h, double tol);

/// A product a (x) b inside span{b0, b1}. Always exists over C: the 2x2
/// reshape of x*b0 + y*b1 has a determinant quadratic in (x : y), and any
/// projective root makes it rank one.
std::pair<Vec2, Vec2> product_state_in_2d(const Vec4& b0, const Vec4& b1);

/// Pure-state concurrence |<psi| sigma_y (x) sigma_y |psi*>| = 2|psi00 psi11 - psi01 psi10|.
double concurrence(const Vec4& psi);

/// Orthonormal basis (left singular vectors above `tol`) of the span of `vectors`.
std::vector<Vec4> span_basis(std::span<const Vec4> vectors, double tol = 1e-9);

/// Orthonormal basis of the orthogonal complement of span(vectors) in C^4.
/// Columns of the complement projector are taken greedily by residual norm,
/// lowest index first on ties, so coordinate subspaces come back as basis
/// vectors.
std::vector<Vec4> complement_basis(std::span<const Vec4> vectors);

/// Swaps the tensor factors of a two-qubit vector: v'[ba] = v[ab].
inline Vec4 swap_factors(const Vec4& v) { return Vec4(v[0], v[2], v[1], v[3]); }

/// Reshapes a two-qubit vector into M[a][b] = v[2a + b].
inline Mat2 as_matrix(const Vec4& v) {
  Mat2 m;
  m << v[0], v[1], v[2], v[3];
  return m;
}

inline Vec4 kron(const Vec2& a, const Vec2& b) { return Vec4(a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]); }

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

/// Projector sum_k v_k v_k^dagger.
Mat4 projector_from(std::span<const Vec4> range);

/// Fidelity |<a|b>| of two normalized vectors.
inline double overlap(const Vec2& a, const Vec2& b) { return std::abs(a.dot(b)); }

}  // namespace q2sat
