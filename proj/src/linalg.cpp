#include "q2sat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "q2sat/kernels.hpp"

namespace q2sat {

PureState::PureState(int n, VecX amps) : n_(n), amps_(std::move(amps)) {
  if (n < 0 || n > 30 || amps_.size() != (Eigen::Index{1} << n))
    throw std::invalid_argument("PureState: expected 2^" + std::to_string(n) + " amplitudes, got " +
                                std::to_string(amps_.size()));
  const double norm = amps_.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw std::invalid_argument("PureState: zero or non-finite vector");
  amps_ /= norm;
}

PureState PureState::basis(int n, std::size_t index) {
  VecX v = VecX::Zero(Eigen::Index{1} << n);
  if (index >= static_cast<std::size_t>(v.size())) throw IndexError("PureState::basis: index out of range");
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return PureState(n, std::move(v));
}

PureState PureState::product(std::span<const Vec2> factors) {
  VecX v = VecX::Ones(1);
  for (const Vec2& f : factors) {
    VecX next(v.size() * 2);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      next[2 * k] = v[k] * f[0];
      next[2 * k + 1] = v[k] * f[1];
    }
    v = std::move(next);
  }
  return PureState(static_cast<int>(factors.size()), std::move(v));
}

Mat4 partial_trace_pair(const PureState& state, int i, int j) {
  const int n = state.num_qubits();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw IndexError("partial_trace_pair: invalid pair (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") for " + std::to_string(n) + " qubits");
  kernels::PairOp rho{};
  const auto& amps = state.amplitudes();
  kernels::active().pair_density({amps.data(), static_cast<std::size_t>(amps.size())}, n, i, j, rho);
  Mat4 out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out(a, b) = rho[a * 4 + b];
  return out;
}

SupportSplit split_support(const HermitianOp& rho, double tol) {
  Eigen::SelfAdjointEigenSolver<HermitianOp> eig(rho);
  const auto& values = eig.eigenvalues();
  const double largest = values.size() ? values.maxCoeff() : 0.0;
  SupportSplit out;
  const double cut = tol * std::max(largest, 0.0);
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values[k] < -cut && largest > 0.0)
      throw NotPsdError("split_support: eigenvalue " + std::to_string(values[k]) + " below -tol * max");
    if (largest > 0.0 && values[k] > cut)
      out.support.emplace_back(eig.eigenvectors().col(k));
    else
      out.complement.emplace_back(eig.eigenvectors().col(k));
  }
  return out;
}

SupportProjector support_projector(const HermitianOp& rho, double tol) {
  const auto split = split_support(rho, tol);
  SupportProjector out;
  out.projector = HermitianOp::Zero(rho.rows(), rho.cols());
  for (const auto& v : split.support) out.projector += v * v.adjoint();
  out.rank = static_cast<int>(std::lround(out.projector.trace().real()));
  return out;
}

std::vector<VecX> zero_eigenspace(const HermitianOp& h, double tol) {
  Eigen::SelfAdjointEigenSolver<HermitianOp> eig(h);
  std::vector<VecX> basis;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k)
    if (eig.eigenvalues()[k] <= tol) basis.emplace_back(eig.eigenvectors().col(k));
  return basis;
}

namespace {

// Rotates the global phase so the largest component (first on ties) is real
// and positive.
Vec2 fix_phase(Vec2 v) {
  v.normalize();
  const int k = std::abs(v[1]) > std::abs(v[0]) * (1.0 + 1e-12) ? 1 : 0;
  return v * (std::abs(v[k]) / v[k]);
}

}  // namespace

std::pair<Vec2, Vec2> product_state_in_2d(const Vec4& b0, const Vec4& b1) {
  const Mat2 m0 = as_matrix(b0);
  const Mat2 m1 = as_matrix(b1);
  // det(x m0 + y m1) = qa x^2 + qb x y + qc y^2
  const Complex qa = m0.determinant();
  const Complex qc = m1.determinant();
  const Complex qb = m0(0, 0) * m1(1, 1) + m1(0, 0) * m0(1, 1) - m0(0, 1) * m1(1, 0) - m1(0, 1) * m0(1, 0);
  const double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc)});

  Complex x = 1.0;
  Complex y = 0.0;
  if (scale > 1e-14 && std::abs(qa) > 1e-13 * scale) {
    // y = 1, qa x^2 + qb x + qc = 0; take the numerically stable root c/q.
    Complex sq = std::sqrt(qb * qb - 4.0 * qa * qc);
    if ((std::conj(qb) * sq).real() < 0.0) sq = -sq;
    const Complex q = -0.5 * (qb + sq);
    x = std::abs(q) > 0.0 ? qc / q : Complex{0.0};
    y = 1.0;
  }
  const Mat2 m = x * m0 + y * m1;
  Eigen::JacobiSVD<Mat2> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec2 a = svd.matrixU().col(0);
  const Vec2 b = svd.matrixV().col(0).conjugate();
  return {fix_phase(a), fix_phase(b)};
}

double concurrence(const Vec4& psi) {
  const double norm2 = psi.squaredNorm();
  if (norm2 == 0.0) return 0.0;
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]) / norm2;
}

std::vector<Vec4> span_basis(std::span<const Vec4> vectors, double tol) {
  std::vector<Vec4> out;
  if (vectors.empty()) return out;
  MatX stacked(4, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) stacked.col(static_cast<Eigen::Index>(k)) = vectors[k];
  Eigen::JacobiSVD<MatX> svd(stacked, Eigen::ComputeThinU);
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()[k] > tol) out.emplace_back(svd.matrixU().col(k));
  return out;
}

std::vector<Vec4> complement_basis(std::span<const Vec4> vectors) {
  const auto range = span_basis(vectors);
  const Mat4 q = Mat4::Identity() - projector_from(range);
  std::vector<Vec4> out;
  while (out.size() + range.size() < 4) {
    int best = -1;
    double best_norm = 1e-9;
    Vec4 best_vec;
    for (int c = 0; c < 4; ++c) {
      Vec4 r = q.col(c);
      for (const auto& b : out) r -= b * b.dot(r);
      const double norm = r.norm();
      if (norm > best_norm * (1.0 + 1e-9)) {
        best = c;
        best_norm = norm;
        best_vec = r;
      }
    }
    if (best < 0) break;
    out.push_back(best_vec / best_norm);
  }
  return out;
}

Mat4 projector_from(std::span<const Vec4> range) {
  Mat4 p = Mat4::Zero();
  for (const auto& v : range) p += v * v.adjoint();
  return p;
}

}  // namespace q2sat
