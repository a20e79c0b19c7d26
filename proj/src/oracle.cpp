#include "q2sat/oracle.hpp"

#include <cmath>
#include <string>

#include "q2sat/kernels.hpp"

namespace q2sat::oracle {
namespace {

void check_cap(const Instance& inst, int cap) {
  if (inst.num_qubits() > cap)
    throw CapacityError("oracle: " + std::to_string(inst.num_qubits()) + " qubits exceeds cap " + std::to_string(cap));
}

}  // namespace

HermitianOp dense_hamiltonian(const Instance& inst, int cap) {
  check_cap(inst, cap);
  const int n = inst.num_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  HermitianOp h = HermitianOp::Zero(dim, dim);
  if (n < 2) return h;
  for (const auto& [pair, c] : inst.constraints()) {
    const Mat4 p = c.projector();
    const auto bi = static_cast<Eigen::Index>(bit_of(n, pair.first));
    const auto bj = static_cast<Eigen::Index>(bit_of(n, pair.second));
    for (Eigen::Index x = 0; x < dim; ++x) {
      if (x & (bi | bj)) continue;
      const Eigen::Index idx[4] = {x, x | bj, x | bi, x | bi | bj};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) h(idx[a], idx[b]) += p(a, b);
    }
  }
  return h;
}

GroundSpaceReport ground_space(const Instance& inst, double tol, int cap) {
  const HermitianOp h = dense_hamiltonian(inst, cap);
  Eigen::SelfAdjointEigenSolver<HermitianOp> eig(h);
  GroundSpaceReport report;
  report.min_eigenvalue = eig.eigenvalues()[0];
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k)
    if (eig.eigenvalues()[k] <= tol) report.basis.emplace_back(eig.eigenvectors().col(k));
  report.dimension = static_cast<int>(report.basis.size());
  report.is_frustration_free = report.min_eigenvalue <= tol;
  return report;
}

double ground_energy(const Instance& inst, int cap) {
  const HermitianOp h = dense_hamiltonian(inst, cap);
  Eigen::SelfAdjointEigenSolver<HermitianOp> eig(h, Eigen::EigenvaluesOnly);
  return eig.eigenvalues()[0];
}

double membership_residual(const std::vector<VecX>& basis, const VecX& v) {
  VecX r = v.normalized();
  for (const auto& b : basis) r -= b * b.dot(r);
  return r.squaredNorm();
}

std::vector<double> energy_residuals(const Instance& inst, const PureState& state) {
  if (state.num_qubits() != inst.num_qubits()) throw std::invalid_argument("energy_residuals: dimension mismatch");
  const int n = inst.num_qubits();
  const auto& psi = state.amplitudes();
  const std::span<const kernels::cplx> in{psi.data(), static_cast<std::size_t>(psi.size())};
  std::vector<kernels::cplx> out(static_cast<std::size_t>(psi.size()));
  const auto& k = kernels::active();
  std::vector<double> residuals;
  for (const auto& [pair, c] : inst.constraints()) {
    const Mat4 p = c.projector();
    kernels::PairOp op;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) op[a * 4 + b] = p(a, b);
    k.apply_pair(in, out, n, pair.first, pair.second, op);
    double r = 0.0;
    for (const auto& z : out) r += std::norm(z);
    residuals.push_back(r);
  }
  return residuals;
}

bool genuinely_entangled(const PureState& state, double tol) {
  const int n = state.num_qubits();
  if (n < 2) return false;
  const auto& psi = state.amplitudes();
  // Subsets A containing qubit 0, excluding the full set.
  const std::size_t splits = (std::size_t{1} << (n - 1)) - 1;
  for (std::size_t rest_mask = 0; rest_mask < splits; ++rest_mask) {
    std::vector<int> side_a{0};
    std::vector<int> side_b;
    for (int q = 1; q < n; ++q) ((rest_mask >> (q - 1)) & 1 ? side_a : side_b).push_back(q);
    const auto rows = Eigen::Index{1} << side_a.size();
    const auto cols = Eigen::Index{1} << side_b.size();
    MatX m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        std::size_t x = 0;
        for (std::size_t p = 0; p < side_a.size(); ++p)
          if ((r >> (side_a.size() - 1 - p)) & 1) x |= bit_of(n, side_a[p]);
        for (std::size_t p = 0; p < side_b.size(); ++p)
          if ((c >> (side_b.size() - 1 - p)) & 1) x |= bit_of(n, side_b[p]);
        m(r, c) = psi[static_cast<Eigen::Index>(x)];
      }
    }
    Eigen::JacobiSVD<MatX> svd(m);
    const auto& s = svd.singularValues();
    // Eigenvalues of the reduced density matrix are squared singular values.
    if (s.size() < 2 || s[1] * s[1] <= tol) return false;
  }
  return true;
}

double three_tangle(const PureState& state) {
  if (state.num_qubits() != 3) throw std::invalid_argument("three_tangle: expected 3 qubits");
  const auto& a = state.amplitudes();
  auto t = [&](int i, int j, int k) { return a[4 * i + 2 * j + k]; };
  const Complex d1 = t(0, 0, 0) * t(0, 0, 0) * t(1, 1, 1) * t(1, 1, 1) + t(0, 0, 1) * t(0, 0, 1) * t(1, 1, 0) * t(1, 1, 0) +
                     t(0, 1, 0) * t(0, 1, 0) * t(1, 0, 1) * t(1, 0, 1) + t(1, 0, 0) * t(1, 0, 0) * t(0, 1, 1) * t(0, 1, 1);
  const Complex d2 = t(0, 0, 0) * t(1, 1, 1) * t(0, 1, 1) * t(1, 0, 0) + t(0, 0, 0) * t(1, 1, 1) * t(1, 0, 1) * t(0, 1, 0) +
                     t(0, 0, 0) * t(1, 1, 1) * t(1, 1, 0) * t(0, 0, 1) + t(0, 1, 1) * t(1, 0, 0) * t(1, 0, 1) * t(0, 1, 0) +
                     t(0, 1, 1) * t(1, 0, 0) * t(1, 1, 0) * t(0, 0, 1) + t(1, 0, 1) * t(0, 1, 0) * t(1, 1, 0) * t(0, 0, 1);
  const Complex d3 = t(0, 0, 0) * t(1, 1, 0) * t(1, 0, 1) * t(0, 1, 1) + t(1, 1, 1) * t(0, 0, 1) * t(0, 1, 0) * t(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

Slocc3Result slocc3_classify(const PureState& state, double tol) {
  if (state.num_qubits() != 3) throw std::invalid_argument("slocc3_classify: expected 3 qubits");
  Slocc3Result out;
  out.tangle = three_tangle(state);
  if (!genuinely_entangled(state, 1e-10))
    out.label = Slocc3Class::Biseparable;
  else
    out.label = out.tangle > tol ? Slocc3Class::Ghz : Slocc3Class::W;
  return out;
}

std::string_view label_name(Slocc3Class c) {
  switch (c) {
    case Slocc3Class::Ghz: return "GHZ-class";
    case Slocc3Class::W: return "W-class";
    case Slocc3Class::Biseparable: break;
  }
  return "biseparable";
}

}  // namespace q2sat::oracle
