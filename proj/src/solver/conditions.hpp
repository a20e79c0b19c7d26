#pragma once

#include <vector>

#include "q2sat/types.hpp"

namespace q2sat::solver::detail {

// Solutions psi of sum_g row[g] psi[g] = 0 for all rows.
struct ConditionKernel {
  int dimension = 2;
  Vec2 vector = Vec2(1.0, 0.0);  // valid when dimension == 1
};

inline ConditionKernel condition_kernel(const std::vector<Vec2>& rows, double tol) {
  ConditionKernel out;
  if (rows.empty()) return out;
  MatX m(static_cast<Eigen::Index>(rows.size()), 2);
  for (std::size_t k = 0; k < rows.size(); ++k) m.row(static_cast<Eigen::Index>(k)) = rows[k].transpose();
  Eigen::JacobiSVD<MatX> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s[k] > tol) ++rank;
  out.dimension = 2 - rank;
  if (out.dimension == 1) out.vector = svd.matrixV().col(1).normalized();
  return out;
}

// Row of the condition <phi|(a (x) psi)> = 0 on psi, phi oriented (assigned, partner).
inline Vec2 contract_left(const Vec4& phi, const Vec2& a) {
  Vec2 row;
  for (int g = 0; g < 2; ++g) row[g] = std::conj(phi[g]) * a[0] + std::conj(phi[2 + g]) * a[1];
  return row;
}

}  // namespace q2sat::solver::detail
