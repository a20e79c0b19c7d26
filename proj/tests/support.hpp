#pragma once

#include <cmath>
#include <random>
#include <string>

#include "q2sat/linalg.hpp"

namespace q2sat::test {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// |b_0 b_1 ... > from a bit string such as "010".
inline VecX ket(const std::string& bits) {
  VecX v = VecX::Zero(Eigen::Index{1} << bits.size());
  v[std::stoi(bits, nullptr, 2)] = 1.0;
  return v;
}

inline Vec4 ket2(const std::string& bits) { return ket(bits); }

inline Vec4 bell_phi_plus() { return (ket2("00") + ket2("11")) * kInvSqrt2; }
inline Vec4 bell_psi_plus() { return (ket2("01") + ket2("10")) * kInvSqrt2; }
inline Vec4 singlet() { return (ket2("01") - ket2("10")) * kInvSqrt2; }

inline VecX gaussian(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> g;
  VecX v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) v[k] = Complex(g(rng), g(rng));
  return v;
}

inline Vec2 random_unit2(std::mt19937_64& rng) { return gaussian(rng, 2).normalized(); }

// Norm of the part of v outside span(basis); basis orthonormal.
inline double outside(const std::vector<VecX>& basis, const VecX& v) {
  VecX r = v;
  for (const auto& b : basis) r -= b * b.dot(v);
  return r.norm();
}

// |<a|b>| for normalized vectors.
inline double fidelity(const VecX& a, const VecX& b) { return std::abs(a.normalized().dot(b.normalized())); }

}  // namespace q2sat::test
