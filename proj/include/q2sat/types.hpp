#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace q2sat {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using VecX = Eigen::VectorXcd;
using MatX = Eigen::MatrixXcd;

// Dense conjugate-symmetric operator. Density matrices, projectors and
// Hamiltonians all use this representation.
using HermitianOp = Eigen::MatrixXcd;

// Qubits are 0-based throughout the library. Qubit 0 is the most significant
// bit of a basis index, so |q0 q1 ... q_{n-1}> has index sum q_k 2^(n-1-k).
inline std::size_t bit_of(int n, int qubit) { return std::size_t{1} << (n - 1 - qubit); }

// Unordered pair of distinct qubits, stored with first < second.
struct QubitPair {
  int first = 0;
  int second = 1;

  QubitPair() = default;
  QubitPair(int a, int b) : first(a < b ? a : b), second(a < b ? b : a) {}

  bool contains(int q) const { return q == first || q == second; }
  int other(int q) const { return q == first ? second : first; }
  auto operator<=>(const QubitPair&) const = default;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotPsdError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidOperatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when a result that the theory guarantees fails its post-hoc check.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace q2sat
