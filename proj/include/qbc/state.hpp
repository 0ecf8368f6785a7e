#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qbc {

using Complex = std::complex<double>;

// Norm / algebraic identity tolerance used across the numeric kernels.
inline constexpr double kAlgebraTol = 1e-9;

// Pure state over an ordered list of registers. Register 0 is the most
// significant index: for dims [d0, d1], amplitude (i0, i1) lives at
// i0 * d1 + i1. Immutable value after construction.
struct StateVector {
  std::vector<int> dims;   // register dimensions, each >= 1
  Eigen::VectorXcd amps;   // length = product of dims, unit norm

  StateVector() = default;
  StateVector(std::vector<int> dims_, Eigen::VectorXcd amps_);

  int total_dim() const { return static_cast<int>(amps.size()); }
  int num_registers() const { return static_cast<int>(dims.size()); }
};

long total_dim(const std::vector<int>& dims);

// Computational basis state |index> over the given registers.
StateVector basis_state(std::vector<int> dims, long index);

// Single-qubit kets.
StateVector ket0();
StateVector ket1();

// <a|b>. Dimensions must match.
Complex inner(const StateVector& a, const StateVector& b);

// Phase-insensitive overlap |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

// Kronecker product; registers concatenate.
StateVector tensor(const StateVector& a, const StateVector& b);

}  // namespace qbc
