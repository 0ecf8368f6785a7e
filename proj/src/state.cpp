#include "qbc/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qbc {

long total_dim(const std::vector<int>& dims) {
  long n = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("register dimension must be >= 1");
    n *= d;
  }
  return n;
}

StateVector::StateVector(std::vector<int> dims_, Eigen::VectorXcd amps_)
    : dims(std::move(dims_)), amps(std::move(amps_)) {
  if (amps.size() != qbc::total_dim(dims)) {
    throw std::invalid_argument("amplitude count does not match register dims");
  }
  const double n = amps.norm();
  if (std::abs(n - 1.0) > kAlgebraTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector basis_state(std::vector<int> dims, long index) {
  const long n = total_dim(dims);
  if (index < 0 || index >= n) throw std::invalid_argument("basis index out of range");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(n);
  a[index] = 1.0;
  return StateVector(std::move(dims), std::move(a));
}

StateVector ket0() { return basis_state({2}, 0); }
StateVector ket1() { return basis_state({2}, 1); }

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.amps.size() != b.amps.size()) {
    throw std::invalid_argument("inner product dimension mismatch");
  }
  return a.amps.dot(b.amps);
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  Eigen::VectorXcd amps(a.amps.size() * b.amps.size());
  long k = 0;
  for (long i = 0; i < a.amps.size(); ++i) {
    for (long j = 0; j < b.amps.size(); ++j) {
      amps[k++] = a.amps[i] * b.amps[j];
    }
  }
  return StateVector(std::move(dims), std::move(amps));
}

}  // namespace qbc
