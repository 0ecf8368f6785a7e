#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qbc/state.hpp"

namespace qbc {

// Density operator: Hermitian, trace one, positive semidefinite
// (all within 1e-9), validated at construction.
struct DensityMatrix {
  Eigen::MatrixXcd entries;

  DensityMatrix() = default;
  explicit DensityMatrix(Eigen::MatrixXcd entries_);

  int dim() const { return static_cast<int>(entries.rows()); }
};

DensityMatrix pure_density(const StateVector& s);

// Reduced density matrix on the kept registers, enumerated in the order
// listed in `keep`.
DensityMatrix partial_trace(const StateVector& s, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep);

// (1/2) sum |eigenvalues(a - b)|, in [0, 1].
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qbc
