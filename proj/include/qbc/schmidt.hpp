#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qbc/state.hpp"

namespace qbc {

// Schmidt form of a bipartite pure state: |s> = sum_i coeffs[i] |l_i> x |r_i>
// with nonincreasing nonnegative coefficients and orthonormal vector sets.
// Trailing numerically-zero coefficients (<= 1e-12) are dropped.
struct SchmidtDecomposition {
  Eigen::VectorXd coeffs;
  std::vector<Eigen::VectorXcd> left_vectors;
  std::vector<Eigen::VectorXcd> right_vectors;

  int rank() const { return static_cast<int>(coeffs.size()); }
};

// Cut: `left` lists the registers on the left side (enumerated in the order
// given); the right side is the remaining registers in ascending order.
// Both sides must be nonempty.
SchmidtDecomposition schmidt_decompose(const StateVector& s,
                                       const std::vector<int>& left);

}  // namespace qbc
