#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qbc/rng.hpp"
#include "qbc/state.hpp"

namespace qbc {

enum class Axis { X, Y, Z };

char axis_letter(Axis a);
Axis axis_from_letter(char c);

// Max-norm unitarity defect ||U^dag U - I||_max.
double unitarity_defect(const Eigen::MatrixXcd& entries);

bool is_unitary(const Eigen::MatrixXcd& entries, double tol = kAlgebraTol);

// Square complex matrix validated unitary at construction.
struct UnitaryMatrix {
  Eigen::MatrixXcd entries;

  UnitaryMatrix() = default;
  explicit UnitaryMatrix(Eigen::MatrixXcd entries_);

  int dim() const { return static_cast<int>(entries.rows()); }

  static UnitaryMatrix identity(int dim);
};

// R_a(theta) = cos(theta/2) I - i sin(theta/2) P_a, P_a the Pauli matrix
// for the axis. Under this convention R_a(theta)^dag = R_a(-theta).
UnitaryMatrix rotation_gate(Axis axis, double theta);

// Pauli matrices (unitary and Hermitian).
UnitaryMatrix pauli_x();
UnitaryMatrix pauli_y();
UnitaryMatrix pauli_z();

// Conjugate transpose.
UnitaryMatrix adjoint(const UnitaryMatrix& u);

// Kronecker products.
UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b);

// Haar-distributed unitary: QR of a complex Gaussian matrix with the R
// diagonal phase absorbed into Q (Mezzadri's recipe).
UnitaryMatrix haar_random_unitary(int dim, RandomStream& rng);

// Applies u to the listed target registers of s (identity elsewhere).
// u.dim must equal the product of the target register dimensions; the
// target order fixes which tensor factor of u acts on which register.
StateVector apply(const UnitaryMatrix& u, const StateVector& s,
                  const std::vector<int>& targets);

}  // namespace qbc
