#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "qbc/density.hpp"
#include "qbc/rng.hpp"
#include "qbc/state.hpp"
#include "qbc/unitary.hpp"

namespace qbc {

// Projective measurement of the target registers in the given orthonormal
// basis (which must span the target subsystem). Returns the sampled outcome
// index and the normalized post-measurement state.
std::pair<int, StateVector> measure_projective(const StateVector& s,
                                               const std::vector<Eigen::VectorXcd>& basis,
                                               const std::vector<int>& targets,
                                               RandomStream& rng);

// Generalized measurement: Hermitian PSD elements summing to identity
// (all within 1e-9), validated at construction.
struct Povm {
  std::vector<Eigen::MatrixXcd> elements;

  Povm() = default;
  explicit Povm(std::vector<Eigen::MatrixXcd> elements_);

  int dim() const { return elements.empty() ? 0 : static_cast<int>(elements[0].rows()); }
};

// Samples outcome k with probability <s|E_k|s> resp. Tr(E_k rho).
int measure_povm(const StateVector& s, const Povm& m, RandomStream& rng);
int measure_povm(const DensityMatrix& rho, const Povm& m, RandomStream& rng);

}  // namespace qbc
