#include "qbc/epr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qbc/density.hpp"
#include "qbc/errors.hpp"

namespace qbc {

namespace {

using RowMajorMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// psi_b reshaped with Bob's registers as rows and Alice's as columns.
Eigen::Map<const RowMajorMatrix> as_bipartite(const EprStatePair& pair,
                                              const StateVector& psi) {
  return Eigen::Map<const RowMajorMatrix>(psi.amps.data(), pair.bob_dim(),
                                          pair.alice_dim());
}

}  // namespace

EprStatePair epr_build_states(const UnitaryFamily& alice_family,
                              const UnitaryFamily& bob_family,
                              const BasisPair& basis) {
  if (!alice_family.enumerable() || !bob_family.enumerable()) {
    throw InvalidConfig("the entanglement model needs enumerable transform families");
  }
  const long n_a = static_cast<long>(alice_family.size());
  const long n_b = static_cast<long>(bob_family.size());
  const long dim = n_b * 4 * n_a;
  if (dim > kEprDimCap) {
    throw ResourceLimit("entanglement model dimension " + std::to_string(dim) +
                        " exceeds the cap " + std::to_string(kEprDimCap));
  }

  const std::vector<int> dims = {static_cast<int>(n_b), 2, 2, static_cast<int>(n_a)};
  Eigen::VectorXcd amps0 = Eigen::VectorXcd::Zero(dim);
  Eigen::VectorXcd amps1 = Eigen::VectorXcd::Zero(dim);
  const double weight = 1.0 / std::sqrt(static_cast<double>(n_a * n_b));

  for (long a = 0; a < n_a; ++a) {
    const UnitaryMatrix u_a = alice_family.member(a);
    for (long b = 0; b < n_b; ++b) {
      const Eigen::Matrix2cd u = u_a.entries * bob_family.member(b).entries;
      const Eigen::Vector2cd x = u * basis.phi0.amps;  // U_A U_B |phi0>
      const Eigen::Vector2cd y = u * basis.phi1.amps;  // U_A U_B |phi1>
      for (int q1 = 0; q1 < 2; ++q1) {
        for (int q2 = 0; q2 < 2; ++q2) {
          const long idx = ((b * 2 + q1) * 2 + q2) * n_a + a;
          amps0[idx] = weight * x[q1] * y[q2];
          amps1[idx] = weight * y[q1] * x[q2];
        }
      }
    }
  }
  return EprStatePair{StateVector(dims, std::move(amps0)),
                      StateVector(dims, std::move(amps1))};
}

double epr_check_hiding(const EprStatePair& pair) {
  const DensityMatrix rho0 = partial_trace(pair.psi0, {0, 1});
  const DensityMatrix rho1 = partial_trace(pair.psi1, {0, 1});
  return trace_distance(rho0, rho1);
}

std::pair<UnitaryMatrix, double> epr_construct_v(const EprStatePair& pair) {
  const auto m0 = as_bipartite(pair, pair.psi0);
  const auto m1 = as_bipartite(pair, pair.psi1);

  // (I (x) V)|psi0> has matrix M_0 V^T, so the Procrustes optimum over
  // unitaries is the polar factor of (M_0^dag M_1)^T.
  const Eigen::MatrixXcd ct = (m0.adjoint() * m1).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ct, Eigen::ComputeFullU | Eigen::ComputeFullV);
  UnitaryMatrix v(svd.matrixU() * svd.matrixV().adjoint());

  const double success = epr_attack_success(pair, v);
  const double residual = std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(success)));
  return {std::move(v), residual};
}

double epr_attack_success(const EprStatePair& pair, const UnitaryMatrix& v) {
  if (v.dim() != pair.alice_dim()) {
    throw std::invalid_argument("switching unitary does not match Alice's side");
  }
  const StateVector switched = apply(v, pair.psi0, {2, 3});
  return std::clamp(fidelity(pair.psi1, switched), 0.0, 1.0);
}

}  // namespace qbc
