#include "qbc/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "register_index.hpp"

namespace qbc {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries_) : entries(std::move(entries_)) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw std::invalid_argument("density matrix must be square and nonempty");
  }
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(entries.trace().real() - 1.0) > kAlgebraTol ||
      std::abs(entries.trace().imag()) > kAlgebraTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kAlgebraTol) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

DensityMatrix pure_density(const StateVector& s) {
  return DensityMatrix(s.amps * s.amps.adjoint());
}

namespace {

DensityMatrix reduce(const Eigen::VectorXcd& amps, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  detail::check_register_subset(dims, keep);
  const std::vector<int> elim = detail::complement_registers(dims, keep);
  const std::vector<long> koff = detail::subset_offsets(dims, keep);
  const std::vector<long> eoff = detail::subset_offsets(dims, elim);
  const long kd = static_cast<long>(koff.size());

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kd, kd);
  for (long e : eoff) {
    for (long i = 0; i < kd; ++i) {
      const Complex ai = amps[koff[i] + e];
      if (ai == Complex(0.0, 0.0)) continue;
      for (long j = 0; j < kd; ++j) {
        rho(i, j) += ai * std::conj(amps[koff[j] + e]);
      }
    }
  }
  return DensityMatrix(std::move(rho));
}

}  // namespace

DensityMatrix partial_trace(const StateVector& s, const std::vector<int>& keep) {
  return reduce(s.amps, s.dims, keep);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  if (total_dim(dims) != rho.dim()) {
    throw std::invalid_argument("register dims do not match density matrix");
  }
  detail::check_register_subset(dims, keep);
  const std::vector<int> elim = detail::complement_registers(dims, keep);
  const std::vector<long> koff = detail::subset_offsets(dims, keep);
  const std::vector<long> eoff = detail::subset_offsets(dims, elim);
  const long kd = static_cast<long>(koff.size());

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kd, kd);
  for (long e : eoff) {
    for (long i = 0; i < kd; ++i) {
      for (long j = 0; j < kd; ++j) {
        out(i, j) += rho.entries(koff[i] + e, koff[j] + e);
      }
    }
  }
  return DensityMatrix(std::move(out));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trace distance dimension mismatch");
  Eigen::MatrixXcd diff = a.entries - b.entries;
  diff = 0.5 * (diff + diff.adjoint().eval());  // symmetrize numeric noise
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
  return std::clamp(0.5 * es.eigenvalues().cwiseAbs().sum(), 0.0, 1.0);
}

}  // namespace qbc
