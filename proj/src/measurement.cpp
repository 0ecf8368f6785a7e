#include "qbc/measurement.hpp"

#include <cmath>
#include <stdexcept>

#include "register_index.hpp"

namespace qbc {

namespace {

// Draws index k from the (sub)probability vector p; any residual rounding
// mass goes to the last outcome of nonzero probability.
int sample_outcome(const std::vector<double>& p, RandomStream& rng) {
  const double u = rng.uniform();
  double cum = 0.0;
  int fallback = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] > 0.0) fallback = static_cast<int>(k);
  }
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    cum += p[k];
    if (u < cum) return static_cast<int>(k);
  }
  return fallback;
}

}  // namespace

std::pair<int, StateVector> measure_projective(const StateVector& s,
                                               const std::vector<Eigen::VectorXcd>& basis,
                                               const std::vector<int>& targets,
                                               RandomStream& rng) {
  detail::check_register_subset(s.dims, targets);
  const long td = detail::subset_dim(s.dims, targets);
  if (static_cast<long>(basis.size()) != td) {
    throw std::invalid_argument("basis does not span the target subsystem");
  }
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].size() != td) {
      throw std::invalid_argument("basis vector dimension mismatch");
    }
    for (std::size_t b = a; b < basis.size(); ++b) {
      const Complex ip = basis[a].dot(basis[b]);
      const double want = (a == b) ? 1.0 : 0.0;
      if (std::abs(ip - Complex(want, 0.0)) > kAlgebraTol) {
        throw std::invalid_argument("measurement basis is not orthonormal");
      }
    }
  }

  const std::vector<int> env = detail::complement_registers(s.dims, targets);
  const std::vector<long> toff = detail::subset_offsets(s.dims, targets);
  const std::vector<long> eoff = detail::subset_offsets(s.dims, env);
  const long ed = static_cast<long>(eoff.size());

  // coeff(k, e) = <basis_k (x) e | s>
  Eigen::MatrixXcd coeff(td, ed);
  std::vector<double> prob(basis.size(), 0.0);
  for (long e = 0; e < ed; ++e) {
    for (long k = 0; k < td; ++k) {
      Complex c(0.0, 0.0);
      for (long t = 0; t < td; ++t) {
        c += std::conj(basis[k][t]) * s.amps[eoff[e] + toff[t]];
      }
      coeff(k, e) = c;
      prob[k] += std::norm(c);
    }
  }

  const int outcome = sample_outcome(prob, rng);
  const double scale = 1.0 / std::sqrt(prob[outcome]);
  Eigen::VectorXcd post = Eigen::VectorXcd::Zero(s.amps.size());
  for (long e = 0; e < ed; ++e) {
    const Complex c = coeff(outcome, e) * scale;
    for (long t = 0; t < td; ++t) {
      post[eoff[e] + toff[t]] = basis[outcome][t] * c;
    }
  }
  return {outcome, StateVector(s.dims, std::move(post))};
}

Povm::Povm(std::vector<Eigen::MatrixXcd> elements_) : elements(std::move(elements_)) {
  if (elements.empty()) throw std::invalid_argument("Povm needs at least one element");
  const long d = elements[0].rows();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& e : elements) {
    if (e.rows() != d || e.cols() != d) {
      throw std::invalid_argument("Povm elements must share one square dimension");
    }
    if ((e - e.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol) {
      throw std::invalid_argument("Povm element is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kAlgebraTol) {
      throw std::invalid_argument("Povm element is not positive semidefinite");
    }
    sum += e;
  }
  if ((sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > kAlgebraTol) {
    throw std::invalid_argument("Povm elements do not sum to identity");
  }
}

int measure_povm(const StateVector& s, const Povm& m, RandomStream& rng) {
  if (m.dim() != s.total_dim()) throw std::invalid_argument("Povm dimension mismatch");
  std::vector<double> prob(m.elements.size());
  for (std::size_t k = 0; k < m.elements.size(); ++k) {
    prob[k] = std::max(0.0, (s.amps.dot(m.elements[k] * s.amps)).real());
  }
  return sample_outcome(prob, rng);
}

int measure_povm(const DensityMatrix& rho, const Povm& m, RandomStream& rng) {
  if (m.dim() != rho.dim()) throw std::invalid_argument("Povm dimension mismatch");
  std::vector<double> prob(m.elements.size());
  for (std::size_t k = 0; k < m.elements.size(); ++k) {
    prob[k] = std::max(0.0, (m.elements[k] * rho.entries).trace().real());
  }
  return sample_outcome(prob, rng);
}

}  // namespace qbc
