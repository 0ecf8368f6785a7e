#include "qbc/unitary.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "register_index.hpp"

namespace qbc {

char axis_letter(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  throw std::invalid_argument("bad axis");
}

Axis axis_from_letter(char c) {
  switch (c) {
    case 'x': return Axis::X;
    case 'y': return Axis::Y;
    case 'z': return Axis::Z;
  }
  throw std::invalid_argument(std::string("unknown rotation axis '") + c + "'");
}

double unitarity_defect(const Eigen::MatrixXcd& entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const long n = entries.rows();
  Eigen::MatrixXcd defect = entries.adjoint() * entries - Eigen::MatrixXcd::Identity(n, n);
  return defect.cwiseAbs().maxCoeff();
}

bool is_unitary(const Eigen::MatrixXcd& entries, double tol) {
  return unitarity_defect(entries) <= tol;
}

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd entries_) : entries(std::move(entries_)) {
  if (!is_unitary(entries)) {
    throw std::invalid_argument("matrix fails the unitarity check");
  }
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  return UnitaryMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

UnitaryMatrix rotation_gate(Axis axis, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("rotation angle must be finite");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2cd m;
  switch (axis) {
    case Axis::X:
      m << Complex(c, 0), Complex(0, -s),
           Complex(0, -s), Complex(c, 0);
      break;
    case Axis::Y:
      m << Complex(c, 0), Complex(-s, 0),
           Complex(s, 0), Complex(c, 0);
      break;
    case Axis::Z:
      m << Complex(c, -s), Complex(0, 0),
           Complex(0, 0), Complex(c, s);
      break;
  }
  return UnitaryMatrix(m);
}

UnitaryMatrix pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return UnitaryMatrix(m);
}

UnitaryMatrix pauli_y() {
  Eigen::Matrix2cd m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return UnitaryMatrix(m);
}

UnitaryMatrix pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return UnitaryMatrix(m);
}

UnitaryMatrix adjoint(const UnitaryMatrix& u) {
  return UnitaryMatrix(u.entries.adjoint());
}

UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  Eigen::MatrixXcd m(static_cast<long>(na) * nb, static_cast<long>(na) * nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      m.block(static_cast<long>(i) * nb, static_cast<long>(j) * nb, nb, nb) =
          a.entries(i, j) * b.entries;
    }
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix haar_random_unitary(int dim, RandomStream& rng) {
  if (dim < 1) throw std::invalid_argument("unitary dimension must be >= 1");
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::VectorXcd d = qr.matrixQR().diagonal();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(d[j]);
    const Complex phase = mag > 0.0 ? d[j] / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return UnitaryMatrix(std::move(q));
}

StateVector apply(const UnitaryMatrix& u, const StateVector& s,
                  const std::vector<int>& targets) {
  detail::check_register_subset(s.dims, targets);
  const long target_dim = detail::subset_dim(s.dims, targets);
  if (u.dim() != target_dim) {
    throw std::invalid_argument("unitary dimension does not match target registers");
  }
  const std::vector<int> env = detail::complement_registers(s.dims, targets);
  const std::vector<long> toff = detail::subset_offsets(s.dims, targets);
  const std::vector<long> eoff = detail::subset_offsets(s.dims, env);

  Eigen::VectorXcd out(s.amps.size());
  Eigen::VectorXcd x(target_dim);
  for (long base : eoff) {
    for (long t = 0; t < target_dim; ++t) x[t] = s.amps[base + toff[t]];
    const Eigen::VectorXcd y = u.entries * x;
    for (long t = 0; t < target_dim; ++t) out[base + toff[t]] = y[t];
  }
  return StateVector(s.dims, std::move(out));
}

}  // namespace qbc
