#include "qbc/schmidt.hpp"

#include <stdexcept>

#include "register_index.hpp"

namespace qbc {

namespace {
constexpr double kRankFloor = 1e-12;
}

SchmidtDecomposition schmidt_decompose(const StateVector& s,
                                       const std::vector<int>& left) {
  if (left.empty() || left.size() >= s.dims.size()) {
    throw std::invalid_argument("both sides of the Schmidt cut must be nonempty");
  }
  detail::check_register_subset(s.dims, left);
  const std::vector<int> right = detail::complement_registers(s.dims, left);
  const std::vector<long> loff = detail::subset_offsets(s.dims, left);
  const std::vector<long> roff = detail::subset_offsets(s.dims, right);
  const long ld = static_cast<long>(loff.size());
  const long rd = static_cast<long>(roff.size());

  Eigen::MatrixXcd m(ld, rd);
  for (long l = 0; l < ld; ++l) {
    for (long r = 0; r < rd; ++r) m(l, r) = s.amps[loff[l] + roff[r]];
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  int rank = static_cast<int>(sv.size());
  while (rank > 1 && sv[rank - 1] <= kRankFloor) --rank;

  SchmidtDecomposition out;
  out.coeffs = sv.head(rank);
  out.left_vectors.reserve(rank);
  out.right_vectors.reserve(rank);
  for (int i = 0; i < rank; ++i) {
    out.left_vectors.push_back(svd.matrixU().col(i));
    out.right_vectors.push_back(svd.matrixV().col(i).conjugate());
  }
  return out;
}

}  // namespace qbc
