#pragma once

// Internal JSON helpers shared by the transcript and result codecs.

#include <json.hpp>

#include "qbc/state.hpp"

namespace qbc::detail {

using nlohmann::json;

inline json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const json& j) {
  return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

inline json cvector_to_json(const Eigen::VectorXcd& v) {
  json arr = json::array();
  for (long i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v[i]));
  return arr;
}

inline Eigen::VectorXcd cvector_from_json(const json& j) {
  Eigen::VectorXcd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = complex_from_json(j.at(i));
  return v;
}

// Row-major flattening.
inline json cmatrix_to_json(const Eigen::MatrixXcd& m) {
  json arr = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    for (long c = 0; c < m.cols(); ++c) arr.push_back(complex_to_json(m(r, c)));
  }
  return arr;
}

inline Eigen::MatrixXcd cmatrix_from_json(const json& j, long rows, long cols) {
  if (static_cast<long>(j.size()) != rows * cols) {
    throw std::invalid_argument("matrix entry count mismatch");
  }
  Eigen::MatrixXcd m(rows, cols);
  std::size_t k = 0;
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) m(r, c) = complex_from_json(j.at(k++));
  }
  return m;
}

inline json state_to_json(const StateVector& s) {
  return json{{"dims", s.dims}, {"amps", cvector_to_json(s.amps)}};
}

inline StateVector state_from_json(const json& j) {
  return StateVector(j.at("dims").get<std::vector<int>>(),
                     cvector_from_json(j.at("amps")));
}

}  // namespace qbc::detail
