#pragma once

// Internal index arithmetic for multi-register amplitude vectors.
// Register 0 is the most significant digit of the flat index.

#include <stdexcept>
#include <vector>

namespace qbc::detail {

inline std::vector<long> strides(const std::vector<int>& dims) {
  std::vector<long> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) {
    s[i] = s[i + 1] * dims[i + 1];
  }
  return s;
}

inline void check_register_subset(const std::vector<int>& dims,
                                  const std::vector<int>& subset) {
  std::vector<bool> seen(dims.size(), false);
  for (int r : subset) {
    if (r < 0 || r >= static_cast<int>(dims.size())) {
      throw std::invalid_argument("register index out of range");
    }
    if (seen[r]) throw std::invalid_argument("duplicate register index");
    seen[r] = true;
  }
}

inline std::vector<int> complement_registers(const std::vector<int>& dims,
                                             const std::vector<int>& subset) {
  std::vector<bool> used(dims.size(), false);
  for (int r : subset) used[r] = true;
  std::vector<int> rest;
  for (int r = 0; r < static_cast<int>(dims.size()); ++r) {
    if (!used[r]) rest.push_back(r);
  }
  return rest;
}

inline long subset_dim(const std::vector<int>& dims, const std::vector<int>& subset) {
  long n = 1;
  for (int r : subset) n *= dims[r];
  return n;
}

// Flat-index offsets of every assignment of the subset registers, with the
// registers enumerated mixed-radix in the order listed (first register is
// the most significant digit of the enumeration).
inline std::vector<long> subset_offsets(const std::vector<int>& dims,
                                        const std::vector<int>& subset) {
  const std::vector<long> st = strides(dims);
  std::vector<long> offsets(1, 0);
  for (int r : subset) {
    std::vector<long> next;
    next.reserve(offsets.size() * dims[r]);
    for (long base : offsets) {
      for (int k = 0; k < dims[r]; ++k) next.push_back(base + k * st[r]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace qbc::detail
