#pragma once

#include <cstddef>
#include <vector>

#include "qbc/rng.hpp"
#include "qbc/unitary.hpp"

namespace qbc {

enum class FamilyKind { RotationGrid, ExplicitList, HaarContinuous };

// The set a party's secret qubit transform is drawn from.
//
//   rotation-grid    {R_a(2 pi k / N) : a in axes, 0 <= k < N}, enumerable
//   explicit-list    fixed list of 2x2 unitaries, enumerable
//   haar-continuous  Haar measure on U(2), sampleable but not enumerable
class UnitaryFamily {
 public:
  static UnitaryFamily rotation_grid(std::vector<Axis> axes, int grid_size);
  static UnitaryFamily explicit_list(std::vector<UnitaryMatrix> members);
  static UnitaryFamily haar_continuous();
  // {I, X, Y, Z} as an explicit list.
  static UnitaryFamily pauli();

  FamilyKind kind() const { return kind_; }
  bool enumerable() const { return kind_ != FamilyKind::HaarContinuous; }

  // Member count; throws InvalidConfig for haar-continuous.
  std::size_t size() const;
  // Enumerated member i (axis-major for rotation grids).
  UnitaryMatrix member(std::size_t i) const;
  UnitaryMatrix sample(RandomStream& rng) const;

  const std::vector<Axis>& axes() const { return axes_; }
  int grid_size() const { return grid_size_; }
  const std::vector<UnitaryMatrix>& members() const { return members_; }

 private:
  UnitaryFamily() = default;

  FamilyKind kind_ = FamilyKind::HaarContinuous;
  std::vector<Axis> axes_;
  int grid_size_ = 0;
  std::vector<UnitaryMatrix> members_;
};

}  // namespace qbc
