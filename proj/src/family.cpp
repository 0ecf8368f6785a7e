#include "qbc/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "qbc/errors.hpp"

namespace qbc {

UnitaryFamily UnitaryFamily::rotation_grid(std::vector<Axis> axes, int grid_size) {
  if (axes.empty()) throw InvalidConfig("rotation grid needs at least one axis");
  if (grid_size < 1) throw InvalidConfig("rotation grid size must be >= 1");
  std::sort(axes.begin(), axes.end());
  axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
  UnitaryFamily f;
  f.kind_ = FamilyKind::RotationGrid;
  f.axes_ = std::move(axes);
  f.grid_size_ = grid_size;
  return f;
}

UnitaryFamily UnitaryFamily::explicit_list(std::vector<UnitaryMatrix> members) {
  if (members.empty()) throw InvalidConfig("explicit family needs at least one member");
  for (const auto& m : members) {
    if (m.dim() != 2) throw InvalidConfig("family members must be 2x2 unitaries");
  }
  UnitaryFamily f;
  f.kind_ = FamilyKind::ExplicitList;
  f.members_ = std::move(members);
  return f;
}

UnitaryFamily UnitaryFamily::haar_continuous() {
  UnitaryFamily f;
  f.kind_ = FamilyKind::HaarContinuous;
  return f;
}

UnitaryFamily UnitaryFamily::pauli() {
  return explicit_list({UnitaryMatrix::identity(2), pauli_x(), pauli_y(), pauli_z()});
}

std::size_t UnitaryFamily::size() const {
  switch (kind_) {
    case FamilyKind::RotationGrid:
      return axes_.size() * static_cast<std::size_t>(grid_size_);
    case FamilyKind::ExplicitList:
      return members_.size();
    case FamilyKind::HaarContinuous:
      throw InvalidConfig("haar-continuous family is not enumerable");
  }
  throw std::logic_error("unreachable");
}

UnitaryMatrix UnitaryFamily::member(std::size_t i) const {
  const std::size_t n = size();
  if (i >= n) throw std::invalid_argument("family member index out of range");
  switch (kind_) {
    case FamilyKind::RotationGrid: {
      const Axis axis = axes_[i / grid_size_];
      const int k = static_cast<int>(i % grid_size_);
      const double theta = 2.0 * M_PI * k / grid_size_;
      return rotation_gate(axis, theta);
    }
    case FamilyKind::ExplicitList:
      return members_[i];
    case FamilyKind::HaarContinuous:
      break;
  }
  throw std::logic_error("unreachable");
}

UnitaryMatrix UnitaryFamily::sample(RandomStream& rng) const {
  if (kind_ == FamilyKind::HaarContinuous) return haar_random_unitary(2, rng);
  return member(rng.uniform_index(size()));
}

}  // namespace qbc
