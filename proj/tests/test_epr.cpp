#include <doctest.h>

#include <cmath>

#include "qbc/density.hpp"
#include "qbc/epr.hpp"
#include "qbc/errors.hpp"
#include "test_util.hpp"

using namespace qbc;

namespace {

UnitaryFamily identity_singleton() {
  return UnitaryFamily::explicit_list({UnitaryMatrix::identity(2)});
}

}  // namespace

TEST_CASE("identity singletons collapse to the bare qubit pair") {
  const EprStatePair pair =
      epr_build_states(identity_singleton(), identity_singleton(), computational_basis());
  CHECK(pair.psi0.dims == std::vector<int>{1, 2, 2, 1});
  CHECK(std::abs(pair.psi0.amps[1] - Complex(1.0, 0.0)) < 1e-12);  // |0>|1>
  CHECK(std::abs(pair.psi1.amps[2] - Complex(1.0, 0.0)) < 1e-12);  // |1>|0>
  CHECK(epr_check_hiding(pair) == doctest::Approx(1.0).epsilon(1e-9));

  // No local unitary can connect distinguishable reductions.
  auto [v, residual] = epr_construct_v(pair);
  CHECK(residual > 0.5);
  CHECK(epr_attack_success(pair, UnitaryMatrix::identity(2)) <= 1e-9);
}

TEST_CASE("superposition states are normalized with the documented shape") {
  const std::vector<std::pair<UnitaryFamily, UnitaryFamily>> configs = {
      {UnitaryFamily::pauli(), identity_singleton()},
      {UnitaryFamily::rotation_grid({Axis::X}, 4), UnitaryFamily::rotation_grid({Axis::Z}, 3)},
      {UnitaryFamily::rotation_grid({Axis::X, Axis::Y, Axis::Z}, 5), UnitaryFamily::pauli()},
  };
  for (const auto& [alice, bob] : configs) {
    const EprStatePair pair = epr_build_states(alice, bob, computational_basis());
    CHECK(pair.psi0.amps.norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pair.psi1.amps.norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pair.psi0.total_dim() ==
          static_cast<long>(bob.size()) * 4 * static_cast<long>(alice.size()));
  }
}

TEST_CASE("Pauli twirl hides the commitment and admits an exact switch") {
  const EprStatePair pair =
      epr_build_states(UnitaryFamily::pauli(), identity_singleton(), computational_basis());

  // Both of Bob's reductions are |0><0| (x) I/2.
  CHECK(epr_check_hiding(pair) <= 1e-9);

  auto [v, residual] = epr_construct_v(pair);
  CHECK(residual <= 1e-6);
  CHECK(epr_attack_success(pair, v) >= 1.0 - 1e-9);
  CHECK(unitarity_defect(v.entries) <= 1e-9);
}

TEST_CASE("hiding distance is always within [0, 1]") {
  const std::vector<std::pair<UnitaryFamily, UnitaryFamily>> configs = {
      {identity_singleton(), identity_singleton()},
      {UnitaryFamily::rotation_grid({Axis::Z}, 4), identity_singleton()},
      {UnitaryFamily::rotation_grid({Axis::X, Axis::Y}, 3), UnitaryFamily::pauli()},
  };
  for (const auto& [alice, bob] : configs) {
    const double td = epr_check_hiding(epr_build_states(alice, bob, computational_basis()));
    CHECK(td >= 0.0);
    CHECK(td <= 1.0 + 1e-12);
  }
}

TEST_CASE("whenever hiding vanishes the constructed switch is exact") {
  // Pauli twirl on Alice's side flattens both reductions regardless of
  // Bob's family choice.
  const std::vector<UnitaryFamily> bob_families = {
      identity_singleton(), UnitaryFamily::pauli(),
      UnitaryFamily::rotation_grid({Axis::X}, 4),
      UnitaryFamily::rotation_grid({Axis::X, Axis::Y, Axis::Z}, 2)};
  for (const auto& bob : bob_families) {
    const EprStatePair pair =
        epr_build_states(UnitaryFamily::pauli(), bob, computational_basis());
    if (epr_check_hiding(pair) <= 1e-9) {
      auto [v, residual] = epr_construct_v(pair);
      CHECK(residual <= 1e-6);
    }
  }
}

TEST_CASE("switch application preserves norm and success tracks the residual") {
  const std::vector<std::pair<UnitaryFamily, UnitaryFamily>> configs = {
      {UnitaryFamily::pauli(), identity_singleton()},
      {UnitaryFamily::rotation_grid({Axis::X}, 4), UnitaryFamily::rotation_grid({Axis::Z}, 2)},
      {UnitaryFamily::rotation_grid({Axis::Z}, 8), identity_singleton()},
  };
  for (const auto& [alice, bob] : configs) {
    const EprStatePair pair = epr_build_states(alice, bob, computational_basis());
    auto [v, residual] = epr_construct_v(pair);
    const StateVector switched = apply(v, pair.psi0, {2, 3});
    CHECK(std::abs(switched.amps.norm() - 1.0) <= 1e-9);
    const double success = epr_attack_success(pair, v);
    CHECK(success <= 1.0 + 1e-12);
    // residual^2 = 2 - 2 sqrt(success) by construction.
    CHECK(residual * residual == doctest::Approx(2.0 - 2.0 * std::sqrt(success)).epsilon(1e-9));
    CHECK(success >= 1.0 - residual * residual - 1e-12);
  }
}

TEST_CASE("continuous families and oversized grids are rejected") {
  CHECK_THROWS_AS(epr_build_states(UnitaryFamily::haar_continuous(), identity_singleton(),
                                   computational_basis()),
                  InvalidConfig);
  CHECK_THROWS_AS(epr_build_states(UnitaryFamily::rotation_grid({Axis::X}, 70),
                                   UnitaryFamily::rotation_grid({Axis::X}, 70),
                                   computational_basis()),
                  ResourceLimit);
}

TEST_CASE("attack success rejects mismatched switch dimensions") {
  const EprStatePair pair =
      epr_build_states(UnitaryFamily::pauli(), identity_singleton(), computational_basis());
  CHECK_THROWS_AS(epr_attack_success(pair, UnitaryMatrix::identity(2)),
                  std::invalid_argument);
}
