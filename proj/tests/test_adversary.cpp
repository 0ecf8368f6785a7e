#include <doctest.h>

#include <cmath>

#include "qbc/adversary.hpp"
#include "test_util.hpp"

using namespace qbc;

namespace {

// Bob-side check of a substituted reveal: undo the revealed transform and
// U_B on the committed state and compare against the flipped basis state.
double flip_fidelity(const UnitaryMatrix& u_a, const UnitaryMatrix& u_b,
                     const BasisPair& basis, const UnitaryMatrix& composed, int bit) {
  const Eigen::Vector2cd committed = u_a.entries * (u_b.entries * basis.state_for(bit).amps);
  const Eigen::Vector2cd undone =
      u_b.entries.adjoint() * (composed.entries.adjoint() * committed);
  return std::norm(basis.state_for(1 - bit).amps.dot(undone));
}

}  // namespace

TEST_CASE("oracle forgery collapses to Pauli-X for identity transforms") {
  const ForgedReveal f = forge_substitution_oracle(UnitaryMatrix::identity(2),
                                                   UnitaryMatrix::identity(2),
                                                   computational_basis());
  CHECK(testutil::max_abs_diff(f.v.entries, pauli_x().entries) < 1e-12);
}

TEST_CASE("oracle forgery flips both bits for random transform pairs") {
  RandomStream rng(50);
  const BasisPair comp = computational_basis();
  // A rotated basis pair exercises the general X_phi construction.
  const UnitaryMatrix r = haar_random_unitary(2, rng);
  const BasisPair rotated(apply(r, comp.phi0, {0}), apply(r, comp.phi1, {0}));

  for (const BasisPair& basis : {comp, rotated}) {
    for (int i = 0; i < 1000; ++i) {
      const UnitaryMatrix u_a = haar_random_unitary(2, rng);
      const UnitaryMatrix u_b = haar_random_unitary(2, rng);
      const ForgedReveal f = forge_substitution_oracle(u_a, u_b, basis);
      CHECK(flip_fidelity(u_a, u_b, basis, f.composed, 0) >= 1.0 - 1e-9);
      CHECK(flip_fidelity(u_a, u_b, basis, f.composed, 1) >= 1.0 - 1e-9);
    }
  }
}

TEST_CASE("oracle forgery rejects non-qubit transforms") {
  CHECK_THROWS_AS(forge_substitution_oracle(UnitaryMatrix::identity(4),
                                            UnitaryMatrix::identity(2),
                                            computational_basis()),
                  std::invalid_argument);
}

TEST_CASE("random forgery emits unitary output deterministically") {
  RandomStream a(51), b(51);
  const UnitaryMatrix u_a = haar_random_unitary(2, a);
  const UnitaryMatrix u_a2 = haar_random_unitary(2, b);
  const ForgedReveal fa = forge_substitution_random(u_a, a);
  const ForgedReveal fb = forge_substitution_random(u_a2, b);
  CHECK(unitarity_defect(fa.v.entries) <= 1e-10);
  CHECK(unitarity_defect(fa.composed.entries) <= 1e-10);
  CHECK((fa.v.entries.array() == fb.v.entries.array()).all());
  CHECK((fa.composed.entries.array() == fb.composed.entries.array()).all());
}

TEST_CASE("random forgery flips the bit half the time") {
  // Haar moment: E|<phi_1|W|phi_0>|^2 = 1/2; 3 sigma at 1e4 trials ~ 0.0087.
  RandomStream rng(52);
  const BasisPair basis = computational_basis();
  double acc = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const UnitaryMatrix u_a = haar_random_unitary(2, rng);
    const UnitaryMatrix u_b = haar_random_unitary(2, rng);
    const ForgedReveal f = forge_substitution_random(u_a, rng);
    acc += flip_fidelity(u_a, u_b, basis, f.composed, 0);
  }
  CHECK(std::abs(acc / n - 0.5) <= 0.02);
}

TEST_CASE("strategy names round-trip") {
  for (StrategyKind k : {StrategyKind::Honest, StrategyKind::RandomSubstitution,
                         StrategyKind::OracleSubstitution, StrategyKind::EprModelAttack}) {
    CHECK(strategy_from_name(strategy_name(k)) == k);
  }
  CHECK_THROWS_AS(strategy_from_name("nope"), std::invalid_argument);
}
