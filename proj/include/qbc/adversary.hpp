#pragma once

#include <optional>
#include <string>

#include "qbc/family.hpp"
#include "qbc/protocol.hpp"
#include "qbc/rng.hpp"
#include "qbc/unitary.hpp"

namespace qbc {

// A substituted opening: Alice reveals composed = V * U_A instead of U_A.
struct ForgedReveal {
  UnitaryMatrix v;
  UnitaryMatrix composed;
};

// Oracle forger: knows U_B and builds V = U_A U_B X_phi U_B^dag U_A^dag with
// X_phi = |phi1><phi0| + |phi0><phi1|, so Bob's verification opens the
// flipped bit exactly.
ForgedReveal forge_substitution_oracle(const UnitaryMatrix& u_a,
                                       const UnitaryMatrix& u_b,
                                       const BasisPair& basis);

// Blind forger: V is Haar-random, the best available without knowing U_B.
ForgedReveal forge_substitution_random(const UnitaryMatrix& u_a, RandomStream& rng);

// -- Strategy selection for the binding game ---------------------------------

enum class StrategyKind { Honest, RandomSubstitution, OracleSubstitution, EprModelAttack };

struct AttackStrategy {
  StrategyKind kind = StrategyKind::Honest;
  // EprModelAttack only: the family of Bob transforms the attacker assumes
  // when constructing her switching unitary. Must be enumerable.
  std::optional<UnitaryFamily> assumed_bob_family;

  static AttackStrategy honest() { return {StrategyKind::Honest, std::nullopt}; }
  static AttackStrategy random_substitution() {
    return {StrategyKind::RandomSubstitution, std::nullopt};
  }
  static AttackStrategy oracle_substitution() {
    return {StrategyKind::OracleSubstitution, std::nullopt};
  }
  static AttackStrategy epr_model(UnitaryFamily assumed_bob) {
    return {StrategyKind::EprModelAttack, std::move(assumed_bob)};
  }
};

std::string strategy_name(StrategyKind kind);
StrategyKind strategy_from_name(const std::string& name);

}  // namespace qbc
