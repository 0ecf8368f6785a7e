#include "qbc/adversary.hpp"

#include <stdexcept>

namespace qbc {

ForgedReveal forge_substitution_oracle(const UnitaryMatrix& u_a,
                                       const UnitaryMatrix& u_b,
                                       const BasisPair& basis) {
  if (u_a.dim() != 2 || u_b.dim() != 2) {
    throw std::invalid_argument("substitution forgery works on qubit transforms");
  }
  const Eigen::Matrix2cd x_phi = basis.phi1.amps * basis.phi0.amps.adjoint() +
                                 basis.phi0.amps * basis.phi1.amps.adjoint();
  const Eigen::Matrix2cd ab = u_a.entries * u_b.entries;
  ForgedReveal out;
  out.v = UnitaryMatrix(ab * x_phi * ab.adjoint());
  out.composed = UnitaryMatrix(out.v.entries * u_a.entries);
  return out;
}

ForgedReveal forge_substitution_random(const UnitaryMatrix& u_a, RandomStream& rng) {
  ForgedReveal out;
  out.v = haar_random_unitary(2, rng);
  out.composed = UnitaryMatrix(out.v.entries * u_a.entries);
  return out;
}

std::string strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Honest: return "honest";
    case StrategyKind::RandomSubstitution: return "random-substitution";
    case StrategyKind::OracleSubstitution: return "oracle-substitution";
    case StrategyKind::EprModelAttack: return "epr-model";
  }
  throw std::logic_error("unreachable");
}

StrategyKind strategy_from_name(const std::string& name) {
  if (name == "honest") return StrategyKind::Honest;
  if (name == "random-substitution" || name == "random") return StrategyKind::RandomSubstitution;
  if (name == "oracle-substitution" || name == "oracle") return StrategyKind::OracleSubstitution;
  if (name == "epr-model" || name == "epr") return StrategyKind::EprModelAttack;
  throw std::invalid_argument("unknown strategy: " + name);
}

}  // namespace qbc
