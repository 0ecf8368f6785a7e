#include "qbc/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "qbc/errors.hpp"

namespace qbc {

BasisPair::BasisPair(StateVector phi0_, StateVector phi1_)
    : phi0(std::move(phi0_)), phi1(std::move(phi1_)) {
  if (phi0.total_dim() != 2 || phi1.total_dim() != 2) {
    throw std::invalid_argument("basis states must be single qubits");
  }
  if (std::abs(inner(phi0, phi1)) > kAlgebraTol) {
    throw std::invalid_argument("basis states must be orthogonal");
  }
}

BasisPair computational_basis() { return BasisPair(ket0(), ket1()); }

ProtocolParams::ProtocolParams(BasisPair basis_, UnitaryFamily alice, UnitaryFamily bob,
                               int instances_, double tolerance_)
    : basis(std::move(basis_)),
      alice_family(std::move(alice)),
      bob_family(std::move(bob)),
      instances(instances_),
      tolerance(tolerance_) {
  if (instances < 1) throw InvalidConfig("instance count must be >= 1");
  if (!(tolerance > 0.0) || tolerance > 1e-3) {
    throw InvalidConfig("reveal tolerance must lie in (0, 1e-3]");
  }
}

std::pair<BobSecret, CommitOffer> bob_commit_offer(const ProtocolParams& params,
                                                   RandomStream& rng) {
  BobSecret secret;
  CommitOffer offer;
  secret.transforms.reserve(params.instances);
  offer.states.reserve(2 * params.instances);
  for (int i = 0; i < params.instances; ++i) {
    UnitaryMatrix u_b = params.bob_family.sample(rng);
    offer.states.push_back(apply(u_b, params.basis.phi0, {0}));
    offer.states.push_back(apply(u_b, params.basis.phi1, {0}));
    secret.transforms.push_back(std::move(u_b));
  }
  return {std::move(secret), std::move(offer)};
}

std::pair<AliceSecret, CommitState> alice_commit(int bit, CommitOffer offer,
                                                 const ProtocolParams& params,
                                                 RandomStream& rng) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("committed bit must be 0 or 1");
  if (offer.states.size() != static_cast<std::size_t>(2 * params.instances)) {
    throw ProtocolViolation("commit offer must carry two states per instance");
  }
  for (int i = 0; i < params.instances; ++i) {
    const StateVector& a = offer.states[2 * i];
    const StateVector& b = offer.states[2 * i + 1];
    if (a.total_dim() != 2 || b.total_dim() != 2) {
      throw ProtocolViolation("offered states must be single qubits");
    }
    if (std::abs(inner(a, b)) > kAlgebraTol) {
      throw ProtocolViolation("offered states must stay orthogonal");
    }
  }

  AliceSecret secret;
  secret.committed_bit = bit;
  CommitState commit;
  secret.transforms.reserve(params.instances);
  commit.states.reserve(params.instances);
  for (int i = 0; i < params.instances; ++i) {
    UnitaryMatrix u_a = params.alice_family.sample(rng);
    commit.states.push_back(apply(u_a, offer.states[2 * i + bit], {0}));
    secret.transforms.push_back(std::move(u_a));
  }
  return {std::move(secret), std::move(commit)};
}

Reveal alice_open(const AliceSecret& secret) {
  Reveal reveal;
  reveal.announced_bit = secret.committed_bit;
  reveal.transforms.reserve(secret.transforms.size());
  for (const auto& u : secret.transforms) {
    reveal.transforms.push_back(u.entries);
  }
  return reveal;
}

Verdict bob_verify(const BobSecret& secret, const CommitState& commit,
                   const Reveal& reveal, const ProtocolParams& params,
                   RandomStream& rng) {
  const std::size_t m = secret.transforms.size();
  if (commit.states.size() != m || reveal.transforms.size() != m) {
    throw ProtocolViolation("commit/reveal instance counts do not match");
  }
  if (reveal.announced_bit != 0 && reveal.announced_bit != 1) {
    throw ProtocolViolation("announced bit must be 0 or 1");
  }

  for (const auto& t : reveal.transforms) {
    if (!is_unitary(t, params.tolerance)) {
      return Verdict{false, -1, "invalid-reveal"};
    }
  }

  // Projective measurement in {phi0, phi1} on the undone state, inlined so a
  // reveal that is only tolerance-level unitary cannot trip the state-norm
  // gate. One uniform draw per instance, in instance order.
  bool all_match = true;
  int common = -2;
  for (std::size_t i = 0; i < m; ++i) {
    if (commit.states[i].total_dim() != 2) {
      throw ProtocolViolation("committed states must be single qubits");
    }
    const Eigen::Vector2cd undone = secret.transforms[i].entries.adjoint() *
                                    (reveal.transforms[i].adjoint() * commit.states[i].amps);
    const double p0 = std::norm(params.basis.phi0.amps.dot(undone));
    const double p1 = std::norm(params.basis.phi1.amps.dot(undone));
    const int outcome = rng.uniform() * (p0 + p1) < p0 ? 0 : 1;
    if (common == -2) {
      common = outcome;
    } else if (common != outcome) {
      common = -1;
    }
    if (outcome != reveal.announced_bit) all_match = false;
  }

  Verdict v;
  v.accepted = all_match;
  v.opened_bit = common;
  v.reason = all_match ? "" : "mismatch";
  return v;
}

Transcript run_honest(const ProtocolParams& params, int bit, RandomStream& rng) {
  Transcript t;
  auto [bob_secret, offer] = bob_commit_offer(params, rng);
  t.entries.push_back({Phase::Commit, Sender::Bob, offer});
  auto [alice_secret, commit] = alice_commit(bit, std::move(offer), params, rng);
  t.entries.push_back({Phase::Commit, Sender::Alice, commit});
  const Reveal reveal = alice_open(alice_secret);
  t.entries.push_back({Phase::Open, Sender::Alice, reveal});
  const Verdict verdict = bob_verify(bob_secret, commit, reveal, params, rng);
  t.entries.push_back({Phase::Open, Sender::Bob, verdict});
  t.outcome = verdict;
  return t;
}

bool transcript_is_complete(const Transcript& t) {
  int offers = 0, commits = 0, reveals = 0, verdicts = 0;
  bool open_seen = false;
  for (const auto& e : t.entries) {
    if (e.phase == Phase::Open) {
      open_seen = true;
    } else if (open_seen) {
      return false;  // commit after open
    }
    offers += std::holds_alternative<CommitOffer>(e.message) ? 1 : 0;
    commits += std::holds_alternative<CommitState>(e.message) ? 1 : 0;
    reveals += std::holds_alternative<Reveal>(e.message) ? 1 : 0;
    verdicts += std::holds_alternative<Verdict>(e.message) ? 1 : 0;
  }
  return offers == 1 && commits == 1 && reveals == 1 && verdicts == 1 &&
         t.outcome.has_value();
}

}  // namespace qbc
