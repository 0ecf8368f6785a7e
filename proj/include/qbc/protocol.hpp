#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qbc/family.hpp"
#include "qbc/rng.hpp"
#include "qbc/state.hpp"
#include "qbc/unitary.hpp"

namespace qbc {

// The two agreed-upon orthogonal qubit states encoding the bit values.
struct BasisPair {
  StateVector phi0;
  StateVector phi1;

  BasisPair(StateVector phi0_, StateVector phi1_);

  const StateVector& state_for(int bit) const { return bit == 0 ? phi0 : phi1; }
};

BasisPair computational_basis();

struct ProtocolParams {
  BasisPair basis;
  UnitaryFamily alice_family;
  UnitaryFamily bob_family;
  int instances = 1;        // parallel single-qubit commitments (m)
  double tolerance = 1e-9;  // reveal unitarity tolerance, in (0, 1e-3]

  ProtocolParams(BasisPair basis_, UnitaryFamily alice, UnitaryFamily bob,
                 int instances_ = 1, double tolerance_ = 1e-9);
};

// -- Messages ---------------------------------------------------------------

// Bob -> Alice: per instance the pair (U_B|phi0>, U_B|phi1>), flattened as
// states[2*i + bit].
struct CommitOffer {
  std::vector<StateVector> states;
};

// Alice -> Bob: per instance U_A applied to the offered state for her bit.
struct CommitState {
  std::vector<StateVector> states;
};

// Alice -> Bob over the classical channel: row-major 2x2 entries of each
// U_A plus the announced bit.
struct Reveal {
  std::vector<Eigen::Matrix2cd> transforms;
  int announced_bit = 0;
};

// Bob's decision. reason is "" on acceptance, "mismatch" when a measurement
// disagrees with the announced bit, "invalid-reveal" when a revealed
// transform fails the unitarity tolerance. opened_bit is the common measured
// bit, or -1 when instances disagree or the reveal was invalid.
struct Verdict {
  bool accepted = false;
  int opened_bit = -1;
  std::string reason;
};

using Message = std::variant<CommitOffer, CommitState, Reveal, Verdict>;

enum class Phase { Commit, Open };
enum class Sender { Alice, Bob };

struct TranscriptEntry {
  Phase phase;
  Sender sender;
  Message message;
};

struct Transcript {
  std::vector<TranscriptEntry> entries;
  std::optional<Verdict> outcome;
};

// A completed run carries exactly one message of each kind, commit phase
// before open phase.
bool transcript_is_complete(const Transcript& t);

// -- Role secrets -----------------------------------------------------------

struct BobSecret {
  std::vector<UnitaryMatrix> transforms;  // U_B per instance
};

struct AliceSecret {
  std::vector<UnitaryMatrix> transforms;  // U_A per instance
  int committed_bit = 0;
};

// -- Protocol steps ---------------------------------------------------------

// Commit phase, Bob's move: samples U_B per instance and offers the two
// transformed basis states.
std::pair<BobSecret, CommitOffer> bob_commit_offer(const ProtocolParams& params,
                                                   RandomStream& rng);

// Commit phase, Alice's move: samples U_A per instance and returns the
// committed states for her bit. The offer is consumed.
std::pair<AliceSecret, CommitState> alice_commit(int bit, CommitOffer offer,
                                                 const ProtocolParams& params,
                                                 RandomStream& rng);

// Opening phase, Alice's move: reveals the U_A entries and the committed bit.
Reveal alice_open(const AliceSecret& secret);

// Opening phase, Bob's move: undoes the revealed transform and his own,
// measures each instance in {phi0, phi1}, and accepts iff every outcome
// equals the announced bit.
Verdict bob_verify(const BobSecret& secret, const CommitState& commit,
                   const Reveal& reveal, const ProtocolParams& params,
                   RandomStream& rng);

// Full honest run: offer -> commit -> reveal -> verify.
Transcript run_honest(const ProtocolParams& params, int bit, RandomStream& rng);

}  // namespace qbc
