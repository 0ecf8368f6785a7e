#pragma once

#include <utility>

#include "qbc/family.hpp"
#include "qbc/protocol.hpp"
#include "qbc/state.hpp"
#include "qbc/unitary.hpp"

namespace qbc {

// Abstract register model of the entanglement attack: control registers
// |B> and |A> hold uniform superpositions over the parties' transform
// choices, with the two working qubits between them.
//
// Register order [N_B, 2, 2, N_A]; Bob holds registers {0,1}, Alice
// holds registers {2,3}.
struct EprStatePair {
  StateVector psi0;  // commitment-to-0 superposition
  StateVector psi1;  // commitment-to-1 superposition

  int n_bob() const { return psi0.dims[0]; }
  int n_alice() const { return psi0.dims[3]; }
  long bob_dim() const { return 2L * n_bob(); }
  long alice_dim() const { return 2L * n_alice(); }
};

// Desk-scale cap on the joint dimension N_B * 4 * N_A.
inline constexpr long kEprDimCap = 1L << 14;

// Builds psi_b = (N_A N_B)^{-1/2} sum_{A,B} |B> U_A U_B|phi_b> (x)
// U_A U_B|phi_{1-b}> |A>. Both families must be enumerable.
EprStatePair epr_build_states(const UnitaryFamily& alice_family,
                              const UnitaryFamily& bob_family,
                              const BasisPair& basis);

// Trace distance of Bob's reductions of psi0 and psi1; 0 means Bob cannot
// tell the commitments apart before opening.
double epr_check_hiding(const EprStatePair& pair);

// Best local switching unitary on Alice's side and the residual
// || (I (x) V)|psi0> - |psi1> || minimized over a global phase. Solves the
// reshaped system M_0 V^T = M_1 by the polar factor of (M_0^dag M_1)^T,
// which completes null directions to a full unitary and is insensitive to
// degenerate Schmidt spectra.
std::pair<UnitaryMatrix, double> epr_construct_v(const EprStatePair& pair);

// |<psi1| (I (x) V) |psi0>|^2: fidelity of the switched commitment with a
// genuine commitment to the other bit.
double epr_attack_success(const EprStatePair& pair, const UnitaryMatrix& v);

}  // namespace qbc
