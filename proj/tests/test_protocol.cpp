#include <doctest.h>

#include <cmath>

#include "qbc/errors.hpp"
#include "qbc/protocol.hpp"
#include "test_util.hpp"

using namespace qbc;

namespace {

UnitaryFamily identity_singleton() {
  return UnitaryFamily::explicit_list({UnitaryMatrix::identity(2)});
}

ProtocolParams default_params(int m = 1) {
  return ProtocolParams(computational_basis(),
                        UnitaryFamily::rotation_grid({Axis::X, Axis::Y, Axis::Z}, 16),
                        UnitaryFamily::rotation_grid({Axis::X, Axis::Y, Axis::Z}, 16), m);
}

}  // namespace

TEST_CASE("params validation") {
  CHECK_THROWS_AS(ProtocolParams(computational_basis(), identity_singleton(),
                                 identity_singleton(), 0),
                  InvalidConfig);
  CHECK_THROWS_AS(ProtocolParams(computational_basis(), identity_singleton(),
                                 identity_singleton(), 1, 0.0),
                  InvalidConfig);
  CHECK_THROWS_AS(ProtocolParams(computational_basis(), identity_singleton(),
                                 identity_singleton(), 1, 1e-2),
                  InvalidConfig);
  Eigen::VectorXcd skew(2);
  skew << 0.7071067811865476, 0.7071067811865476;
  CHECK_THROWS_AS(BasisPair(ket0(), StateVector({2}, skew)), std::invalid_argument);
}

TEST_CASE("bob_commit_offer: identity family returns the bare basis pair") {
  const ProtocolParams params(computational_basis(), identity_singleton(),
                              identity_singleton(), 2);
  RandomStream rng(1);
  auto [secret, offer] = bob_commit_offer(params, rng);
  REQUIRE(offer.states.size() == 4);
  for (int i = 0; i < 2; ++i) {
    CHECK(fidelity(offer.states[2 * i], params.basis.phi0) == doctest::Approx(1.0));
    CHECK(fidelity(offer.states[2 * i + 1], params.basis.phi1) == doctest::Approx(1.0));
  }
}

TEST_CASE("bob_commit_offer: offered pairs stay orthogonal") {
  for (auto family : {UnitaryFamily::rotation_grid({Axis::X}, 8),
                      UnitaryFamily::haar_continuous(), UnitaryFamily::pauli()}) {
    const ProtocolParams params(computational_basis(), family, family, 3);
    RandomStream rng(2);
    auto [secret, offer] = bob_commit_offer(params, rng);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(inner(offer.states[2 * i], offer.states[2 * i + 1])) <= 1e-9);
    }
  }
}

TEST_CASE("alice_commit: identity transforms pass phi_b through") {
  const ProtocolParams params(computational_basis(), identity_singleton(),
                              identity_singleton(), 3);
  RandomStream rng(3);
  auto [bs, offer] = bob_commit_offer(params, rng);
  auto [as, commit] = alice_commit(0, std::move(offer), params, rng);
  REQUIRE(commit.states.size() == 3);
  for (const auto& s : commit.states) {
    CHECK(fidelity(s, params.basis.phi0) == doctest::Approx(1.0));
    CHECK(s.amps.norm() == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(as.committed_bit == 0);
}

TEST_CASE("alice_commit: malformed offers rejected") {
  const ProtocolParams params = default_params(2);
  RandomStream rng(4);
  auto [bs, offer] = bob_commit_offer(params, rng);

  CommitOffer short_offer;
  short_offer.states = {offer.states[0], offer.states[1]};
  CHECK_THROWS_AS(alice_commit(0, short_offer, params, rng), ProtocolViolation);

  CommitOffer skewed = offer;
  skewed.states[1] = skewed.states[0];
  CHECK_THROWS_AS(alice_commit(0, skewed, params, rng), ProtocolViolation);

  CHECK_THROWS_AS(alice_commit(2, offer, params, rng), std::invalid_argument);
}

TEST_CASE("alice_open: reveals unitary entries and the committed bit") {
  const ProtocolParams params = default_params(2);
  RandomStream rng(5);
  auto [bs, offer] = bob_commit_offer(params, rng);
  auto [as, commit] = alice_commit(1, std::move(offer), params, rng);
  const Reveal reveal = alice_open(as);
  CHECK(reveal.announced_bit == 1);
  REQUIRE(reveal.transforms.size() == 2);
  for (const auto& t : reveal.transforms) CHECK(is_unitary(t));
}

TEST_CASE("bob_verify: honest runs always accept with b' = b") {
  for (int m : {1, 2, 3}) {
    for (int bit : {0, 1}) {
      const ProtocolParams params = default_params(m);
      for (int seed = 0; seed < 30; ++seed) {
        RandomStream rng(seed);
        auto [bs, offer] = bob_commit_offer(params, rng);
        auto [as, commit] = alice_commit(bit, std::move(offer), params, rng);
        const Verdict v = bob_verify(bs, commit, alice_open(as), params, rng);
        CHECK(v.accepted);
        CHECK(v.opened_bit == bit);
        CHECK(v.reason.empty());
      }
    }
  }
}

TEST_CASE("bob_verify: haar-substituted reveal flips the bit half the time") {
  // Substituting V U_A with Haar V makes the undone state Haar-random, so
  // |<phi_flip|W|phi>|^2 averages to 1/2 (3 sigma at 1e4 is 0.015).
  const ProtocolParams params = default_params(1);
  RandomStream rng(77);
  int accepted = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    auto [bs, offer] = bob_commit_offer(params, rng);
    auto [as, commit] = alice_commit(0, std::move(offer), params, rng);
    Reveal reveal = alice_open(as);
    reveal.announced_bit = 1;
    reveal.transforms[0] = haar_random_unitary(2, rng).entries * reveal.transforms[0];
    accepted += bob_verify(bs, commit, reveal, params, rng).accepted ? 1 : 0;
  }
  CHECK(std::abs(accepted / static_cast<double>(n) - 0.5) <= 0.02);
}

TEST_CASE("bob_verify: scaled reveal entries give the invalid-reveal verdict") {
  const ProtocolParams params = default_params(1);
  RandomStream rng(6);
  auto [bs, offer] = bob_commit_offer(params, rng);
  auto [as, commit] = alice_commit(0, std::move(offer), params, rng);
  Reveal reveal = alice_open(as);
  reveal.transforms[0] *= 2.0;
  const Verdict v = bob_verify(bs, commit, reveal, params, rng);
  CHECK(!v.accepted);
  CHECK(v.reason == "invalid-reveal");
  CHECK(v.opened_bit == -1);
}

TEST_CASE("bob_verify: global phase on the reveal never changes the verdict") {
  const ProtocolParams params = default_params(2);
  for (int seed = 0; seed < 20; ++seed) {
    RandomStream rng(seed);
    auto [bs, offer] = bob_commit_offer(params, rng);
    auto [as, commit] = alice_commit(seed % 2, std::move(offer), params, rng);
    const Reveal reveal = alice_open(as);
    Reveal phased = reveal;
    for (auto& t : phased.transforms) t *= std::polar(1.0, 1.9);

    RandomStream rng_a(1000 + seed), rng_b(1000 + seed);
    const Verdict va = bob_verify(bs, commit, reveal, params, rng_a);
    const Verdict vb = bob_verify(bs, commit, phased, params, rng_b);
    CHECK(va.accepted == vb.accepted);
    CHECK(va.opened_bit == vb.opened_bit);
  }
}

TEST_CASE("bob_verify: m-instance verdict is the conjunction of instances") {
  const ProtocolParams params = default_params(3);
  const ProtocolParams single = default_params(1);
  RandomStream rng(8);
  auto [bs, offer] = bob_commit_offer(params, rng);
  auto [as, commit] = alice_commit(0, std::move(offer), params, rng);
  Reveal reveal = alice_open(as);
  // Corrupt instance 1 so outcomes mix.
  reveal.transforms[1] = haar_random_unitary(2, rng).entries * reveal.transforms[1];

  RandomStream rng_joint(99), rng_single(99);
  const Verdict joint = bob_verify(bs, commit, reveal, params, rng_joint);

  bool conj = true;
  for (int i = 0; i < 3; ++i) {
    BobSecret bsi{{bs.transforms[i]}};
    CommitState ci{{commit.states[i]}};
    Reveal ri;
    ri.announced_bit = reveal.announced_bit;
    ri.transforms = {reveal.transforms[i]};
    conj = conj && bob_verify(bsi, ci, ri, single, rng_single).accepted;
  }
  CHECK(joint.accepted == conj);
}

TEST_CASE("bob_verify: shape violations throw") {
  const ProtocolParams params = default_params(2);
  RandomStream rng(9);
  auto [bs, offer] = bob_commit_offer(params, rng);
  auto [as, commit] = alice_commit(0, std::move(offer), params, rng);
  Reveal reveal = alice_open(as);
  reveal.transforms.pop_back();
  CHECK_THROWS_AS(bob_verify(bs, commit, reveal, params, rng), ProtocolViolation);
  Reveal bad_bit = alice_open(as);
  bad_bit.announced_bit = 7;
  CHECK_THROWS_AS(bob_verify(bs, commit, bad_bit, params, rng), ProtocolViolation);
}

TEST_CASE("run_honest: both bits accept and the transcript is complete") {
  const ProtocolParams params = default_params(2);
  for (int bit : {0, 1}) {
    RandomStream rng(10 + bit);
    const Transcript t = run_honest(params, bit, rng);
    REQUIRE(t.outcome.has_value());
    CHECK(t.outcome->accepted);
    CHECK(t.outcome->opened_bit == bit);
    REQUIRE(t.entries.size() == 4);
    CHECK(std::holds_alternative<CommitOffer>(t.entries[0].message));
    CHECK(std::holds_alternative<CommitState>(t.entries[1].message));
    CHECK(std::holds_alternative<Reveal>(t.entries[2].message));
    CHECK(std::holds_alternative<Verdict>(t.entries[3].message));
    CHECK(transcript_is_complete(t));
  }
}

TEST_CASE("run_honest: 500 seeded runs all accept") {
  const ProtocolParams params = default_params(1);
  for (int seed = 0; seed < 500; ++seed) {
    RandomStream rng(seed);
    const Transcript t = run_honest(params, seed % 2, rng);
    CHECK(t.outcome->accepted);
  }
}

TEST_CASE("inverse identity: undo of commit reconstructs phi_b") {
  const ProtocolParams params = default_params(1);
  for (int seed = 0; seed < 50; ++seed) {
    RandomStream rng(seed);
    auto [bs, offer] = bob_commit_offer(params, rng);
    auto [as, commit] = alice_commit(seed % 2, std::move(offer), params, rng);
    const StateVector undone =
        apply(adjoint(bs.transforms[0]), apply(adjoint(as.transforms[0]), commit.states[0], {0}), {0});
    CHECK(fidelity(undone, params.basis.state_for(seed % 2)) >= 1.0 - 1e-9);
  }
}
