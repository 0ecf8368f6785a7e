#include <doctest.h>

#include <cmath>
#include <limits>

#include "qbc/unitary.hpp"
#include "test_util.hpp"

using namespace qbc;

namespace {
const double kInvSqrt2 = 0.7071067811865476;
}

TEST_CASE("rotation_gate: zero angle about z is the identity") {
  const UnitaryMatrix r = rotation_gate(Axis::Z, 0.0);
  CHECK(testutil::max_abs_diff(r.entries, Eigen::Matrix2cd::Identity()) < 1e-12);
}

TEST_CASE("rotation_gate: R_x(pi)|0> = -i|1>") {
  const StateVector out = apply(rotation_gate(Axis::X, M_PI), ket0(), {0});
  CHECK(std::abs(out.amps[0]) < 1e-12);
  CHECK(std::abs(out.amps[1] - Complex(0.0, -1.0)) < 1e-12);
}

TEST_CASE("rotation_gate: R_y(pi/2)|0> = (|0>+|1>)/sqrt(2)") {
  // Hand-multiplied 2x2: cos(pi/4)|0> + sin(pi/4)|1>.
  const StateVector out = apply(rotation_gate(Axis::Y, M_PI / 2.0), ket0(), {0});
  CHECK(std::abs(out.amps[0] - Complex(kInvSqrt2, 0.0)) < 1e-12);
  CHECK(std::abs(out.amps[1] - Complex(kInvSqrt2, 0.0)) < 1e-12);
}

TEST_CASE("rotation_gate: non-finite angle rejected") {
  CHECK_THROWS_AS(rotation_gate(Axis::X, std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation_gate(Axis::Z, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("adjoint: identity, rotation inverse, involution") {
  CHECK(testutil::max_abs_diff(adjoint(UnitaryMatrix::identity(3)).entries,
                               Eigen::Matrix3cd::Identity()) < 1e-12);

  for (double theta : {0.3, 1.1, -2.5}) {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      CHECK(testutil::max_abs_diff(adjoint(rotation_gate(a, theta)).entries,
                                   rotation_gate(a, -theta).entries) < 1e-12);
    }
  }

  RandomStream rng(11);
  for (int i = 0; i < 10; ++i) {
    const UnitaryMatrix u = haar_random_unitary(4, rng);
    CHECK(testutil::max_abs_diff(adjoint(adjoint(u)).entries, u.entries) < 1e-12);
    CHECK(testutil::max_abs_diff((adjoint(u).entries * u.entries).eval(),
                                 Eigen::Matrix4cd::Identity()) < 1e-9);
  }
}

TEST_CASE("tensor: I (x) I = I(4)") {
  const UnitaryMatrix t = tensor(UnitaryMatrix::identity(2), UnitaryMatrix::identity(2));
  CHECK(testutil::max_abs_diff(t.entries, Eigen::Matrix4cd::Identity()) < 1e-12);
}

TEST_CASE("unitarity check rejects non-unitary entries") {
  Eigen::Matrix2cd bad = 2.0 * Eigen::Matrix2cd::Identity();
  CHECK(!is_unitary(bad));
  CHECK_THROWS_AS(UnitaryMatrix{bad}, std::invalid_argument);
}

TEST_CASE("haar_random_unitary: unitarity within 1e-10") {
  RandomStream rng(42);
  for (int dim : {1, 2, 3, 4, 8}) {
    for (int i = 0; i < 20; ++i) {
      const UnitaryMatrix u = haar_random_unitary(dim, rng);
      CHECK(unitarity_defect(u.entries) <= 1e-10);
    }
  }
}

TEST_CASE("haar_random_unitary: same seed gives identical matrices") {
  RandomStream a(123), b(123);
  for (int i = 0; i < 5; ++i) {
    const UnitaryMatrix ua = haar_random_unitary(3, a);
    const UnitaryMatrix ub = haar_random_unitary(3, b);
    CHECK((ua.entries.array() == ub.entries.array()).all());
  }
}

TEST_CASE("haar_random_unitary: mean |<0|U|0>|^2 is 1/2 for dim 2") {
  // Haar first moment; 3-sigma of the sample mean at 1e4 draws is ~0.009.
  RandomStream rng(7);
  double acc = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    acc += std::norm(haar_random_unitary(2, rng).entries(0, 0));
  }
  CHECK(acc / n == doctest::Approx(0.5).epsilon(0.04));
}
