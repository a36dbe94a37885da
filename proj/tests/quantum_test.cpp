// Copyright 2026 The eprgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "eprgame/behavior.hpp"
#include "eprgame/quantum.hpp"
#include "oracles.hpp"

using namespace eprgame;

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

// Residual of the eigenvalue equation (sigma . n) v = s v, with
// sigma . n = [[0, nx - i ny], [nx + i ny, 0]].
double eigen_residual(const PlanarDirection& n, int sign) {
  const auto v = eigenvector(n, sign);
  const complex_t off(n.nx(), -n.ny());
  const complex_t r0 = off * v[1] - double(sign) * v[0];
  const complex_t r1 = std::conj(off) * v[0] - double(sign) * v[1];
  return std::sqrt(std::norm(r0) + std::norm(r1));
}

double block_correlator(const BehaviorSet& set, int block) {
  return set.values()[BehaviorSet::index(block, 0, 0)] +
         set.values()[BehaviorSet::index(block, 1, 1)] -
         set.values()[BehaviorSet::index(block, 0, 1)] -
         set.values()[BehaviorSet::index(block, 1, 0)];
}

}  // namespace

TEST_CASE("spin eigenvectors satisfy the eigenvalue equation") {
  auto rng = oracles::make_rng(21);
  const double angles[] = {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi, 5.1};
  for (double angle : angles) {
    for (int sign : {+1, -1}) {
      CHECK(eigen_residual(PlanarDirection{angle}, sign) <= 1e-12);
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const double angle = oracles::random_angle(rng);
    CHECK(eigen_residual(PlanarDirection{angle}, +1) <= 1e-12);
    CHECK(eigen_residual(PlanarDirection{angle}, -1) <= 1e-12);
  }
}

TEST_CASE("|00> measured along x for all settings gives the uniform set") {
  const DirectionConfig config{PlanarDirection{0}, PlanarDirection{0},
                               PlanarDirection{0}, PlanarDirection{0}};
  const BehaviorSet set = generate(TwoQubitState::zerozero(), config);
  for (double value : set.values()) {
    CHECK(std::abs(value - 0.25) <= 1e-12);
  }
  CHECK(std::abs(chsh_delta(set)) <= 1e-12);
}

TEST_CASE("|x+>|x-> measured along x reproduces the deterministic set") {
  const DirectionConfig config{PlanarDirection{0}, PlanarDirection{0},
                               PlanarDirection{0}, PlanarDirection{0}};
  const BehaviorSet set = generate(TwoQubitState::plusminus(), config);
  for (int block = 0; block < 4; ++block) {
    CHECK(std::abs(set.values()[BehaviorSet::index(block, 0, 1)] - 1.0) <=
          1e-12);
    CHECK(std::abs(set.values()[BehaviorSet::index(block, 0, 0)]) <= 1e-12);
    CHECK(std::abs(set.values()[BehaviorSet::index(block, 1, 0)]) <= 1e-12);
    CHECK(std::abs(set.values()[BehaviorSet::index(block, 1, 1)]) <= 1e-12);
  }
  CHECK(std::abs(chsh_delta(set) + 2.0) <= 1e-12);
  CHECK(is_factorizable(set));
}

TEST_CASE("singlet correlations follow -cos(theta - phi)") {
  auto rng = oracles::make_rng(22);
  const TwoQubitState singlet = TwoQubitState::singlet();
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = oracles::random_angle(rng);
    const double phi = oracles::random_angle(rng);
    const double p_plus_plus = joint_probability(
        singlet, PlanarDirection{theta}, PlanarDirection{phi}, +1, +1);
    const double half_angle = (theta - phi) / 2.0;
    CHECK(std::abs(p_plus_plus -
                   0.5 * std::sin(half_angle) * std::sin(half_angle)) <=
          1e-12);

    const DirectionConfig config{PlanarDirection{theta}, PlanarDirection{theta},
                                 PlanarDirection{phi}, PlanarDirection{phi}};
    const BehaviorSet set = generate(singlet, config);
    CHECK(std::abs(block_correlator(set, 0) + std::cos(theta - phi)) <= 1e-12);
  }
}

TEST_CASE("singlet at the optimal settings saturates the quantum bound") {
  const DirectionConfig config{PlanarDirection{kPi / 2}, PlanarDirection{0},
                               PlanarDirection{kPi / 4},
                               PlanarDirection{3 * kPi / 4}};
  const BehaviorSet set = generate(TwoQubitState::singlet(), config);
  CHECK(validate(set).valid);
  CHECK(std::abs(chsh_delta(set) + 2.0 * std::sqrt(2.0)) <= 1e-9);
  CHECK(classify(set).regime == ChshRegime::kQuantumViolating);
  CHECK_FALSE(is_factorizable(set));
}

TEST_CASE("swapping the first observer's setting labels cancels the sum") {
  // Same four physical directions as the saturating configuration, with
  // D1 and D2 exchanged for observer 1: the alternating sum degenerates.
  const DirectionConfig config{PlanarDirection{0}, PlanarDirection{kPi / 2},
                               PlanarDirection{kPi / 4},
                               PlanarDirection{3 * kPi / 4}};
  const BehaviorSet set = generate(TwoQubitState::singlet(), config);
  CHECK(validate(set).valid);
  CHECK(std::abs(chsh_delta(set)) <= 1e-12);
}

TEST_CASE("generated sets match the projector oracle") {
  auto rng = oracles::make_rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoQubitState state = oracles::random_state(rng);
    const DirectionConfig config = oracles::random_directions(rng);
    const BehaviorSet set = generate(state, config);
    const std::array<double, 16> expected =
        oracles::projector_oracle(state, config);
    for (size_t j = 0; j < 16; ++j) {
      REQUIRE(std::abs(set.values()[j] - expected[j]) <= 1e-12);
    }
  }
}

TEST_CASE("closed forms for the first block entries match the generator") {
  auto rng = oracles::make_rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoQubitState state = oracles::random_state(rng);
    const DirectionConfig config = oracles::random_directions(rng);
    const BehaviorSet set = generate(state, config);
    const double eps1 =
        oracles::closed_form_plus(state, config.a, config.b, false);
    const double eps2 =
        oracles::closed_form_plus(state, config.a, config.b, true);
    REQUIRE(std::abs(set.eps(1) - eps1) <= 1e-12);
    REQUIRE(std::abs(set.eps(2) - eps2) <= 1e-12);
  }
}

TEST_CASE("random states generate valid sets inside the quantum bound") {
  auto rng = oracles::make_rng(25);
  const double quantum_bound = 2.0 * std::sqrt(2.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const TwoQubitState state = oracles::random_state(rng);
    const DirectionConfig config = oracles::random_directions(rng);
    const BehaviorSet set = generate(state, config);
    const ValidationReport report = validate(set);
    REQUIRE(report.valid);
    REQUIRE(report.max_residual <= 1e-9);
    REQUIRE(std::abs(chsh_delta(set)) <= quantum_bound + 1e-9);
  }
}

TEST_CASE("product states generate factorizable sets") {
  auto rng = oracles::make_rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    // Normalized single-qubit states, tensored by hand.
    std::normal_distribution<double> gauss(0.0, 1.0);
    complex_t u0(gauss(rng), gauss(rng));
    complex_t u1(gauss(rng), gauss(rng));
    complex_t v0(gauss(rng), gauss(rng));
    complex_t v1(gauss(rng), gauss(rng));
    const double nu = std::sqrt(std::norm(u0) + std::norm(u1));
    const double nv = std::sqrt(std::norm(v0) + std::norm(v1));
    if (nu < 1e-6 || nv < 1e-6) continue;
    u0 /= nu;
    u1 /= nu;
    v0 /= nv;
    v1 /= nv;
    const TwoQubitState state(u0 * v0, u0 * v1, u1 * v0, u1 * v1);
    const DirectionConfig config = oracles::random_directions(rng);
    REQUIRE(is_factorizable(generate(state, config)));
  }
}

TEST_CASE("a global phase leaves the generated set unchanged") {
  auto rng = oracles::make_rng(27);
  for (int trial = 0; trial < 50; ++trial) {
    const TwoQubitState state = oracles::random_state(rng);
    const DirectionConfig config = oracles::random_directions(rng);
    const double phase = oracles::random_angle(rng);
    const complex_t factor = std::polar(1.0, phase);
    const TwoQubitState rotated(state.amp(0) * factor, state.amp(1) * factor,
                                state.amp(2) * factor, state.amp(3) * factor);
    const BehaviorSet base = generate(state, config);
    const BehaviorSet turned = generate(rotated, config);
    for (size_t j = 0; j < 16; ++j) {
      REQUIRE(std::abs(base.values()[j] - turned.values()[j]) <= 1e-12);
    }
  }
}

TEST_CASE("unnormalized amplitudes are rejected with the residual") {
  try {
    TwoQubitState state(1.0, 0.0, 0.0, 1.0);
    FAIL("expected NormalizationError");
  } catch (const NormalizationError& e) {
    CHECK(std::abs(e.residual() - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(TwoQubitState(0.5, 0.5, 0.5, 0.4), NormalizationError);
}
