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

#include <array>
#include <cmath>

#include <doctest.h>

#include "eprgame/game.hpp"
#include "oracles.hpp"

using namespace eprgame;

namespace {

constexpr Action B = Action::kB;
constexpr Action S = Action::kS;

void check_quad(const PayoffQuadruple& got, double a1, double a2, double b1,
                double b2, double tol = 1e-12) {
  CHECK(std::abs(got.a1 - a1) <= tol);
  CHECK(std::abs(got.a2 - a2) <= tol);
  CHECK(std::abs(got.b1 - b1) <= tol);
  CHECK(std::abs(got.b2 - b2) <= tol);
}

StrategyProfile vertex_of(const PureQuadruple& pq) {
  const auto bit = [](Action a) { return a == B ? 1.0 : 0.0; };
  return StrategyProfile(bit(pq.alice1), bit(pq.alice2), bit(pq.bob1),
                         bit(pq.bob2));
}

const std::array<double, 16> kEquilibriumEps = {0, 1, 0, 0, 0, 1, 0, 0,
                                                0, 1, 0, 0, 0, 1, 0, 0};

}  // namespace

TEST_CASE("standard preset block payoffs") {
  const GameSpec spec = GameSpec::standard(0.5);
  CHECK(spec.has_standard_blocks());
  CHECK(spec.alice_type_prob() == 0.5);

  // (Alice type 1, Bob type 1): both want to meet, B favors Alice.
  CHECK(spec.block(0, 0)[0][0].row == 2.0);
  CHECK(spec.block(0, 0)[0][0].col == 1.0);
  CHECK(spec.block(0, 0)[1][1].row == 1.0);
  CHECK(spec.block(0, 0)[1][1].col == 2.0);
  CHECK(spec.block(0, 0)[0][1].row == 0.0);

  // (Alice type 1, Bob type 2): Bob avoids, scoring 2 for a miss.
  CHECK(spec.block(0, 1)[0][1].col == 2.0);
  CHECK(spec.block(0, 1)[1][0].col == 1.0);
  CHECK(spec.block(0, 1)[0][0].col == 0.0);

  // (Alice type 2, Bob type 1): Alice avoids, scoring 2 for a miss.
  CHECK(spec.block(1, 0)[0][1].row == 2.0);
  CHECK(spec.block(1, 0)[1][0].row == 1.0);

  // (Alice type 2, Bob type 2): both avoid.
  CHECK(spec.block(1, 1)[0][1].row == 2.0);
  CHECK(spec.block(1, 1)[0][1].col == 2.0);
  CHECK(spec.block(1, 1)[0][0].row == 0.0);
}

TEST_CASE("non-standard blocks are detected and validated") {
  auto blocks = GameSpec::standard(0.5).blocks();
  blocks[0][0][0].row = 3.0;
  const GameSpec tweaked(0.5, 0.5, blocks);
  CHECK_FALSE(tweaked.has_standard_blocks());

  CHECK_THROWS_AS(GameSpec::standard(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(GameSpec::standard(1.1), std::invalid_argument);
  CHECK_THROWS_AS(GameSpec::standard(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(GameSpec::standard(0.5, 1.5), std::invalid_argument);
  blocks[0][0][0].row = std::nan("");
  CHECK_THROWS_AS(GameSpec(0.5, 0.5, blocks), std::invalid_argument);
}

TEST_CASE("one-sided game cells and its unique pure equilibrium") {
  const OneSidedGame game = one_sided_table(GameSpec::standard(0.5));

  const double expected[2][4][2] = {
      {{2.0, 0.5}, {1.0, 1.5}, {1.0, 0.0}, {0.0, 1.0}},
      {{0.0, 0.5}, {0.5, 0.0}, {0.5, 1.5}, {1.0, 1.0}}};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 4; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(game.cells[r][c].alice ==
            doctest::Approx(expected[r][c][0]).epsilon(1e-12));
      CHECK(game.cells[r][c].bob ==
            doctest::Approx(expected[r][c][1]).epsilon(1e-12));
    }
  }

  REQUIRE(game.pure_equilibria.size() == 1);
  CHECK(game.pure_equilibria[0].first == B);
  CHECK(game.pure_equilibria[0].second == std::array<Action, 2>{B, S});
}

TEST_CASE("pure strategy payoffs at the two-sided equilibria") {
  const GameSpec spec = GameSpec::standard(2.0 / 3.0);
  check_quad(pure_payoffs(spec, {S, B, S, S}), 1.0, 2.0, 4.0 / 3.0, 2.0 / 3.0);
  check_quad(pure_payoffs(spec, {B, B, B, S}), 1.0, 1.0, 1.0, 2.0);
  // Everyone at B: the avoiding types meet everyone and collect nothing.
  check_quad(pure_payoffs(spec, {B, B, B, B}), 2.0, 0.0, 1.0, 0.0);
}

TEST_CASE("mixed payoffs at the interior example and the uniform profile") {
  const GameSpec spec = GameSpec::standard(2.0 / 3.0);
  check_quad(mixed_payoffs(spec, StrategyProfile(0.5, 1, 2.0 / 3.0, 0)),
             2.0 / 3.0, 4.0 / 3.0, 2.0 / 3.0, 4.0 / 3.0);
  check_quad(mixed_payoffs(spec, StrategyProfile(0.5, 0.5, 0.5, 0.5)), 0.75,
             0.75, 0.75, 0.75);

  // At this profile Bob type 2's payoff is 2 - omega for every omega.
  for (double omega : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const PayoffQuadruple pay = mixed_payoffs(
        GameSpec::standard(omega), StrategyProfile(0.5, 1, 2.0 / 3.0, 0));
    CHECK(std::abs(pay.b2 - (2.0 - omega)) <= 1e-12);
  }
}

TEST_CASE("payoffs are affine in each profile component") {
  auto rng = oracles::make_rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const GameSpec spec = GameSpec::standard(oracles::uniform01(rng));
    const StrategyProfile base = oracles::random_profile(rng);
    for (int slot = 0; slot < 4; ++slot) {
      const double lo = oracles::uniform01(rng);
      const double hi = oracles::uniform01(rng);
      const auto at = [&](double x) {
        std::array<double, 4> c = {base.p, base.q, base.p_prime,
                                   base.q_prime};
        c[static_cast<size_t>(slot)] = x;
        return mixed_payoffs(spec, StrategyProfile(c[0], c[1], c[2], c[3]));
      };
      const PayoffQuadruple at_lo = at(lo);
      const PayoffQuadruple at_hi = at(hi);
      const PayoffQuadruple at_mid = at((lo + hi) / 2.0);
      REQUIRE(std::abs(at_mid.a1 - (at_lo.a1 + at_hi.a1) / 2.0) <= 1e-12);
      REQUIRE(std::abs(at_mid.a2 - (at_lo.a2 + at_hi.a2) / 2.0) <= 1e-12);
      REQUIRE(std::abs(at_mid.b1 - (at_lo.b1 + at_hi.b1) / 2.0) <= 1e-12);
      REQUIRE(std::abs(at_mid.b2 - (at_lo.b2 + at_hi.b2) / 2.0) <= 1e-12);
    }
  }
}

TEST_CASE("pure, mixed, and set-driven payoffs agree at every vertex") {
  auto rng = oracles::make_rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const GameSpec spec = GameSpec::standard(oracles::uniform01(rng));
    for (Action a1 : kActions) {
      for (Action a2 : kActions) {
        for (Action b1 : kActions) {
          for (Action b2 : kActions) {
            const PureQuadruple pq{a1, a2, b1, b2};
            const StrategyProfile vertex = vertex_of(pq);
            const PayoffQuadruple pure = pure_payoffs(spec, pq);
            const PayoffQuadruple mixed = mixed_payoffs(spec, vertex);
            const PayoffQuadruple via_set =
                epr_payoffs(spec, from_factorizable(vertex));
            check_quad(mixed, pure.a1, pure.a2, pure.b1, pure.b2);
            check_quad(via_set, pure.a1, pure.a2, pure.b1, pure.b2);
          }
        }
      }
    }
  }
}

TEST_CASE("set-driven payoffs reduce to mixed payoffs on product sets") {
  auto rng = oracles::make_rng(33);
  for (int trial = 0; trial < 10000; ++trial) {
    const GameSpec spec = GameSpec::standard(oracles::uniform01(rng));
    const StrategyProfile s = oracles::random_profile(rng);
    const PayoffQuadruple expected = mixed_payoffs(spec, s);
    const PayoffQuadruple got = epr_payoffs(spec, from_factorizable(s));
    REQUIRE(std::abs(got.a1 - expected.a1) <= 1e-12);
    REQUIRE(std::abs(got.a2 - expected.a2) <= 1e-12);
    REQUIRE(std::abs(got.b1 - expected.b1) <= 1e-12);
    REQUIRE(std::abs(got.b2 - expected.b2) <= 1e-12);
    REQUIRE(got.a1 >= -1e-12);
    REQUIRE(got.a1 <= 2.0 + 1e-12);
  }
}

TEST_CASE("set-driven payoffs at the non-factorizable equilibrium set") {
  const BehaviorSet set(kEquilibriumEps);
  for (double omega : {0.0, 0.3, 0.5, 2.0 / 3.0, 1.0}) {
    check_quad(epr_payoffs(GameSpec::standard(omega), set), 0.0, 2.0, 0.0,
               2.0);
  }
}

TEST_CASE("set-driven payoffs reject invalid sets") {
  std::array<double, 16> eps = {1,    0,    0,    0,    0,    0,    0,    1,
                                0.25, 0.25, 0.25, 0.25, 0.25, 0.25, 0.25, 0.25};
  CHECK_THROWS_AS(epr_payoffs(GameSpec::standard(0.5), BehaviorSet(eps)),
                  ConstraintError);
}

TEST_CASE("octet closed forms match block contraction") {
  auto rng = oracles::make_rng(34);
  for (int trial = 0; trial < 1000; ++trial) {
    const GameSpec spec = GameSpec::standard(oracles::uniform01(rng));
    const IndependentOctet octet = oracles::random_octet(rng);
    const PayoffQuadruple direct = epr_payoffs(spec, reconstruct(octet));
    const PayoffQuadruple closed = epr_payoffs_mu(spec, octet);
    REQUIRE(std::abs(closed.a1 - direct.a1) <= 1e-12);
    REQUIRE(std::abs(closed.a2 - direct.a2) <= 1e-12);
    REQUIRE(std::abs(closed.b1 - direct.b1) <= 1e-12);
    REQUIRE(std::abs(closed.b2 - direct.b2) <= 1e-12);
  }
}

TEST_CASE("octet payoffs fall back to contraction for non-standard blocks") {
  auto rng = oracles::make_rng(35);
  auto blocks = GameSpec::standard(0.5).blocks();
  blocks[1][0][1].col = 1.75;
  blocks[2][1][0].row = 0.25;
  const GameSpec tweaked(0.4, 0.3, blocks);
  for (int trial = 0; trial < 100; ++trial) {
    const IndependentOctet octet = oracles::random_octet(rng);
    const PayoffQuadruple direct = epr_payoffs(tweaked, reconstruct(octet));
    const PayoffQuadruple closed = epr_payoffs_mu(tweaked, octet);
    REQUIRE(std::abs(closed.a1 - direct.a1) <= 1e-12);
    REQUIRE(std::abs(closed.a2 - direct.a2) <= 1e-12);
    REQUIRE(std::abs(closed.b1 - direct.b1) <= 1e-12);
    REQUIRE(std::abs(closed.b2 - direct.b2) <= 1e-12);
  }
}

TEST_CASE("action names") {
  CHECK(to_string(B) == "B");
  CHECK(to_string(S) == "S");
}
