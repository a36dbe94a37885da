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
#include <numbers>

#include <doctest.h>

#include "eprgame/json_io.hpp"
#include "oracles.hpp"

using namespace eprgame;

TEST_CASE("doubles are emitted with full round-trip precision") {
  CHECK(json(1.0 / 3.0).dump() == "0.3333333333333333");
  const double delta = -2.0 * std::sqrt(2.0);
  CHECK(json::parse(json(delta).dump()).get<double>() == delta);
}

TEST_CASE("behavior sets and octets round-trip bit-exactly") {
  auto rng = oracles::make_rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const BehaviorSet set = reconstruct(oracles::random_octet(rng));
    const BehaviorSet back =
        parse_behavior(json::parse(json_of(set).dump()));
    REQUIRE(back == set);

    const IndependentOctet octet = independent_part(set);
    REQUIRE(parse_octet(json::parse(json_of(octet).dump())) == octet);
  }
  const json j = json_of(reconstruct(oracles::random_octet(rng)));
  CHECK(j.contains("eps"));
  CHECK(j["eps"].size() == 16);
}

TEST_CASE("profiles round-trip as bare arrays") {
  auto rng = oracles::make_rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const StrategyProfile s = oracles::random_profile(rng);
    const json j = json_of(s);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 4);
    REQUIRE(parse_profile(json::parse(j.dump())) == s);
  }
}

TEST_CASE("states and directions round-trip bit-exactly") {
  auto rng = oracles::make_rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoQubitState state = oracles::random_state(rng);
    const TwoQubitState back = parse_state(json::parse(json_of(state).dump()));
    for (int k = 0; k < 4; ++k) {
      REQUIRE(back.amp(k) == state.amp(k));
    }

    const DirectionConfig dirs = oracles::random_directions(rng);
    const DirectionConfig dback =
        parse_directions(json::parse(json_of(dirs).dump()));
    REQUIRE(dback.a.angle == dirs.a.angle);
    REQUIRE(dback.c.angle == dirs.c.angle);
    REQUIRE(dback.b.angle == dirs.b.angle);
    REQUIRE(dback.d.angle == dirs.d.angle);
  }
}

TEST_CASE("standard games serialize as the preset form") {
  const GameSpec spec = GameSpec::standard(2.0 / 3.0);
  const json j = json_of(spec);
  CHECK(j.contains("preset"));
  CHECK(j["preset"] == "bos-fig1");
  CHECK_FALSE(j.contains("blocks"));
  const GameSpec back = parse_game(json::parse(j.dump()));
  CHECK(back.omega() == spec.omega());
  CHECK(back.alice_type_prob() == 0.5);
  CHECK(back.has_standard_blocks());

  // Preset form with the default prior omitted.
  const GameSpec terse = parse_game(
      json{{"preset", "bos-fig1"}, {"omega", 0.25}});
  CHECK(terse.alice_type_prob() == 0.5);
  CHECK(terse.omega() == 0.25);
}

TEST_CASE("non-standard games serialize their blocks in full") {
  auto blocks = GameSpec::standard(0.5).blocks();
  blocks[2][0][1].col = 1.25;
  const GameSpec spec(0.3, 0.6, blocks);
  const json j = json_of(spec);
  CHECK_FALSE(j.contains("preset"));
  REQUIRE(j.contains("blocks"));
  const GameSpec back = parse_game(json::parse(j.dump()));
  CHECK(back.omega() == 0.3);
  CHECK(back.alice_type_prob() == 0.6);
  CHECK_FALSE(back.has_standard_blocks());
  CHECK(back.block(1, 0)[0][1].col == 1.25);
  CHECK(json_of(back) == j);
}

TEST_CASE("equilibrium reports round-trip with and without the extras") {
  const GameSpec spec = GameSpec::standard(0.4);
  const EquilibriumReport quantum = quantum_bne(spec);
  const EquilibriumReport qback =
      parse_report(json::parse(json_of(quantum).dump()));
  CHECK(qback.kind == EquilibriumKind::kQuantum);
  CHECK(qback.profile == quantum.profile);
  REQUIRE(qback.behavior.has_value());
  CHECK(*qback.behavior == *quantum.behavior);
  REQUIRE(qback.delta.has_value());
  CHECK(*qback.delta == -2.0);
  CHECK(qback.payoffs.a2 == quantum.payoffs.a2);
  CHECK(qback.margins == quantum.margins);

  const VerificationResult classical = verify_classical(
      GameSpec::standard(2.0 / 3.0), StrategyProfile(0.5, 1, 2.0 / 3.0, 0));
  REQUIRE(classical.report.has_value());
  const json j = json_of(*classical.report);
  CHECK_FALSE(j.contains("behavior"));
  CHECK_FALSE(j.contains("delta"));
  const EquilibriumReport mback = parse_report(json::parse(j.dump()));
  CHECK(mback.kind == EquilibriumKind::kMixed);
  CHECK_FALSE(mback.behavior.has_value());
  CHECK_FALSE(mback.delta.has_value());
  CHECK(mback.profile == classical.report->profile);
}

TEST_CASE("families and tables round-trip through their JSON forms") {
  const GameSpec spec = GameSpec::standard(2.0 / 3.0);
  for (const EquilibriumFamily& family : find_mixed_bne(spec)) {
    const json j = json_of(family);
    const EquilibriumFamily back = parse_family(json::parse(j.dump()));
    CHECK(json_of(back) == j);
  }
  for (int k = 0; k < 8; ++k) {
    const RenderedTable table = build_table(spec, static_cast<TableId>(k));
    const json j = json_of(table);
    const RenderedTable back = parse_table(json::parse(j.dump()));
    CHECK(json_of(back) == j);
    CHECK(render_text(back) == render_text(table));
  }
}

TEST_CASE("validation and verification results serialize their checks") {
  const BehaviorSet uniform = reconstruct(
      IndependentOctet({0.25, 0.25, 0.25, 0.25, 0.25, 0.25, 0.25, 0.25}));
  const json v = json_of(validate(uniform));
  CHECK(v["valid"] == true);
  CHECK(v["checks"].size() == 28);
  CHECK(v["violations"].empty());

  const VerificationResult bad = verify_classical(
      GameSpec::standard(2.0 / 3.0), StrategyProfile(0, 0, 1, 1));
  const json w = json_of(bad);
  CHECK(w["equilibrium"] == false);
  CHECK(w["margins"].size() == 4);
  CHECK_FALSE(w["violations"].empty());
  CHECK_FALSE(w.contains("report"));
}

TEST_CASE("malformed documents raise json exceptions") {
  CHECK_THROWS_AS(parse_behavior(json{{"eps", json::array({1, 2, 3})}}),
                  json::exception);
  CHECK_THROWS_AS(parse_behavior(json{{"values", json::array()}}),
                  json::exception);
  CHECK_THROWS_AS(parse_octet(json{{"mu", "not an array"}}), json::exception);
  CHECK_THROWS_AS(parse_profile(json::parse("[0.1, 0.2]")), json::exception);
  CHECK_THROWS_AS(parse_profile(json::parse("{}")), json::exception);
  CHECK_THROWS_AS(parse_state(json{{"re", json::array({1, 0, 0, 0})}}),
                  json::exception);
  CHECK_THROWS_AS(parse_directions(json{{"a", 0.0}, {"c", 0.0}, {"b", 0.0}}),
                  json::exception);
  CHECK_THROWS_AS(parse_game(json{{"omega", 0.5}}), json::exception);
  CHECK_THROWS_AS(
      parse_report(json{{"kind", "tremble"},
                        {"profile", json::array({1, 1, 0, 0})},
                        {"payoffs", json::array({0, 2, 0, 2})},
                        {"margins", json::array({0, 0, 0, 0})}}),
      json::exception);
  CHECK_THROWS_AS(parse_game(json{{"preset", "chicken"}, {"omega", 0.5}}),
                  Error);
}

TEST_CASE("domain violations surface as domain errors, not json errors") {
  // Shape is fine, content is not: a profile component out of range.
  CHECK_THROWS_AS(parse_profile(json::parse("[1.5, 0, 0, 0]")),
                  ConstraintError);
  CHECK_THROWS_AS(
      parse_state(json{{"re", json::array({1, 0, 0, 1})},
                       {"im", json::array({0, 0, 0, 0})}}),
      NormalizationError);
}
