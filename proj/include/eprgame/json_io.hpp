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
//
// JSON wire formats. Emission uses the shortest decimal representation that
// round-trips doubles bit-exactly (17 significant digits where needed), so
// parse(serialize(x)) == x for every type here.
//
//   BehaviorSet        {"eps": [16 numbers]}
//   IndependentOctet   {"mu": [8 numbers]}            octet ordering
//   StrategyProfile    [p, q, p', q']
//   TwoQubitState      {"re": [4], "im": [4]}         |00>,|01>,|10>,|11>
//   DirectionConfig    {"a": θ, "c": θ, "b": θ, "d": θ}   radians
//   GameSpec           {"omega", "alice_type_prob", "blocks": 4x2x2x2}
//                      or {"preset": "bos-fig1", "omega", "alice_type_prob"?}
//   EquilibriumReport  {"kind", "profile":[4], "payoffs":[4], "margins":[4],
//                       "behavior": optional [16], "delta": optional}

#ifndef EPRGAME_JSON_IO_HPP_
#define EPRGAME_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "eprgame/behavior.hpp"
#include "eprgame/equilibrium.hpp"
#include "eprgame/game.hpp"
#include "eprgame/quantum.hpp"
#include "eprgame/tables.hpp"

namespace eprgame {

using json = nlohmann::json;

// Parsers. Malformed documents (wrong shape, missing keys, wrong types)
// raise nlohmann::json::exception; domain violations raise the library's
// domain errors (ConstraintError etc.).
BehaviorSet parse_behavior(const json& j);
IndependentOctet parse_octet(const json& j);
StrategyProfile parse_profile(const json& j);
TwoQubitState parse_state(const json& j);
DirectionConfig parse_directions(const json& j);
GameSpec parse_game(const json& j);
EquilibriumReport parse_report(const json& j);
EquilibriumFamily parse_family(const json& j);
RenderedTable parse_table(const json& j);

// Serializers.
json json_of(const BehaviorSet& set);
json json_of(const IndependentOctet& octet);
json json_of(const StrategyProfile& s);
json json_of(const TwoQubitState& state);
json json_of(const DirectionConfig& dirs);
json json_of(const GameSpec& spec);
json json_of(const EquilibriumReport& report);
json json_of(const EquilibriumFamily& family);
json json_of(const RenderedTable& table);
json json_of(const ValidationReport& report);
json json_of(const VerificationResult& result);

}  // namespace eprgame

#endif  // EPRGAME_JSON_IO_HPP_
