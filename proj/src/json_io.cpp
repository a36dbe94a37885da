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

#include "eprgame/json_io.hpp"

#include <string>

namespace eprgame {
namespace {

void require_array(const json& j, size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    throw json::out_of_range::create(
        401, std::string(what) + " must be an array of " + std::to_string(n),
        &j);
  }
}

template <size_t N>
std::array<double, N> number_array(const json& j, const char* what) {
  require_array(j, N, what);
  std::array<double, N> out{};
  for (size_t i = 0; i < N; ++i) out[i] = j.at(i).get<double>();
  return out;
}

EquilibriumKind kind_from_string(const json& j) {
  const std::string kind = j.get<std::string>();
  if (kind == "pure") return EquilibriumKind::kPure;
  if (kind == "mixed") return EquilibriumKind::kMixed;
  if (kind == "quantum") return EquilibriumKind::kQuantum;
  throw json::out_of_range::create(401, "unknown equilibrium kind: " + kind,
                                   &j);
}

json interval_json(const ComponentInterval& iv) {
  return json::array({iv.lo, iv.hi});
}

ComponentInterval parse_interval(const json& j, const char* what) {
  const std::array<double, 2> bounds = number_array<2>(j, what);
  return {bounds[0], bounds[1]};
}

}  // namespace

BehaviorSet parse_behavior(const json& j) {
  return BehaviorSet(number_array<16>(j.at("eps"), "eps"));
}

IndependentOctet parse_octet(const json& j) {
  return IndependentOctet(number_array<8>(j.at("mu"), "mu"));
}

StrategyProfile parse_profile(const json& j) {
  const std::array<double, 4> v = number_array<4>(j, "profile");
  return StrategyProfile(v[0], v[1], v[2], v[3]);
}

TwoQubitState parse_state(const json& j) {
  const std::array<double, 4> re = number_array<4>(j.at("re"), "re");
  const std::array<double, 4> im = number_array<4>(j.at("im"), "im");
  return TwoQubitState({re[0], im[0]}, {re[1], im[1]}, {re[2], im[2]},
                       {re[3], im[3]});
}

DirectionConfig parse_directions(const json& j) {
  DirectionConfig dirs;
  dirs.a.angle = j.at("a").get<double>();
  dirs.c.angle = j.at("c").get<double>();
  dirs.b.angle = j.at("b").get<double>();
  dirs.d.angle = j.at("d").get<double>();
  return dirs;
}

GameSpec parse_game(const json& j) {
  const double omega = j.at("omega").get<double>();
  const double alice_type_prob = j.value("alice_type_prob", 0.5);
  if (j.contains("preset")) {
    const std::string preset = j.at("preset").get<std::string>();
    if (preset != kStandardPresetName) {
      throw Error("unknown game preset: " + preset);
    }
    return GameSpec::standard(omega, alice_type_prob);
  }
  const json& blocks_json = j.at("blocks");
  require_array(blocks_json, 4, "blocks");
  std::array<PayoffBlock, 4> blocks{};
  for (size_t k = 0; k < 4; ++k) {
    const json& block_json = blocks_json.at(k);
    require_array(block_json, 2, "payoff block");
    for (size_t a = 0; a < 2; ++a) {
      const json& row_json = block_json.at(a);
      require_array(row_json, 2, "payoff block row");
      for (size_t b = 0; b < 2; ++b) {
        const std::array<double, 2> cell =
            number_array<2>(row_json.at(b), "payoff cell");
        blocks[k][a][b] = {cell[0], cell[1]};
      }
    }
  }
  return GameSpec(omega, alice_type_prob, blocks);
}

EquilibriumReport parse_report(const json& j) {
  EquilibriumReport report{
      kind_from_string(j.at("kind")),
      parse_profile(j.at("profile")),
      PayoffQuadruple{},
      {},
      std::nullopt,
      std::nullopt,
  };
  const std::array<double, 4> payoffs =
      number_array<4>(j.at("payoffs"), "payoffs");
  report.payoffs = {payoffs[0], payoffs[1], payoffs[2], payoffs[3]};
  report.margins = number_array<4>(j.at("margins"), "margins");
  if (j.contains("behavior")) {
    report.behavior = BehaviorSet(number_array<16>(j.at("behavior"), "behavior"));
  }
  if (j.contains("delta")) {
    report.delta = j.at("delta").get<double>();
  }
  return report;
}

EquilibriumFamily parse_family(const json& j) {
  return EquilibriumFamily{
      parse_interval(j.at("p"), "p"),
      parse_interval(j.at("q"), "q"),
      parse_interval(j.at("p_prime"), "p_prime"),
      parse_interval(j.at("q_prime"), "q_prime"),
  };
}

RenderedTable parse_table(const json& j) {
  RenderedTable table;
  table.name = j.at("name").get<std::string>();
  table.omega_dependent = j.at("omega_dependent").get<bool>();
  table.omega = j.value("omega", 0.0);
  table.row_axis = j.at("row_axis").get<std::string>();
  table.col_axis = j.at("col_axis").get<std::string>();
  table.row_labels = j.at("row_labels").get<std::vector<std::string>>();
  table.col_labels = j.at("col_labels").get<std::vector<std::string>>();
  table.cells =
      j.at("cells").get<std::vector<std::vector<std::vector<double>>>>();
  return table;
}

json json_of(const BehaviorSet& set) {
  return json{{"eps", set.values()}};
}

json json_of(const IndependentOctet& octet) {
  return json{{"mu", octet.mu()}};
}

json json_of(const StrategyProfile& s) {
  return json::array({s.p, s.q, s.p_prime, s.q_prime});
}

json json_of(const TwoQubitState& state) {
  std::array<double, 4> re{};
  std::array<double, 4> im{};
  for (int i = 0; i < 4; ++i) {
    re[static_cast<size_t>(i)] = state.amp(i).real();
    im[static_cast<size_t>(i)] = state.amp(i).imag();
  }
  return json{{"re", re}, {"im", im}};
}

json json_of(const DirectionConfig& dirs) {
  return json{{"a", dirs.a.angle},
              {"c", dirs.c.angle},
              {"b", dirs.b.angle},
              {"d", dirs.d.angle}};
}

json json_of(const GameSpec& spec) {
  json j{{"omega", spec.omega()},
         {"alice_type_prob", spec.alice_type_prob()}};
  if (spec.has_standard_blocks()) {
    j["preset"] = std::string(kStandardPresetName);
    return j;
  }
  json blocks = json::array();
  for (const PayoffBlock& block : spec.blocks()) {
    json block_json = json::array();
    for (const auto& row : block) {
      json row_json = json::array();
      for (const PayoffCell& cell : row) {
        row_json.push_back(json::array({cell.row, cell.col}));
      }
      block_json.push_back(row_json);
    }
    blocks.push_back(block_json);
  }
  j["blocks"] = blocks;
  return j;
}

json json_of(const EquilibriumReport& report) {
  json j{{"kind", std::string(to_string(report.kind))},
         {"profile", json_of(report.profile)},
         {"payoffs", json::array({report.payoffs.a1, report.payoffs.a2,
                                  report.payoffs.b1, report.payoffs.b2})},
         {"margins", report.margins}};
  if (report.behavior) j["behavior"] = report.behavior->values();
  if (report.delta) j["delta"] = *report.delta;
  return j;
}

json json_of(const EquilibriumFamily& family) {
  return json{{"p", interval_json(family.p)},
              {"q", interval_json(family.q)},
              {"p_prime", interval_json(family.p_prime)},
              {"q_prime", interval_json(family.q_prime)}};
}

json json_of(const RenderedTable& table) {
  json j{{"name", table.name},
         {"omega_dependent", table.omega_dependent},
         {"row_axis", table.row_axis},
         {"col_axis", table.col_axis},
         {"row_labels", table.row_labels},
         {"col_labels", table.col_labels},
         {"cells", table.cells}};
  if (table.omega_dependent) j["omega"] = table.omega;
  return j;
}

json json_of(const ValidationReport& report) {
  json checks = json::array();
  for (const ConstraintCheck& check : report.checks) {
    checks.push_back(json{{"name", check.name},
                          {"residual", check.residual},
                          {"ok", check.ok}});
  }
  return json{{"valid", report.valid},
              {"max_residual", report.max_residual},
              {"checks", checks},
              {"violations", report.violations}};
}

json json_of(const VerificationResult& result) {
  json j{{"equilibrium", result.equilibrium},
         {"gradients",
          json::array({result.gradients.dA1_dp, result.gradients.dA2_dq,
                       result.gradients.dB1_dpprime,
                       result.gradients.dB2_dqprime})},
         {"margins", result.margins},
         {"payoffs", json::array({result.payoffs.a1, result.payoffs.a2,
                                  result.payoffs.b1, result.payoffs.b2})},
         {"violations", result.violations}};
  if (result.report) j["report"] = json_of(*result.report);
  return j;
}

}  // namespace eprgame
