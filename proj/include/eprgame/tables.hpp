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
// Named payoff tables of the Bayesian Battle-of-Sexes game, built from a
// GameSpec and rendered deterministically.

#ifndef EPRGAME_TABLES_HPP_
#define EPRGAME_TABLES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eprgame/game.hpp"

namespace eprgame {

enum class TableId {
  kOneSided,       // one-sided variant: Alice vs Bob's type pairs
  kAliceType1,     // Alice type 1's payoff vs Bob's type pairs
  kAliceType2,     // Alice type 2's payoff vs Bob's type pairs
  kAliceCombined,  // (a1, a2) for Alice pair rows vs Bob pair columns
  kBobType1,       // Bob type 1's payoff vs Alice's type pairs
  kBobType2,       // Bob type 2's payoff vs Alice's type pairs
  kBobCombined,    // (b1, b2) for Alice pair rows vs Bob pair columns
  kFull,           // (a1, a2 | b1, b2) for Alice pair rows vs Bob pair columns
};

inline constexpr std::array<std::string_view, 8> kTableNames = {
    "one-sided",      "alice-type1", "alice-type2", "alice-combined",
    "bob-type1",      "bob-type2",   "bob-combined", "full"};

std::string_view table_name(TableId id);
std::optional<TableId> table_id_from_name(std::string_view name);

// A rendered table: labeled axes and per-cell value tuples (1, 2, or 4
// numbers depending on the table). omega is carried only for the
// omega-dependent tables (Bob's and the full table).
struct RenderedTable {
  std::string name;
  bool omega_dependent;
  double omega;
  std::string row_axis;
  std::string col_axis;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<std::vector<double>>> cells;  // [row][col][k]
};

RenderedTable build_table(const GameSpec& spec, TableId id);

// Plain-text rendering with aligned columns; numbers use 10 significant
// digits. Byte-identical across runs for the same inputs.
std::string render_text(const RenderedTable& table);

// Shared numeric formatting for user-facing text output: shortest decimal
// form with 10 significant digits ("%.10g").
std::string format_number(double x);

}  // namespace eprgame

#endif  // EPRGAME_TABLES_HPP_
