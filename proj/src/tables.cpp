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

#include "eprgame/tables.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace eprgame {
namespace {

std::vector<std::string> action_labels() {
  std::vector<std::string> out;
  for (const Action a : kActions) out.emplace_back(to_string(a));
  return out;
}

std::vector<std::string> pair_labels() {
  std::vector<std::string> out;
  for (const Action first : kActions) {
    for (const Action second : kActions) {
      std::string label = "(";
      label += to_string(first);
      label += ", ";
      label += to_string(second);
      label += ")";
      out.push_back(std::move(label));
    }
  }
  return out;
}

constexpr std::array<std::pair<Action, Action>, 4> kPairs = {{
    {Action::kB, Action::kB},
    {Action::kB, Action::kS},
    {Action::kS, Action::kB},
    {Action::kS, Action::kS},
}};

constexpr const char* kAlicePairAxis = "(Alice type 1, Alice type 2)";
constexpr const char* kBobPairAxis = "(Bob type 1, Bob type 2)";

// Single-type tables: one type's action against the other side's type
// action pair. The sibling type's action never enters that payoff, so it is
// held at B.
RenderedTable alice_type_table(const GameSpec& spec, int type) {
  RenderedTable t;
  t.row_axis = type == 0 ? "Alice type 1" : "Alice type 2";
  t.col_axis = kBobPairAxis;
  t.row_labels = action_labels();
  t.col_labels = pair_labels();
  for (const Action a : kActions) {
    std::vector<std::vector<double>> row;
    for (const auto& [bob1, bob2] : kPairs) {
      const PureQuadruple pq{type == 0 ? a : Action::kB,
                             type == 1 ? a : Action::kB, bob1, bob2};
      const PayoffQuadruple payoffs = pure_payoffs(spec, pq);
      row.push_back({type == 0 ? payoffs.a1 : payoffs.a2});
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

RenderedTable bob_type_table(const GameSpec& spec, int type) {
  RenderedTable t;
  t.row_axis = type == 0 ? "Bob type 1" : "Bob type 2";
  t.col_axis = kAlicePairAxis;
  t.row_labels = action_labels();
  t.col_labels = pair_labels();
  for (const Action b : kActions) {
    std::vector<std::vector<double>> row;
    for (const auto& [alice1, alice2] : kPairs) {
      const PureQuadruple pq{alice1, alice2, type == 0 ? b : Action::kB,
                             type == 1 ? b : Action::kB};
      const PayoffQuadruple payoffs = pure_payoffs(spec, pq);
      row.push_back({type == 0 ? payoffs.b1 : payoffs.b2});
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

// Combined 4x4 tables over (Alice pair) x (Bob pair). which selects the
// cell contents: 0 = (a1, a2), 1 = (b1, b2), 2 = all four.
RenderedTable combined_table(const GameSpec& spec, int which) {
  RenderedTable t;
  t.row_axis = kAlicePairAxis;
  t.col_axis = kBobPairAxis;
  t.row_labels = pair_labels();
  t.col_labels = pair_labels();
  for (const auto& [alice1, alice2] : kPairs) {
    std::vector<std::vector<double>> row;
    for (const auto& [bob1, bob2] : kPairs) {
      const PayoffQuadruple v =
          pure_payoffs(spec, {alice1, alice2, bob1, bob2});
      switch (which) {
        case 0:
          row.push_back({v.a1, v.a2});
          break;
        case 1:
          row.push_back({v.b1, v.b2});
          break;
        default:
          row.push_back({v.a1, v.a2, v.b1, v.b2});
          break;
      }
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

RenderedTable one_sided(const GameSpec& spec) {
  RenderedTable t;
  t.row_axis = "Alice";
  t.col_axis = kBobPairAxis;
  t.row_labels = action_labels();
  t.col_labels = pair_labels();
  const OneSidedGame game = one_sided_table(spec);
  for (size_t r = 0; r < 2; ++r) {
    std::vector<std::vector<double>> row;
    for (size_t c = 0; c < 4; ++c) {
      row.push_back({game.cells[r][c].alice, game.cells[r][c].bob});
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

std::string cell_to_string(const std::vector<double>& cell) {
  if (cell.size() == 1) return format_number(cell[0]);
  std::string out = "(";
  for (size_t k = 0; k < cell.size(); ++k) {
    if (k == 2 && cell.size() == 4) {
      out += " | ";
    } else if (k > 0) {
      out += ", ";
    }
    out += format_number(cell[k]);
  }
  out += ")";
  return out;
}

}  // namespace

std::string_view table_name(TableId id) {
  return kTableNames[static_cast<size_t>(id)];
}

std::optional<TableId> table_id_from_name(std::string_view name) {
  for (size_t i = 0; i < kTableNames.size(); ++i) {
    if (kTableNames[i] == name) return static_cast<TableId>(i);
  }
  return std::nullopt;
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // canonicalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

RenderedTable build_table(const GameSpec& spec, TableId id) {
  RenderedTable t;
  switch (id) {
    case TableId::kOneSided:
      t = one_sided(spec);
      t.omega_dependent = false;
      break;
    case TableId::kAliceType1:
      t = alice_type_table(spec, 0);
      t.omega_dependent = false;
      break;
    case TableId::kAliceType2:
      t = alice_type_table(spec, 1);
      t.omega_dependent = false;
      break;
    case TableId::kAliceCombined:
      t = combined_table(spec, 0);
      t.omega_dependent = false;
      break;
    case TableId::kBobType1:
      t = bob_type_table(spec, 0);
      t.omega_dependent = true;
      break;
    case TableId::kBobType2:
      t = bob_type_table(spec, 1);
      t.omega_dependent = true;
      break;
    case TableId::kBobCombined:
      t = combined_table(spec, 1);
      t.omega_dependent = true;
      break;
    case TableId::kFull:
      t = combined_table(spec, 2);
      t.omega_dependent = true;
      break;
    default:
      throw std::invalid_argument("unknown table id");
  }
  t.name = std::string(table_name(id));
  t.omega = spec.omega();
  return t;
}

std::string render_text(const RenderedTable& table) {
  std::ostringstream out;
  out << "table " << table.name;
  if (table.omega_dependent) {
    out << " (omega = " << format_number(table.omega) << ")";
  }
  out << "\n";
  out << "rows: " << table.row_axis << "; columns: " << table.col_axis
      << "\n";

  const size_t rows = table.row_labels.size();
  const size_t cols = table.col_labels.size();

  std::vector<std::vector<std::string>> rendered(rows);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      rendered[r].push_back(cell_to_string(table.cells[r][c]));
    }
  }

  size_t label_width = 0;
  for (const std::string& label : table.row_labels) {
    label_width = std::max(label_width, label.size());
  }
  std::vector<size_t> widths(cols);
  for (size_t c = 0; c < cols; ++c) {
    widths[c] = table.col_labels[c].size();
    for (size_t r = 0; r < rows; ++r) {
      widths[c] = std::max(widths[c], rendered[r][c].size());
    }
  }

  auto pad = [](std::string& line, const std::string& text, size_t width) {
    line += text;
    line.append(width - text.size(), ' ');
  };
  auto emit = [&out](std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
    line.clear();
  };

  std::string line;
  pad(line, "", label_width);
  for (size_t c = 0; c < cols; ++c) {
    line += "  ";
    pad(line, table.col_labels[c], widths[c]);
  }
  emit(line);
  for (size_t r = 0; r < rows; ++r) {
    pad(line, table.row_labels[r], label_width);
    for (size_t c = 0; c < cols; ++c) {
      line += "  ";
      pad(line, rendered[r][c], widths[c]);
    }
    emit(line);
  }
  return out.str();
}

}  // namespace eprgame
