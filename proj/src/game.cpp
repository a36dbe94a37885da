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

#include "eprgame/game.hpp"

#include <cmath>
#include <stdexcept>

namespace eprgame {

std::string_view to_string(Action a) {
  return a == Action::kB ? "B" : "S";
}

GameSpec::GameSpec(double omega, double alice_type_prob,
                   const std::array<PayoffBlock, 4>& blocks)
    : omega_(omega), alice_type_prob_(alice_type_prob), blocks_(blocks) {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw std::invalid_argument("omega must lie in [0,1]");
  }
  if (!(alice_type_prob >= 0.0 && alice_type_prob <= 1.0)) {
    throw std::invalid_argument("alice_type_prob must lie in [0,1]");
  }
  for (const PayoffBlock& block : blocks_) {
    for (const auto& row : block) {
      for (const PayoffCell& cell : row) {
        if (!std::isfinite(cell.row) || !std::isfinite(cell.col)) {
          throw std::invalid_argument("payoff entries must be finite");
        }
      }
    }
  }
}

GameSpec GameSpec::standard(double omega, double alice_type_prob) {
  // Type 1 wants to meet, type 2 wants to avoid. Per type pair, rows are
  // Alice's action B,S and columns Bob's action B,S; cells are
  // (Alice payoff, Bob payoff).
  const std::array<PayoffBlock, 4> blocks = {{
      // (Alice type 1, Bob type 1)
      {{{{{2, 1}, {0, 0}}}, {{{0, 0}, {1, 2}}}}},
      // (Alice type 1, Bob type 2)
      {{{{{2, 0}, {0, 2}}}, {{{0, 1}, {1, 0}}}}},
      // (Alice type 2, Bob type 1)
      {{{{{0, 1}, {2, 0}}}, {{{1, 0}, {0, 2}}}}},
      // (Alice type 2, Bob type 2)
      {{{{{0, 0}, {2, 2}}}, {{{1, 1}, {0, 0}}}}},
  }};
  return GameSpec(omega, alice_type_prob, blocks);
}

bool GameSpec::has_standard_blocks() const {
  static const std::array<PayoffBlock, 4> kStandard =
      GameSpec::standard(0.5).blocks();
  for (size_t b = 0; b < 4; ++b) {
    for (size_t i = 0; i < 2; ++i) {
      for (size_t j = 0; j < 2; ++j) {
        if (blocks_[b][i][j].row != kStandard[b][i][j].row ||
            blocks_[b][i][j].col != kStandard[b][i][j].col) {
          return false;
        }
      }
    }
  }
  return true;
}

OneSidedGame one_sided_table(const GameSpec& spec) {
  const double w = spec.alice_type_prob();
  OneSidedGame game;

  // Alice faces Bob's two types with prior (w, 1-w); Alice is her first
  // type. The reported Bob value is the same prior-weighted average of the
  // two types' payoffs.
  auto alice_payoff = [&](int x, int b1, int b2) {
    return w * spec.block(0, 0)[static_cast<size_t>(x)]
                   [static_cast<size_t>(b1)].row +
           (1 - w) * spec.block(0, 1)[static_cast<size_t>(x)]
                         [static_cast<size_t>(b2)].row;
  };
  auto bob_type_payoff = [&](int type, int x, int action) {
    return spec.block(0, type)[static_cast<size_t>(x)]
        [static_cast<size_t>(action)].col;
  };

  for (int x = 0; x < 2; ++x) {
    for (int b1 = 0; b1 < 2; ++b1) {
      for (int b2 = 0; b2 < 2; ++b2) {
        const int col = 2 * b1 + b2;
        game.cells[static_cast<size_t>(x)][static_cast<size_t>(col)] = {
            alice_payoff(x, b1, b2),
            w * bob_type_payoff(0, x, b1) + (1 - w) * bob_type_payoff(1, x, b2),
        };
      }
    }
  }

  // Weak pure Nash equilibria: Alice's action optimal against the type
  // pair, and each Bob type's action optimal against Alice for that type's
  // own payoff.
  for (int x = 0; x < 2; ++x) {
    for (int b1 = 0; b1 < 2; ++b1) {
      for (int b2 = 0; b2 < 2; ++b2) {
        const int col = 2 * b1 + b2;
        const double alice_gain =
            alice_payoff(1 - x, b1, b2) -
            game.cells[static_cast<size_t>(x)][static_cast<size_t>(col)].alice;
        const double bob1_gain =
            bob_type_payoff(0, x, 1 - b1) - bob_type_payoff(0, x, b1);
        const double bob2_gain =
            bob_type_payoff(1, x, 1 - b2) - bob_type_payoff(1, x, b2);
        if (alice_gain <= kTolerance && bob1_gain <= kTolerance &&
            bob2_gain <= kTolerance) {
          game.pure_equilibria.push_back(
              {kActions[static_cast<size_t>(x)],
               {kActions[static_cast<size_t>(b1)],
                kActions[static_cast<size_t>(b2)]}});
        }
      }
    }
  }
  return game;
}

PayoffQuadruple pure_payoffs(const GameSpec& spec, const PureQuadruple& pq) {
  const double w = spec.alice_type_prob();
  const double omega = spec.omega();
  const auto a1 = static_cast<size_t>(pq.alice1);
  const auto a2 = static_cast<size_t>(pq.alice2);
  const auto b1 = static_cast<size_t>(pq.bob1);
  const auto b2 = static_cast<size_t>(pq.bob2);

  return {
      w * spec.block(0, 0)[a1][b1].row + (1 - w) * spec.block(0, 1)[a1][b2].row,
      w * spec.block(1, 0)[a2][b1].row + (1 - w) * spec.block(1, 1)[a2][b2].row,
      omega * spec.block(0, 0)[a1][b1].col +
          (1 - omega) * spec.block(1, 0)[a2][b1].col,
      omega * spec.block(0, 1)[a1][b2].col +
          (1 - omega) * spec.block(1, 1)[a2][b2].col,
  };
}

PayoffQuadruple mixed_payoffs(const GameSpec& spec, const StrategyProfile& s) {
  const double w = spec.alice_type_prob();
  const double omega = spec.omega();
  // Per-type action distributions, component 0 = probability of B.
  const std::array<double, 2> pa1 = {s.p, 1 - s.p};
  const std::array<double, 2> pa2 = {s.q, 1 - s.q};
  const std::array<double, 2> pb1 = {s.p_prime, 1 - s.p_prime};
  const std::array<double, 2> pb2 = {s.q_prime, 1 - s.q_prime};

  PayoffQuadruple out{0, 0, 0, 0};
  for (size_t i = 0; i < 2; ++i) {
    for (size_t j = 0; j < 2; ++j) {
      out.a1 += pa1[i] * (w * pb1[j] * spec.block(0, 0)[i][j].row +
                          (1 - w) * pb2[j] * spec.block(0, 1)[i][j].row);
      out.a2 += pa2[i] * (w * pb1[j] * spec.block(1, 0)[i][j].row +
                          (1 - w) * pb2[j] * spec.block(1, 1)[i][j].row);
      out.b1 += pb1[j] * (omega * pa1[i] * spec.block(0, 0)[i][j].col +
                          (1 - omega) * pa2[i] * spec.block(1, 0)[i][j].col);
      out.b2 += pb2[j] * (omega * pa1[i] * spec.block(0, 1)[i][j].col +
                          (1 - omega) * pa2[i] * spec.block(1, 1)[i][j].col);
    }
  }
  return out;
}

PayoffQuadruple epr_payoffs(const GameSpec& spec, const BehaviorSet& set) {
  ValidationReport report = validate(set);
  if (!report.valid) {
    throw ConstraintError("epr_payoffs: behavior set fails validation",
                          report.violations);
  }

  const double w = spec.alice_type_prob();
  const double omega = spec.omega();
  const std::array<double, 2> bob_prior = {w, 1 - w};
  const std::array<double, 2> alice_prior = {omega, 1 - omega};

  // Outcome +1 plays the role of action B, -1 of action S; the probability
  // set's block for the type pair replaces the product of mixing weights.
  PayoffQuadruple out{0, 0, 0, 0};
  for (int at = 0; at < 2; ++at) {
    for (int bt = 0; bt < 2; ++bt) {
      const PayoffBlock& block = spec.block(at, bt);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const double e = set.values()[static_cast<size_t>(
              BehaviorSet::index(2 * at + bt, i, j))];
          const PayoffCell& cell =
              block[static_cast<size_t>(i)][static_cast<size_t>(j)];
          const double alice_term =
              bob_prior[static_cast<size_t>(bt)] * cell.row * e;
          const double bob_term =
              alice_prior[static_cast<size_t>(at)] * cell.col * e;
          if (at == 0) {
            out.a1 += alice_term;
          } else {
            out.a2 += alice_term;
          }
          if (bt == 0) {
            out.b1 += bob_term;
          } else {
            out.b2 += bob_term;
          }
        }
      }
    }
  }
  return out;
}

PayoffQuadruple epr_payoffs_mu(const GameSpec& spec,
                               const IndependentOctet& octet) {
  if (!spec.has_standard_blocks() || spec.alice_type_prob() != 0.5) {
    // The reduced forms below encode the standard game; anything else goes
    // through the full reconstruction, which computes the same quantity.
    return epr_payoffs(spec, reconstruct(octet));
  }

  const double omega = spec.omega();
  const double e1 = octet[0], e4 = octet[1], e5 = octet[2], e8 = octet[3];
  const double e9 = octet[4], e12 = octet[5], e14 = octet[6], e15 = octet[7];

  // Payoffs as affine forms in the octet, obtained by substituting the
  // dependent-probability relations into the block-weighted sums.
  return {
      (2 * e1 + e4 + 2 * e5 + e8) / 2,
      (3 - e1 + e4 + e5 - e8 - 3 * e9 - 3 * e12 + 5 * e14 + e15) / 4,
      omega * (e1 + 2 * e4 - e9 - 2 * e12) + (e9 + 2 * e12),
      (omega / 2) *
              (3 + e1 - e4 - 3 * e5 - 3 * e8 - e9 + e12 - 3 * e14 - 3 * e15) +
          (2 * e14 + e15),
  };
}

}  // namespace eprgame
