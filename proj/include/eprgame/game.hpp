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
// The two-type Bayesian Battle-of-Sexes game and its payoff functions: the
// one-sided variant (only Bob has types), pure and mixed strategy payoffs,
// and expected payoffs driven directly by a 16-entry probability set.

#ifndef EPRGAME_GAME_HPP_
#define EPRGAME_GAME_HPP_

#include <array>
#include <string_view>
#include <vector>

#include "eprgame/behavior.hpp"
#include "eprgame/common.hpp"

namespace eprgame {

// Action encoding, fixed once: B is index 0 and corresponds to the +1
// measurement outcome and to "probability of choosing B" in strategy
// profiles; S is index 1 and corresponds to the -1 outcome.
enum class Action { kB = 0, kS = 1 };

inline constexpr std::array<Action, 2> kActions = {Action::kB, Action::kS};

std::string_view to_string(Action a);

// One bimatrix cell: payoffs to the row player (Alice) and column player
// (Bob) for a joint action pair.
struct PayoffCell {
  double row;
  double col;
};

// A 2x2 bimatrix block indexed [Alice action][Bob action] with actions in
// the order B, S.
using PayoffBlock = std::array<std::array<PayoffCell, 2>, 2>;

// Expected payoffs to Alice type 1, Alice type 2, Bob type 1, Bob type 2.
struct PayoffQuadruple {
  double a1;
  double a2;
  double b1;
  double b2;
};

// A deterministic strategy per type: (Alice type 1, Alice type 2) and
// (Bob type 1, Bob type 2).
struct PureQuadruple {
  Action alice1;
  Action alice2;
  Action bob1;
  Action bob2;

  bool operator==(const PureQuadruple& other) const = default;
};

// A two-type-per-player Bayesian game: four payoff blocks indexed by the
// type pair, plus the two beliefs. omega is the probability Bob assigns to
// Alice being type 1 and weights Alice's types inside Bob's expected
// payoffs. alice_type_prob is the probability Alice assigns to Bob's first
// type and weights Bob's types inside Alice's expected payoffs; the
// standard game fixes it at 1/2.
class GameSpec {
 public:
  GameSpec(double omega, double alice_type_prob,
           const std::array<PayoffBlock, 4>& blocks);

  double omega() const { return omega_; }
  double alice_type_prob() const { return alice_type_prob_; }

  // Types are 0-based: block(0, 1) is (Alice type 1, Bob type 2).
  const PayoffBlock& block(int alice_type, int bob_type) const {
    return blocks_[static_cast<size_t>(2 * alice_type + bob_type)];
  }
  const std::array<PayoffBlock, 4>& blocks() const { return blocks_; }

  // True when the payoff blocks equal the standard preset's exactly.
  bool has_standard_blocks() const;

  // The standard Battle-of-Sexes preset. Type 1 of each player wants to
  // meet the other player, type 2 wants to avoid; B is Alice's preferred
  // meeting point and S is Bob's.
  static GameSpec standard(double omega, double alice_type_prob = 0.5);

 private:
  double omega_;
  double alice_type_prob_;
  std::array<PayoffBlock, 4> blocks_;
};

// Wire name under which the standard preset is exposed in GameSpec JSON.
inline constexpr std::string_view kStandardPresetName = "bos-fig1";

struct OneSidedCell {
  double alice;  // Alice's expected payoff
  double bob;    // Bob's payoff averaged over his types with alice_type_prob
};

// The one-sided variant: Alice has a single type (the first), Bob has two.
// Rows are Alice's actions B, S; columns are Bob's type action pairs
// (B,B), (B,S), (S,B), (S,S).
struct OneSidedGame {
  std::array<std::array<OneSidedCell, 4>, 2> cells;
  // Pure Nash equilibria (weak convention): Alice's action and the pair of
  // Bob's type actions, each type optimal against Alice for its own payoff.
  std::vector<std::pair<Action, std::array<Action, 2>>> pure_equilibria;
};

OneSidedGame one_sided_table(const GameSpec& spec);

// Expected payoffs at a deterministic quadruple. Alice's types average over
// Bob's types with weight alice_type_prob; Bob's types average over Alice's
// with weight omega.
PayoffQuadruple pure_payoffs(const GameSpec& spec, const PureQuadruple& pq);

// The bilinear extension of pure_payoffs: each type independently mixes
// with its profile component as the probability of B.
PayoffQuadruple mixed_payoffs(const GameSpec& spec, const StrategyProfile& s);

// Expected payoffs driven by a joint probability set: outcome pairs within
// block (alice type i, bob type j) are weighted by the set's block for the
// direction pair (i, j), with the same type priors as above. For
// set = from_factorizable(s) this reduces to mixed_payoffs(spec, s).
// Throws ConstraintError when the set fails validation.
PayoffQuadruple epr_payoffs(const GameSpec& spec, const BehaviorSet& set);

// Payoffs as closed affine forms in the independent octet. For the standard
// blocks the explicit reduced expressions are evaluated; other specs go
// through reconstruct(). Always equals epr_payoffs(spec, reconstruct(octet)).
PayoffQuadruple epr_payoffs_mu(const GameSpec& spec,
                               const IndependentOctet& octet);

}  // namespace eprgame

#endif  // EPRGAME_GAME_HPP_
