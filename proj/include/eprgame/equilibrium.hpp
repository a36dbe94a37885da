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
// Bayesian Nash equilibria: pure enumeration, mixed-profile verification via
// best-response margins, exhaustive mixed search for the standard game, the
// unique equilibrium over non-factorizable deviations, and a brute-force
// best-response oracle.

#ifndef EPRGAME_EQUILIBRIUM_HPP_
#define EPRGAME_EQUILIBRIUM_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eprgame/behavior.hpp"
#include "eprgame/game.hpp"

namespace eprgame {

// Player types in reporting order, used for margins arrays and the oracle's
// player_type argument: 0 = Alice type 1, 1 = Alice type 2, 2 = Bob type 1,
// 3 = Bob type 2.
inline constexpr std::array<std::string_view, 4> kTypeNames = {
    "alice type 1", "alice type 2", "bob type 1", "bob type 2"};

// Partial derivatives of each type's expected payoff with respect to its own
// strategy component, at a profile. Payoffs are affine per component, so
// these are exact, not local, slopes.
struct GradientQuadruple {
  double dA1_dp;
  double dA2_dq;
  double dB1_dpprime;
  double dB2_dqprime;
};

// For the standard blocks the closed forms are
//   dA1_dp       =  (3/2)(p' + q') - 1
//   dA2_dq       =  2 - (3/2)(p' + q')
//   dB1_dpprime  =  3*omega*p + 3*(1-omega)*q - 2
//   dB2_dqprime  = -(3*omega*p + 3*(1-omega)*q - 1)
// General specs are differenced through the bilinear payoff forms, which is
// exact for affine functions. The two paths agree on the standard game.
GradientQuadruple classical_gradients(const GameSpec& spec,
                                      const StrategyProfile& s);

enum class EquilibriumKind { kPure, kMixed, kQuantum };

std::string_view to_string(EquilibriumKind kind);

// An equilibrium with its certificate: margins[t] is type t's worst-case
// unilateral deviation gain, which is <= kTolerance for any report.
struct EquilibriumReport {
  EquilibriumKind kind;
  StrategyProfile profile;
  PayoffQuadruple payoffs;
  std::array<double, 4> margins;
  std::optional<BehaviorSet> behavior;  // present for the quantum report
  std::optional<double> delta;          // present for the quantum report
};

// Outcome of checking one profile: margins and gradients for all four
// types, and a human-readable violation per type that gains more than
// kTolerance by deviating. report is present iff equilibrium.
struct VerificationResult {
  bool equilibrium;
  GradientQuadruple gradients;
  std::array<double, 4> margins;
  PayoffQuadruple payoffs;
  std::vector<std::string> violations;
  std::optional<EquilibriumReport> report;
};

// Accepts iff no type can gain more than kTolerance by unilaterally moving
// its own component anywhere in [0,1]. Payoffs are affine per component, so
// the exact worst case is at a vertex; this realizes the gradient sign
// conditions (positive requires the component at 1, negative at 0, zero
// leaves it free) and is cross-checked by the brute-force oracle in tests.
VerificationResult verify_classical(const GameSpec& spec,
                                    const StrategyProfile& s);

struct PureEquilibrium {
  PureQuadruple profile;
  PayoffQuadruple payoffs;
};

// Enumerates all 16 deterministic quadruples and keeps those where no single
// type's action switch strictly improves that type's payoff (weak
// convention; ties are reported, not broken).
std::vector<PureEquilibrium> find_pure_bne(const GameSpec& spec);

// Best deviation found by scanning one type's component over a uniform grid
// of grid_n points plus the current value, others held fixed. gain >= 0.
// Affine payoffs put optima at vertices, so grid_n = 2 is already exact;
// larger grids are diagnostics. player_type as in kTypeNames.
struct DeviationScan {
  double best_value;
  double gain;
};

DeviationScan brute_force_best_response(const GameSpec& spec,
                                        const StrategyProfile& s,
                                        int player_type, int grid_n);

// A closed component interval of an equilibrium family; lo == hi for pinned
// components.
struct ComponentInterval {
  double lo;
  double hi;

  bool is_point() const;
};

struct EquilibriumFamily {
  ComponentInterval p;
  ComponentInterval q;
  ComponentInterval p_prime;
  ComponentInterval q_prime;
};

// Complete equilibrium set of the standard game at the spec's omega, via
// case analysis over the best-response regimes of s = p'+q' (thresholds 2/3
// and 4/3) and t = 3*omega*p + 3*(1-omega)*q (thresholds 1 and 2). Interval
// components arise from zero gradients; families contained in another are
// absorbed. Requires the standard blocks (the thresholds are specific to
// them); throws std::invalid_argument otherwise.
std::vector<EquilibriumFamily> find_mixed_bne(const GameSpec& spec);

// The unique equilibrium when deviations range over all valid probability
// sets rather than factorizable ones only. The payoff derivatives along the
// independent coordinates are the constants (2, 4, -2, -2(2*omega+1)),
// whose signs force the marginals to (1, 1, 0, 0) for every omega in [0,1];
// the constraint algebra then pins the set to eps2=eps6=eps10=eps14=1 with
// payoffs (0, 2, 0, 2) and CHSH delta -2. The returned report carries the
// set and delta; its margins are the deviation gains under that derivative
// structure, which are all zero. Note the marginals are not an equilibrium
// of the factorizable game (verify_classical rejects them); the two notions
// of deviation differ and callers wanting both verdicts should run both.
// Requires the standard blocks; throws std::invalid_argument otherwise.
EquilibriumReport quantum_bne(const GameSpec& spec);

}  // namespace eprgame

#endif  // EPRGAME_EQUILIBRIUM_HPP_
