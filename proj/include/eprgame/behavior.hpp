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
// Joint probability sets for a two-observer, two-setting, two-outcome
// experiment, their no-signaling constraint algebra, the independent octet
// parametrization, factorizable (product) sets, and the CHSH functional.

#ifndef EPRGAME_BEHAVIOR_HPP_
#define EPRGAME_BEHAVIOR_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "eprgame/common.hpp"

namespace eprgame {

// Index convention, fixed here and used everywhere else.
//
// The 16 probabilities eps_1..eps_16 are grouped into four blocks of four by
// the pair of measurement directions, in row-major order over (observer 1's
// direction, observer 2's direction):
//
//   block 0: (D1, D1')  eps_1..eps_4     block 1: (D1, D2')  eps_5..eps_8
//   block 2: (D2, D1')  eps_9..eps_12    block 3: (D2, D2')  eps_13..eps_16
//
// Within a block the four entries are ordered by the outcome pair
// (+1,+1), (+1,-1), (-1,+1), (-1,-1). Storage is 0-based; the eps() accessor
// takes the conventional 1-based index.
class BehaviorSet {
 public:
  static constexpr int kSize = 16;

  // outcome1/outcome2: 0 for the +1 outcome, 1 for the -1 outcome.
  static constexpr int index(int block, int outcome1, int outcome2) {
    return 4 * block + 2 * outcome1 + outcome2;
  }

  // Entries in [-kTolerance, 0) are normalized to exactly 0 so that float
  // dust from upstream arithmetic cannot push payoff sums out of range.
  // Non-finite entries are rejected.
  explicit BehaviorSet(const std::array<double, kSize>& eps);

  // 1-based accessor matching the conventional numbering above.
  double eps(int index_1based) const;

  const std::array<double, kSize>& values() const { return eps_; }

  bool operator==(const BehaviorSet& other) const = default;

 private:
  std::array<double, kSize> eps_;
};

// The marginal strategy profile (p, q, p', q'): probabilities of the first
// action/outcome for, in order, Alice type 1, Alice type 2, Bob type 1,
// Bob type 2. Components must lie in [0,1]; dust within kTolerance outside
// the interval is clamped at construction.
struct StrategyProfile {
  StrategyProfile(double p, double q, double p_prime, double q_prime);

  double p;
  double q;
  double p_prime;
  double q_prime;

  bool operator==(const StrategyProfile& other) const = default;
};

// The eight independent probabilities (eps_1, eps_4, eps_5, eps_8, eps_9,
// eps_12, eps_14, eps_15), in that fixed order. The other eight entries are
// affine functions of these; octets whose dependent entries fall outside
// [0,1] (within kTolerance) are rejected at construction with an
// InfeasibleOctetError naming the offending dependent indices.
class IndependentOctet {
 public:
  static constexpr int kSize = 8;
  static constexpr std::array<int, kSize> kEpsIndices = {1, 4,  5,  8,
                                                         9, 12, 14, 15};

  explicit IndependentOctet(const std::array<double, kSize>& mu);

  const std::array<double, kSize>& mu() const { return mu_; }
  double operator[](int k) const { return mu_[static_cast<size_t>(k)]; }

  bool operator==(const IndependentOctet& other) const = default;

 private:
  std::array<double, kSize> mu_;
};

// One named constraint evaluation: residual is the absolute violation
// (0 when satisfied within kTolerance).
struct ConstraintCheck {
  std::string name;
  double residual;
  bool ok;
};

// Full constraint report: 16 range checks, 4 block normalizations, and the
// 8 no-signaling (locality) equalities, 28 checks in all.
struct ValidationReport {
  bool valid;
  double max_residual;
  std::vector<ConstraintCheck> checks;
  std::vector<std::string> violations;
};

enum class ChshRegime {
  kLocal,            // |delta| <= 2
  kQuantumViolating, // 2 < |delta| <= 2*sqrt(2)
  kSuperQuantum,     // |delta| > 2*sqrt(2)
};

std::string_view to_string(ChshRegime regime);

struct ChshClass {
  double delta;
  ChshRegime regime;
};

// Evaluates every range, normalization, and no-signaling constraint with
// tolerance kTolerance. Never throws.
ValidationReport validate(const BehaviorSet& set);

// Rebuilds the full 16-entry set from the independent octet via the affine
// dependent-probability relations. The result satisfies all normalization
// and no-signaling constraints identically (the relations are their exact
// solution), so it always passes validate().
BehaviorSet reconstruct(const IndependentOctet& octet);

// Extracts the independent entries of a set, in octet order.
IndependentOctet independent_part(const BehaviorSet& set);

// Builds the product set: block (i,j) is the outer product of observer
// marginals (x, 1-x) and (y, 1-y) for the type pair selecting that block.
BehaviorSet from_factorizable(const StrategyProfile& profile);

// Recovers (p, q, p', q') from a valid set:
//   p  = (eps1+eps2+eps5+eps6)/2     q  = (eps9+eps10+eps13+eps14)/2
//   p' = (eps1+eps3+eps9+eps11)/2    q' = (eps5+eps7+eps13+eps15)/2
// Throws ConstraintError when the set is invalid.
StrategyProfile marginals(const BehaviorSet& set);

// True iff the set equals the product of its own marginals entrywise within
// kTolerance. Sound and complete for this 2x2x2 setting given the
// no-signaling constraints, because any product set is determined by its
// marginals. Throws ConstraintError when the set is invalid.
bool is_factorizable(const BehaviorSet& set);

// The CHSH functional
//   delta = 2*(eps1+eps4+eps5+eps8+eps9+eps12+eps14+eps15 - 2),
// equal to E(D1,D1') + E(D1,D2') + E(D2,D1') - E(D2,D2') in correlator form.
// Valid sets give delta in [-4, 4]; factorizable sets give |delta| <= 2.
// Throws ConstraintError when the set is invalid.
double chsh_delta(const BehaviorSet& set);

// Classifies by |delta| with kTolerance applied at both thresholds: local up
// to 2, quantum-violating up to 2*sqrt(2), super-quantum beyond. The label
// depends on delta only; no realizability claim is made.
ChshClass classify(const BehaviorSet& set);

}  // namespace eprgame

#endif  // EPRGAME_BEHAVIOR_HPP_
