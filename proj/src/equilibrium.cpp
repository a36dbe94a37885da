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

#include "eprgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace eprgame {
namespace {

StrategyProfile with_component(const StrategyProfile& s, int player_type,
                               double value) {
  StrategyProfile out = s;
  switch (player_type) {
    case 0:
      out.p = value;
      break;
    case 1:
      out.q = value;
      break;
    case 2:
      out.p_prime = value;
      break;
    case 3:
      out.q_prime = value;
      break;
    default:
      throw std::invalid_argument("player_type must be 0..3");
  }
  return out;
}

double component(const StrategyProfile& s, int player_type) {
  switch (player_type) {
    case 0:
      return s.p;
    case 1:
      return s.q;
    case 2:
      return s.p_prime;
    case 3:
      return s.q_prime;
    default:
      throw std::invalid_argument("player_type must be 0..3");
  }
}

double own_payoff(const GameSpec& spec, const StrategyProfile& s,
                  int player_type) {
  const PayoffQuadruple payoffs = mixed_payoffs(spec, s);
  switch (player_type) {
    case 0:
      return payoffs.a1;
    case 1:
      return payoffs.a2;
    case 2:
      return payoffs.b1;
    default:
      return payoffs.b2;
  }
}

bool near_vertex(double x) {
  return std::abs(x) <= kTolerance || std::abs(x - 1.0) <= kTolerance;
}

bool uses_reduced_forms(const GameSpec& spec) {
  return spec.has_standard_blocks() && spec.alice_type_prob() == 0.5;
}

void require_standard(const GameSpec& spec, const char* op) {
  if (!uses_reduced_forms(spec)) {
    throw std::invalid_argument(std::string(op) +
                                " requires the standard game blocks with "
                                "alice_type_prob = 1/2");
  }
}

}  // namespace

std::string_view to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kPure:
      return "pure";
    case EquilibriumKind::kMixed:
      return "mixed";
    case EquilibriumKind::kQuantum:
      return "quantum";
  }
  return "unknown";
}

GradientQuadruple classical_gradients(const GameSpec& spec,
                                      const StrategyProfile& s) {
  if (uses_reduced_forms(spec)) {
    const double sum_bob = s.p_prime + s.q_prime;
    const double t = 3 * spec.omega() * s.p + 3 * (1 - spec.omega()) * s.q;
    return {
        1.5 * sum_bob - 1,
        2 - 1.5 * sum_bob,
        t - 2,
        -(t - 1),
    };
  }
  // Payoffs are affine in each own component, so the slope is the exact
  // difference between the component at 1 and at 0.
  GradientQuadruple g{};
  double* slots[4] = {&g.dA1_dp, &g.dA2_dq, &g.dB1_dpprime, &g.dB2_dqprime};
  for (int t = 0; t < 4; ++t) {
    *slots[t] = own_payoff(spec, with_component(s, t, 1.0), t) -
                own_payoff(spec, with_component(s, t, 0.0), t);
  }
  return g;
}

DeviationScan brute_force_best_response(const GameSpec& spec,
                                        const StrategyProfile& s,
                                        int player_type, int grid_n) {
  if (grid_n < 2) {
    throw std::invalid_argument("grid_n must be at least 2");
  }
  const double current_value = component(s, player_type);
  const double current_payoff = own_payoff(spec, s, player_type);

  double best_value = current_value;
  double best_payoff = current_payoff;
  for (int i = 0; i < grid_n; ++i) {
    const double value =
        static_cast<double>(i) / static_cast<double>(grid_n - 1);
    const double payoff =
        own_payoff(spec, with_component(s, player_type, value), player_type);
    if (payoff > best_payoff) {
      best_payoff = payoff;
      best_value = value;
    }
  }
  return {best_value, best_payoff - current_payoff};
}

VerificationResult verify_classical(const GameSpec& spec,
                                    const StrategyProfile& s) {
  VerificationResult result;
  result.gradients = classical_gradients(spec, s);
  result.payoffs = mixed_payoffs(spec, s);

  // Exact worst-case deviation per type; payoffs are affine per component,
  // so scanning the two vertices is the full deviation set.
  result.equilibrium = true;
  for (int t = 0; t < 4; ++t) {
    const DeviationScan scan = brute_force_best_response(spec, s, t, 2);
    result.margins[static_cast<size_t>(t)] = scan.gain;
    if (scan.gain > kTolerance) {
      result.equilibrium = false;
      std::ostringstream msg;
      msg << kTypeNames[static_cast<size_t>(t)] << " gains " << scan.gain
          << " by moving to " << scan.best_value;
      result.violations.push_back(msg.str());
    }
  }

  if (result.equilibrium) {
    const bool pure = near_vertex(s.p) && near_vertex(s.q) &&
                      near_vertex(s.p_prime) && near_vertex(s.q_prime);
    result.report = EquilibriumReport{
        pure ? EquilibriumKind::kPure : EquilibriumKind::kMixed,
        s,
        result.payoffs,
        result.margins,
        std::nullopt,
        std::nullopt,
    };
  }
  return result;
}

std::vector<PureEquilibrium> find_pure_bne(const GameSpec& spec) {
  std::vector<PureEquilibrium> out;
  for (const Action alice1 : kActions) {
    for (const Action alice2 : kActions) {
      for (const Action bob1 : kActions) {
        for (const Action bob2 : kActions) {
          const PureQuadruple pq{alice1, alice2, bob1, bob2};
          const PayoffQuadruple base = pure_payoffs(spec, pq);

          auto flipped = [&pq](int t) {
            PureQuadruple alt = pq;
            Action* slot[4] = {&alt.alice1, &alt.alice2, &alt.bob1, &alt.bob2};
            *slot[t] = (*slot[t] == Action::kB) ? Action::kS : Action::kB;
            return alt;
          };

          bool weak_ne = true;
          for (int t = 0; t < 4 && weak_ne; ++t) {
            const PayoffQuadruple alt = pure_payoffs(spec, flipped(t));
            const double gains[4] = {alt.a1 - base.a1, alt.a2 - base.a2,
                                     alt.b1 - base.b1, alt.b2 - base.b2};
            if (gains[t] > kTolerance) weak_ne = false;
          }
          if (weak_ne) out.push_back({pq, base});
        }
      }
    }
  }
  return out;
}

bool ComponentInterval::is_point() const {
  return hi - lo <= kTolerance;
}

namespace {

// One best-response regime: over the stated range of the opposing
// aggregate, the two own components are pinned as given (or free).
struct Regime {
  double range_lo;
  double range_hi;
  std::optional<double> first;   // p for Alice regimes, p' for Bob regimes
  std::optional<double> second;  // q, or q'
};

// Alice's regimes over s = p'+q': dA1_dp = (3/2)s - 1 switches sign at
// s = 2/3 and dA2_dq = 2 - (3/2)s at s = 4/3. Closed ranges; boundary
// points belong to the adjacent equality regimes as well, and the duplicate
// solutions are absorbed below.
constexpr double kAliceLow = 2.0 / 3.0;
constexpr double kAliceHigh = 4.0 / 3.0;

const std::array<Regime, 5> kAliceRegimes = {{
    {0.0, kAliceLow, 0.0, 1.0},
    {kAliceLow, kAliceLow, std::nullopt, 1.0},
    {kAliceLow, kAliceHigh, 1.0, 1.0},
    {kAliceHigh, kAliceHigh, 1.0, std::nullopt},
    {kAliceHigh, 2.0, 1.0, 0.0},
}};

// Bob's regimes over t = 3*omega*p + 3*(1-omega)*q: dB1_dpprime = t - 2 and
// dB2_dqprime = 1 - t switch at t = 2 and t = 1.
const std::array<Regime, 5> kBobRegimes = {{
    {0.0, 1.0, 0.0, 1.0},
    {1.0, 1.0, 0.0, std::nullopt},
    {1.0, 2.0, 0.0, 0.0},
    {2.0, 2.0, std::nullopt, 0.0},
    {2.0, 3.0, 1.0, 0.0},
}};

struct IntervalPair {
  ComponentInterval first;
  ComponentInterval second;
};

// Resolves one side's components given its regime and the opposing side's
// required aggregate range [lo, hi], where the aggregate is
// c1*first + c2*second. At most one component is free; its admissible
// interval is the preimage of [lo, hi] intersected with [0,1]. Returns
// nothing when the intersection is empty.
std::optional<IntervalPair> resolve_side(const Regime& regime, double c1,
                                         double c2, double lo, double hi) {
  const bool first_free = !regime.first.has_value();
  const bool second_free = !regime.second.has_value();

  const double fixed_part = (first_free ? 0.0 : c1 * *regime.first) +
                            (second_free ? 0.0 : c2 * *regime.second);
  const double coeff = first_free ? c1 : (second_free ? c2 : 0.0);

  ComponentInterval free_range{0.0, 1.0};
  if (first_free || second_free) {
    if (coeff > 0.0) {
      free_range.lo = std::max(0.0, (lo - fixed_part) / coeff);
      free_range.hi = std::min(1.0, (hi - fixed_part) / coeff);
      if (free_range.lo > free_range.hi + kTolerance) return std::nullopt;
      free_range.lo = std::min(free_range.lo, free_range.hi);
    } else {
      // Zero coefficient (omega at 0 or 1): the free component does not
      // move the aggregate, which must then land in range by itself.
      if (fixed_part < lo - kTolerance || fixed_part > hi + kTolerance) {
        return std::nullopt;
      }
    }
  } else {
    if (fixed_part < lo - kTolerance || fixed_part > hi + kTolerance) {
      return std::nullopt;
    }
  }

  auto interval = [&](const std::optional<double>& fixed) {
    return fixed ? ComponentInterval{*fixed, *fixed} : free_range;
  };
  return IntervalPair{interval(regime.first), interval(regime.second)};
}

bool contains(const ComponentInterval& outer, const ComponentInterval& inner) {
  return inner.lo >= outer.lo - kTolerance && inner.hi <= outer.hi + kTolerance;
}

bool family_contains(const EquilibriumFamily& outer,
                     const EquilibriumFamily& inner) {
  return contains(outer.p, inner.p) && contains(outer.q, inner.q) &&
         contains(outer.p_prime, inner.p_prime) &&
         contains(outer.q_prime, inner.q_prime);
}

}  // namespace

std::vector<EquilibriumFamily> find_mixed_bne(const GameSpec& spec) {
  require_standard(spec, "find_mixed_bne");
  const double omega = spec.omega();

  std::vector<EquilibriumFamily> families;
  for (const Regime& alice : kAliceRegimes) {
    for (const Regime& bob : kBobRegimes) {
      // s = p' + q' must land in Alice's range; this constrains only Bob's
      // free component. t = 3*omega*p + 3*(1-omega)*q must land in Bob's
      // range, constraining only Alice's. The two resolutions are therefore
      // independent.
      const std::optional<IntervalPair> bob_side =
          resolve_side(bob, 1.0, 1.0, alice.range_lo, alice.range_hi);
      if (!bob_side) continue;
      const std::optional<IntervalPair> alice_side = resolve_side(
          alice, 3 * omega, 3 * (1 - omega), bob.range_lo, bob.range_hi);
      if (!alice_side) continue;

      families.push_back({alice_side->first, alice_side->second,
                          bob_side->first, bob_side->second});
    }
  }

  // Drop families contained in another (regime boundaries produce duplicate
  // and nested solutions).
  std::vector<EquilibriumFamily> maximal;
  for (size_t i = 0; i < families.size(); ++i) {
    bool absorbed = false;
    for (size_t j = 0; j < families.size() && !absorbed; ++j) {
      if (i == j) continue;
      if (family_contains(families[j], families[i])) {
        // Of two identical families keep the first.
        absorbed = !family_contains(families[i], families[j]) || j < i;
      }
    }
    if (!absorbed) maximal.push_back(families[i]);
  }
  return maximal;
}

EquilibriumReport quantum_bne(const GameSpec& spec) {
  require_standard(spec, "quantum_bne");
  const double omega = spec.omega();

  // Payoff derivatives along the four independent coordinates available to
  // the type players when deviations range over all valid sets. Their signs
  // are omega-invariant, so the maximizing marginals are the same for every
  // omega.
  const std::array<double, 4> derivative = {2.0, 4.0, -2.0,
                                            -2.0 * (2.0 * omega + 1.0)};
  std::array<double, 4> target{};
  for (size_t t = 0; t < 4; ++t) {
    target[t] = derivative[t] > 0.0 ? 1.0 : 0.0;
  }
  const StrategyProfile profile(target[0], target[1], target[2], target[3]);

  // The constraint algebra pins the whole set once the marginals are fixed
  // to vertices: it is the product set of the marginals.
  const BehaviorSet set = from_factorizable(profile);

  // Consistency of the construction: the derived set must reproduce the
  // marginals and pass every constraint.
  const StrategyProfile recovered = marginals(set);
  if (std::abs(recovered.p - profile.p) > kTolerance ||
      std::abs(recovered.q - profile.q) > kTolerance ||
      std::abs(recovered.p_prime - profile.p_prime) > kTolerance ||
      std::abs(recovered.q_prime - profile.q_prime) > kTolerance) {
    throw Error("quantum_bne: marginal reconstruction mismatch");
  }

  // Worst-case deviation gain per type under the derivative structure
  // above: the slope is constant, so the gain of moving component x to y is
  // slope * (y - x), maximized at a vertex.
  std::array<double, 4> margins{};
  for (size_t t = 0; t < 4; ++t) {
    const double x = target[t];
    margins[t] = std::max(
        {0.0, derivative[t] * (1.0 - x), derivative[t] * (0.0 - x)});
  }

  return EquilibriumReport{
      EquilibriumKind::kQuantum,
      profile,
      epr_payoffs(spec, set),
      margins,
      set,
      chsh_delta(set),
  };
}

}  // namespace eprgame
