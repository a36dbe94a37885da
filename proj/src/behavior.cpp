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

#include "eprgame/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eprgame {
namespace {

// Clamps float dust just outside [0,1] back onto the interval; values beyond
// kTolerance are left alone for validation to flag.
double clamp_dust(double x) {
  if (x < 0.0 && x >= -kTolerance) return 0.0;
  if (x > 1.0 && x <= 1.0 + kTolerance) return 1.0;
  return x;
}

// Distance of x from the interval [0,1].
double range_residual(double x) {
  return std::max({0.0, -x, x - 1.0});
}

void throw_if_invalid(const BehaviorSet& set, const char* op) {
  ValidationReport report = validate(set);
  if (report.valid) return;
  std::ostringstream msg;
  msg << op << ": behavior set violates " << report.violations.size()
      << " constraint(s), max residual " << report.max_residual;
  throw ConstraintError(msg.str(), report.violations);
}

}  // namespace

BehaviorSet::BehaviorSet(const std::array<double, kSize>& eps) : eps_(eps) {
  std::vector<std::string> bad;
  for (int j = 0; j < kSize; ++j) {
    double& e = eps_[static_cast<size_t>(j)];
    if (!std::isfinite(e)) {
      bad.push_back("finite eps" + std::to_string(j + 1));
    } else if (e < 0.0 && e >= -kTolerance) {
      e = 0.0;
    }
  }
  if (!bad.empty()) {
    throw ConstraintError("behavior set has non-finite entries", bad);
  }
}

double BehaviorSet::eps(int index_1based) const {
  return eps_[static_cast<size_t>(index_1based - 1)];
}

StrategyProfile::StrategyProfile(double p_in, double q_in, double p_prime_in,
                                 double q_prime_in)
    : p(clamp_dust(p_in)),
      q(clamp_dust(q_in)),
      p_prime(clamp_dust(p_prime_in)),
      q_prime(clamp_dust(q_prime_in)) {
  const std::array<std::pair<const char*, double>, 4> comps = {
      {{"p", p}, {"q", q}, {"p'", p_prime}, {"q'", q_prime}}};
  std::vector<std::string> bad;
  for (const auto& [name, value] : comps) {
    if (!std::isfinite(value) || range_residual(value) > 0.0) {
      bad.push_back(std::string("range ") + name);
    }
  }
  if (!bad.empty()) {
    throw ConstraintError("strategy profile components must lie in [0,1]",
                          bad);
  }
}

namespace {

// The eight dependent probabilities as affine functions of the octet
// (eps1, eps4, eps5, eps8, eps9, eps12, eps14, eps15). Solving the four
// normalization and eight no-signaling equations for the complementary
// entries gives, with all divisions by 2:
//   eps2  = (1 - eps1 - eps4 + eps5 - eps8 - eps9 + eps12 + eps14 - eps15)/2
//   eps3  = (1 - eps1 - eps4 - eps5 + eps8 + eps9 - eps12 - eps14 + eps15)/2
//   eps6  = (1 + eps1 - eps4 - eps5 - eps8 - eps9 + eps12 + eps14 - eps15)/2
//   eps7  = (1 - eps1 + eps4 - eps5 - eps8 + eps9 - eps12 - eps14 + eps15)/2
//   eps10 = (1 - eps1 + eps4 + eps5 - eps8 - eps9 - eps12 + eps14 - eps15)/2
//   eps11 = (1 + eps1 - eps4 - eps5 + eps8 - eps9 - eps12 - eps14 + eps15)/2
//   eps13 = (1 - eps1 + eps4 + eps5 - eps8 + eps9 - eps12 - eps14 - eps15)/2
//   eps16 = (1 + eps1 - eps4 - eps5 + eps8 - eps9 + eps12 - eps14 - eps15)/2
std::array<double, BehaviorSet::kSize> expand_octet(
    const std::array<double, IndependentOctet::kSize>& mu) {
  const double e1 = mu[0], e4 = mu[1], e5 = mu[2], e8 = mu[3];
  const double e9 = mu[4], e12 = mu[5], e14 = mu[6], e15 = mu[7];

  std::array<double, BehaviorSet::kSize> eps{};
  eps[0] = e1;
  eps[1] = (1 - e1 - e4 + e5 - e8 - e9 + e12 + e14 - e15) / 2;
  eps[2] = (1 - e1 - e4 - e5 + e8 + e9 - e12 - e14 + e15) / 2;
  eps[3] = e4;
  eps[4] = e5;
  eps[5] = (1 + e1 - e4 - e5 - e8 - e9 + e12 + e14 - e15) / 2;
  eps[6] = (1 - e1 + e4 - e5 - e8 + e9 - e12 - e14 + e15) / 2;
  eps[7] = e8;
  eps[8] = e9;
  eps[9] = (1 - e1 + e4 + e5 - e8 - e9 - e12 + e14 - e15) / 2;
  eps[10] = (1 + e1 - e4 - e5 + e8 - e9 - e12 - e14 + e15) / 2;
  eps[11] = e12;
  eps[12] = (1 - e1 + e4 + e5 - e8 + e9 - e12 - e14 - e15) / 2;
  eps[13] = e14;
  eps[14] = e15;
  eps[15] = (1 + e1 - e4 - e5 + e8 - e9 + e12 - e14 - e15) / 2;
  return eps;
}

}  // namespace

IndependentOctet::IndependentOctet(const std::array<double, kSize>& mu)
    : mu_(mu) {
  std::vector<int> bad;
  for (int k = 0; k < kSize; ++k) {
    double& m = mu_[static_cast<size_t>(k)];
    m = clamp_dust(m);
    if (!std::isfinite(m) || range_residual(m) > 0.0) {
      bad.push_back(kEpsIndices[static_cast<size_t>(k)]);
    }
  }
  if (!bad.empty()) {
    throw InfeasibleOctetError(
        "octet entries must be probabilities in [0,1]", bad);
  }

  // Reject octets whose dependent entries leave [0,1]; clamping them would
  // silently break the no-signaling equalities.
  const std::array<double, BehaviorSet::kSize> eps = expand_octet(mu_);
  std::ostringstream detail;
  for (int j = 0; j < BehaviorSet::kSize; ++j) {
    const double e = eps[static_cast<size_t>(j)];
    if (range_residual(e) > kTolerance) {
      if (!bad.empty()) detail << ", ";
      bad.push_back(j + 1);
      detail << "eps" << (j + 1) << " = " << e;
    }
  }
  if (!bad.empty()) {
    throw InfeasibleOctetError(
        "octet is infeasible: dependent entries leave [0,1]: " + detail.str(),
        bad);
  }
}

std::string_view to_string(ChshRegime regime) {
  switch (regime) {
    case ChshRegime::kLocal:
      return "local";
    case ChshRegime::kQuantumViolating:
      return "quantum-violating";
    case ChshRegime::kSuperQuantum:
      return "super-quantum";
  }
  return "unknown";
}

ValidationReport validate(const BehaviorSet& set) {
  ValidationReport report;
  report.valid = true;
  report.max_residual = 0.0;

  auto add = [&report](std::string name, double residual) {
    const bool ok = residual <= kTolerance;
    report.max_residual = std::max(report.max_residual, residual);
    if (!ok) {
      report.valid = false;
      report.violations.push_back(name);
    }
    report.checks.push_back({std::move(name), residual, ok});
  };

  const std::array<double, BehaviorSet::kSize>& e = set.values();
  for (int j = 0; j < BehaviorSet::kSize; ++j) {
    add("range eps" + std::to_string(j + 1),
        range_residual(e[static_cast<size_t>(j)]));
  }

  for (int b = 0; b < 4; ++b) {
    const double sum = e[static_cast<size_t>(4 * b)] +
                       e[static_cast<size_t>(4 * b + 1)] +
                       e[static_cast<size_t>(4 * b + 2)] +
                       e[static_cast<size_t>(4 * b + 3)];
    add("norm block" + std::to_string(b + 1), std::abs(sum - 1.0));
  }

  // No-signaling: each observer's outcome marginal must not depend on the
  // other observer's direction. Eight equalities; 1-based eps indices.
  struct Equality {
    const char* name;
    int l1, l2, r1, r2;
  };
  constexpr std::array<Equality, 8> kEqualities = {{
      {"nosig o1+ D1", 1, 2, 5, 6},
      {"nosig o2+ D1'", 1, 3, 9, 11},
      {"nosig o1+ D2", 9, 10, 13, 14},
      {"nosig o2+ D2'", 5, 7, 13, 15},
      {"nosig o1- D1", 3, 4, 7, 8},
      {"nosig o1- D2", 11, 12, 15, 16},
      {"nosig o2- D1'", 2, 4, 10, 12},
      {"nosig o2- D2'", 6, 8, 14, 16},
  }};
  for (const Equality& eq : kEqualities) {
    const double lhs = set.eps(eq.l1) + set.eps(eq.l2);
    const double rhs = set.eps(eq.r1) + set.eps(eq.r2);
    add(eq.name, std::abs(lhs - rhs));
  }

  return report;
}

BehaviorSet reconstruct(const IndependentOctet& octet) {
  return BehaviorSet(expand_octet(octet.mu()));
}

IndependentOctet independent_part(const BehaviorSet& set) {
  std::array<double, IndependentOctet::kSize> mu{};
  for (int k = 0; k < IndependentOctet::kSize; ++k) {
    mu[static_cast<size_t>(k)] =
        set.eps(IndependentOctet::kEpsIndices[static_cast<size_t>(k)]);
  }
  return IndependentOctet(mu);
}

BehaviorSet from_factorizable(const StrategyProfile& profile) {
  // Block (i,j) is the outer product of observer marginals: observer 1
  // contributes (p, 1-p) or (q, 1-q) by row type, observer 2 (p', 1-p') or
  // (q', 1-q') by column type.
  const std::array<double, 2> first = {profile.p, profile.q};
  const std::array<double, 2> second = {profile.p_prime, profile.q_prime};

  std::array<double, BehaviorSet::kSize> eps{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double x = first[static_cast<size_t>(i)];
      const double y = second[static_cast<size_t>(j)];
      const int block = 2 * i + j;
      eps[static_cast<size_t>(BehaviorSet::index(block, 0, 0))] = x * y;
      eps[static_cast<size_t>(BehaviorSet::index(block, 0, 1))] =
          x * (1.0 - y);
      eps[static_cast<size_t>(BehaviorSet::index(block, 1, 0))] =
          (1.0 - x) * y;
      eps[static_cast<size_t>(BehaviorSet::index(block, 1, 1))] =
          (1.0 - x) * (1.0 - y);
    }
  }
  return BehaviorSet(eps);
}

StrategyProfile marginals(const BehaviorSet& set) {
  throw_if_invalid(set, "marginals");
  const double p = (set.eps(1) + set.eps(2) + set.eps(5) + set.eps(6)) / 2;
  const double q = (set.eps(9) + set.eps(10) + set.eps(13) + set.eps(14)) / 2;
  const double pp = (set.eps(1) + set.eps(3) + set.eps(9) + set.eps(11)) / 2;
  const double qp = (set.eps(5) + set.eps(7) + set.eps(13) + set.eps(15)) / 2;
  return StrategyProfile(p, q, pp, qp);
}

bool is_factorizable(const BehaviorSet& set) {
  throw_if_invalid(set, "is_factorizable");
  const BehaviorSet product = from_factorizable(marginals(set));
  for (int j = 0; j < BehaviorSet::kSize; ++j) {
    if (std::abs(product.values()[static_cast<size_t>(j)] -
                 set.values()[static_cast<size_t>(j)]) > kTolerance) {
      return false;
    }
  }
  return true;
}

double chsh_delta(const BehaviorSet& set) {
  throw_if_invalid(set, "chsh_delta");
  const double sum = set.eps(1) + set.eps(4) + set.eps(5) + set.eps(8) +
                     set.eps(9) + set.eps(12) + set.eps(14) + set.eps(15);
  return 2.0 * (sum - 2.0);
}

ChshClass classify(const BehaviorSet& set) {
  const double delta = chsh_delta(set);
  const double magnitude = std::abs(delta);
  ChshRegime regime = ChshRegime::kSuperQuantum;
  if (magnitude <= 2.0 + kTolerance) {
    regime = ChshRegime::kLocal;
  } else if (magnitude <= 2.0 * std::sqrt(2.0) + kTolerance) {
    regime = ChshRegime::kQuantumViolating;
  }
  return {delta, regime};
}

}  // namespace eprgame
