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

#include "eprgame/quantum.hpp"

#include <cmath>
#include <sstream>

namespace eprgame {

TwoQubitState::TwoQubitState(complex_t alpha, complex_t beta, complex_t gamma,
                             complex_t delta)
    : amps_{alpha, beta, gamma, delta} {
  double sum = 0.0;
  for (const complex_t& a : amps_) sum += std::norm(a);
  const double residual = std::abs(sum - 1.0);
  if (!std::isfinite(sum) || residual > kTolerance) {
    std::ostringstream msg;
    msg << "state is not normalized: |alpha|^2+|beta|^2+|gamma|^2+|delta|^2 = "
        << sum << " (residual " << residual << ")";
    throw NormalizationError(msg.str(), residual);
  }
}

TwoQubitState TwoQubitState::singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return TwoQubitState(0.0, r, -r, 0.0);
}

TwoQubitState TwoQubitState::zerozero() {
  return TwoQubitState(1.0, 0.0, 0.0, 0.0);
}

TwoQubitState TwoQubitState::plusminus() {
  return TwoQubitState(0.5, -0.5, 0.5, -0.5);
}

std::array<complex_t, 2> eigenvector(const PlanarDirection& n, int sign) {
  const double r = 1.0 / std::sqrt(2.0);
  const complex_t phase(n.nx(), n.ny());
  return {complex_t(r, 0.0), static_cast<double>(sign) * phase * r};
}

double joint_probability(const TwoQubitState& state, const PlanarDirection& n1,
                         const PlanarDirection& n2, int s1, int s2) {
  const std::array<complex_t, 2> v1 = eigenvector(n1, s1);
  const std::array<complex_t, 2> v2 = eigenvector(n2, s2);

  // <v1 x v2 | psi> with the bra conjugating the eigenvector amplitudes.
  complex_t amp(0.0, 0.0);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      amp += std::conj(v1[static_cast<size_t>(j)] *
                       v2[static_cast<size_t>(k)]) *
             state.amp(2 * j + k);
    }
  }
  return std::norm(amp);
}

BehaviorSet generate(const TwoQubitState& state, const DirectionConfig& dirs) {
  const std::array<std::pair<PlanarDirection, PlanarDirection>, 4> pairs = {{
      {dirs.a, dirs.b},
      {dirs.a, dirs.d},
      {dirs.c, dirs.b},
      {dirs.c, dirs.d},
  }};
  constexpr std::array<int, 2> kSigns = {+1, -1};

  std::array<double, BehaviorSet::kSize> eps{};
  for (int block = 0; block < 4; ++block) {
    const auto& [n1, n2] = pairs[static_cast<size_t>(block)];
    for (int o1 = 0; o1 < 2; ++o1) {
      for (int o2 = 0; o2 < 2; ++o2) {
        eps[static_cast<size_t>(BehaviorSet::index(block, o1, o2))] =
            joint_probability(state, n1, n2, kSigns[static_cast<size_t>(o1)],
                              kSigns[static_cast<size_t>(o2)]);
      }
    }
  }
  return BehaviorSet(eps);
}

}  // namespace eprgame
