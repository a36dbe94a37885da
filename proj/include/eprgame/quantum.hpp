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
// Two-qubit pure states measured along directions in the x-y plane, and the
// 16 joint outcome probabilities they induce over four direction pairs.

#ifndef EPRGAME_QUANTUM_HPP_
#define EPRGAME_QUANTUM_HPP_

#include <array>
#include <complex>

#include "eprgame/behavior.hpp"
#include "eprgame/common.hpp"

namespace eprgame {

using complex_t = std::complex<double>;

// A measurement direction in the x-y plane, given by its angle from the +x
// axis. The derived unit vector (cos angle, sin angle) has unit norm by
// construction.
struct PlanarDirection {
  double angle = 0.0;  // radians

  double nx() const { return std::cos(angle); }
  double ny() const { return std::sin(angle); }
};

// The four measurement directions: observer 1 chooses between a (D1) and
// c (D2); observer 2 between b (D1') and d (D2'). Coincident directions are
// permitted.
struct DirectionConfig {
  PlanarDirection a;
  PlanarDirection c;
  PlanarDirection b;
  PlanarDirection d;
};

// A pure state of two qubits with amplitudes (alpha, beta, gamma, delta) for
// the basis kets |00>, |01>, |10>, |11>. States are accepted up to global
// phase; the squared amplitudes must sum to 1 within kTolerance or
// construction throws NormalizationError carrying the residual.
class TwoQubitState {
 public:
  TwoQubitState(complex_t alpha, complex_t beta, complex_t gamma,
                complex_t delta);

  // Basis order |00>, |01>, |10>, |11>.
  complex_t amp(int i) const { return amps_[static_cast<size_t>(i)]; }
  const std::array<complex_t, 4>& amps() const { return amps_; }

  // (|01> - |10>)/sqrt(2), the maximally entangled pair.
  static TwoQubitState singlet();
  // |00>.
  static TwoQubitState zerozero();
  // (|0>+|1>)(|0>-|1>)/2, a product of +1 and -1 eigenstates of sigma_x.
  static TwoQubitState plusminus();

 private:
  std::array<complex_t, 4> amps_;
};

// The normalized eigenvector of sigma.n = [[0, nx - i*ny], [nx + i*ny, 0]]
// for the outcome sign (+1 or -1):
//   ( 1/sqrt(2), sign * (nx + i*ny)/sqrt(2) ).
std::array<complex_t, 2> eigenvector(const PlanarDirection& n, int sign);

// |<v1 x v2 | psi>|^2 where v1, v2 are the outcome eigenvectors of the two
// observers' directions. s1, s2 are +1 or -1.
double joint_probability(const TwoQubitState& state, const PlanarDirection& n1,
                         const PlanarDirection& n2, int s1, int s2);

// Fills all 16 probabilities over the direction pairs (a,b), (a,d), (c,b),
// (c,d) in the block layout of BehaviorSet. The result always passes
// validate(): quantum marginals are setting-independent, so the no-signaling
// equalities hold up to rounding, and the BehaviorSet constructor clears
// negative dust.
BehaviorSet generate(const TwoQubitState& state, const DirectionConfig& dirs);

}  // namespace eprgame

#endif  // EPRGAME_QUANTUM_HPP_
