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

#ifndef EPRGAME_COMMON_HPP_
#define EPRGAME_COMMON_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace eprgame {

// Global comparison tolerance. All constraint and equality checks in the
// library use this single value; every formula is a low-degree polynomial in
// well-conditioned inputs, so nothing tighter is needed.
inline constexpr double kTolerance = 1e-9;

// Base class for domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A probability set or strategy profile failed its defining constraints.
// Carries the names of the violated checks.
class ConstraintError : public Error {
 public:
  ConstraintError(const std::string& what, std::vector<std::string> violations)
      : Error(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// An independent octet whose dependent entries fall outside [0,1].
// Carries the 1-based indices of the offending dependent entries.
class InfeasibleOctetError : public Error {
 public:
  InfeasibleOctetError(const std::string& what, std::vector<int> indices)
      : Error(what), indices_(std::move(indices)) {}
  const std::vector<int>& indices() const { return indices_; }

 private:
  std::vector<int> indices_;
};

// A quantum state whose squared amplitudes do not sum to 1 within tolerance.
// Carries the normalization residual |sum - 1|.
class NormalizationError : public Error {
 public:
  NormalizationError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace eprgame

#endif  // EPRGAME_COMMON_HPP_
