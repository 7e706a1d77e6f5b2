// Copyright 2026 The ccopt Authors
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

#ifndef CCOPT_ERRORS_HPP_
#define CCOPT_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace ccopt {

/// Invalid configuration or argument. `field()` names the offending
/// parameter so front ends can report it verbatim.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A cost or constraint evaluation failed (dimension mismatch, point outside
/// the domain, or a non-finite result).
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ccopt

#endif  // CCOPT_ERRORS_HPP_
