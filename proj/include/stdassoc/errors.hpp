// Copyright 2026 The stdassoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace stdassoc {

// Input that is well-formed but cannot be evaluated (zero marginal, vanishing
// denominator, unknown item id).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or empty input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A raw measure fell outside the window [lower, upper] implied by the
// thresholds it is being standardized under.
class BoundsViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stdassoc
