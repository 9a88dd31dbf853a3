// Copyright 2026 The dtqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dtqw {

/// Bad input to a public operation (non-unit axis, unnormalized spinor, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The quasi-energy gap closes (E = 0 or E = pi) where a Bloch direction,
/// eigenvector or Berry connection was requested.
class GapClosure : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two states (or matrices) differ by more than a global phase.
class NotPurePhase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// tan(theta1) = 0 in the split-step ratio formula.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numeric identity that should hold for every valid input was violated.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dtqw
