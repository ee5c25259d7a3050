// Copyright 2026 The posmap Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace posmap {

/// Shapes that do not fit together (block sizes, map domains, square-ness).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Caller supplied something outside an operation's domain: a non-PSD
/// matrix where PSD is required, a singular Phi(I), an unknown map id.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// NaN/Inf input or a solver that did not converge.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not. Always a bug or a tolerance
/// misconfiguration, never a property of the input.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace posmap
