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

#include <algorithm>
#include <string>

#include "posmap/errors.hpp"

namespace posmap {

/// Every numerical threshold used by the library. All checks are relative
/// to max(1, ||M||_F) of the matrix being tested.
struct ToleranceConfig {
  double psd_rel_tol = 1e-9;
  double eig_offdiag_tol = 1e-12;
  double pinv_cutoff_rel = 1e-10;
  double equality_tol = 1e-8;
  double eig_reconstruct_tol = 1e-10;

  void validate() const {
    auto check = [](double v, const char* name) {
      if (!(v > 0.0 && v < 1e-3))
        throw DomainError(std::string("tolerance ") + name +
                          " must lie in (0, 1e-3)");
    };
    check(psd_rel_tol, "psd_rel_tol");
    check(eig_offdiag_tol, "eig_offdiag_tol");
    check(pinv_cutoff_rel, "pinv_cutoff_rel");
    check(equality_tol, "equality_tol");
    check(eig_reconstruct_tol, "eig_reconstruct_tol");
  }

  /// Negative slack below which a margin counts as a violation.
  double psd_band(double scale) const {
    return psd_rel_tol * std::max(1.0, scale);
  }
  double equality_band(double scale) const {
    return equality_tol * std::max(1.0, scale);
  }
};

}  // namespace posmap
