// Copyright 2026 The subcover Authors
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

#include <cstdint>

namespace subcover {

/// Desk-scale guards for anything that materializes q^n objects.
struct Limits {
  /// Largest q^n (and field order) that may be enumerated.
  std::uint64_t max_q_pow = std::uint64_t{1} << 20;
  /// Largest number of subspaces the oracle may enumerate.
  std::uint64_t max_subspaces = 100000;

  /// Defaults, with max_q_pow overridden by SUBCOVER_MAX_Q_POW when set.
  static Limits from_env();
};

}  // namespace subcover
