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

// Partitions of F_q^n into subspaces meeting pairwise in {0}.

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "subcover/gf.hpp"
#include "subcover/linalg.hpp"

namespace subcover {

enum class PartitionKind { kSpread, kMixed };

std::string_view to_string(PartitionKind kind);

struct Partition {
  Field field;
  std::size_t n = 0;
  std::size_t d = 0;
  PartitionKind kind = PartitionKind::kSpread;
  /// For mixed partitions: whether 1 < d < n/2 holds, the range in which the
  /// classical statement is usually quoted. Always true for spreads.
  bool strict_interior = true;
  std::vector<Subspace> parts;
};

/// Spread of F_q^n by (q^n - 1)/(q^d - 1) subspaces of dimension d, d | n.
///
/// F_q^n is modelled as GF(q^n); the subfield GF(q^d) is the kernel of the
/// F_q-linear map a -> a^(q^d) - a, and the parts are its multiplicative
/// translates alpha * GF(q^d), collected in increasing order of alpha and
/// deduplicated by canonical form.
Partition spread_partition(const Field& field, std::size_t n, std::size_t d, const Limits& limits = {});

/// Partition of F_q^n into K x {0} (dimension n - d) and the q^(n-d) graphs
/// G_a = {(a b, b) : b in B}, where K = GF(q^(n-d)) and B is the span of the
/// first d basis elements 1, x, ..., x^(d-1) of K. Requires 1 <= d <= n/2.
/// The first part is K x {0}; graphs follow in increasing order of a.
Partition mixed_partition(const Field& field, std::size_t n, std::size_t d, const Limits& limits = {});

}  // namespace subcover
