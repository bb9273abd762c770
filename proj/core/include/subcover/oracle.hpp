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

// Brute-force checks that share no code with the constructions: exhaustive
// cover/partition verification and an exact minimum set cover over the
// points of projective space.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcover/covers.hpp"
#include "subcover/gf.hpp"
#include "subcover/linalg.hpp"
#include "subcover/partitions.hpp"

namespace subcover {

/// Number of d-dimensional subspaces of F_q^n.
mpz_class gaussian_binomial(std::size_t n, std::size_t d, const mpz_class& q);

/// Every d-dimensional subspace of F_q^n exactly once, built directly as RREF
/// matrices (pivot set in lexicographic order, then free entries).
/// Throws BoundExceeded when the Gaussian binomial exceeds limits.max_subspaces.
std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, std::size_t d, const Limits& limits = {});

/// Lines of F_q^n, each represented by its vector whose first nonzero
/// coordinate is 1.
struct ProjectivePointSet {
  Field field;
  std::size_t n = 0;
  std::vector<Row> points;
};

ProjectivePointSet enumerate_points(const Field& field, std::size_t n, const Limits& limits = {});

/// Packs v into sum v_i q^(n-1-i), so packing order is lexicographic order.
std::uint64_t pack_vector(std::span<const elem_t> v, std::uint32_t q);
Row unpack_vector(std::uint64_t index, std::uint32_t q, std::size_t n);

struct VerificationReport {
  bool ok = true;
  std::vector<Row> uncovered;
  /// Partitions only: nonzero vectors lying in two or more parts.
  std::vector<Row> double_covered;
  /// Structural problems such as a subspace of the wrong dimension.
  std::vector<std::string> malformed;
  std::uint64_t checked = 0;
};

/// Checks every nonzero vector of F_q^n against the cover and every subspace
/// for dimension n - k. Throws BoundExceeded when q^n is above limits.
VerificationReport verify_cover(const Cover& cover, const Limits& limits = {});

/// Same check through projective points only (one scan per line instead of
/// per vector).
VerificationReport verify_cover_by_points(const Cover& cover, const Limits& limits = {});

/// Every nonzero vector must lie in exactly one part.
VerificationReport verify_partition(const Partition& partition, const Limits& limits = {});

struct MinCoverResult {
  std::uint64_t size = 0;
  /// Subspaces of one optimal cover (deterministic for a single thread).
  std::vector<Subspace> witness;
  /// ceil(points / points per subspace).
  std::uint64_t counting_bound = 0;
  std::uint64_t nodes = 0;
};

/// Exact minimum number of (n - k)-dimensional subspaces covering F_q^n.
///
/// Depth-first branch and bound over projective points: branch on the first
/// uncovered point, trying the subspaces through it in order of decreasing
/// gain, and prune when depth + ceil(uncovered / points per subspace) cannot
/// beat the incumbent. The search starts by looking for a cover of size at
/// most upper_hint (default: the closed-form cover number) and falls back to
/// an unrestricted search if none exists. Root branches may be split across
/// threads; the returned size does not depend on the thread count.
MinCoverResult min_cover_size(const Field& field, std::size_t n, std::size_t k,
                              std::optional<std::uint64_t> upper_hint = std::nullopt, unsigned threads = 1,
                              const Limits& limits = {});

}  // namespace subcover
