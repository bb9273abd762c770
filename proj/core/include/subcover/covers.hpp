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

// Covers of vector spaces by subspaces of fixed codimension k.
//
// For a finite space F_q^n the minimal number of codimension-k subspaces whose
// union is the whole space is ceil((q^n - 1) / (q^(n-k) - 1)). cover_finite()
// realizes that count: a spread when (n - k) | n, and otherwise repeated
// mixed partitions ("peeling") followed by a spread of a quotient, lifted back.
// Over an infinite field the covers are indexed by projective k-space, and an
// infinite-dimensional space over an infinite field is a countable union of
// spans of a basis filtration.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "subcover/gf.hpp"
#include "subcover/linalg.hpp"

namespace subcover {

using Rational = mpq_class;

struct SpaceSpec {
  struct FiniteField {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
  };
  struct InfiniteField {
    std::string label = "Q";
  };

  std::variant<FiniteField, InfiniteField> field;
  /// Empty for an infinite-dimensional space.
  std::optional<std::size_t> dim;

  bool finite_field() const { return std::holds_alternative<FiniteField>(field); }
  /// Order of the field; requires finite_field().
  mpz_class q() const;
};

/// Minimal index set for a cover: a finite count, a countable family, or
/// F^k with one extra point (which has q^k + 1 elements over F_q).
struct CoverCardinality {
  enum class Kind { kFinite, kCountablyInfinite, kFieldPowerPlusPoint };

  Kind kind = Kind::kFinite;
  mpz_class count;  // kFinite
  std::size_t k = 0;  // kFieldPowerPlusPoint
  std::optional<mpz_class> counted;  // q^k + 1 when the field is finite

  std::string to_string() const;
  friend bool operator==(const CoverCardinality&, const CoverCardinality&) = default;
};

/// Throws InvalidArgument if k < 1, or if the dimension is finite and k >= n.
CoverCardinality nu(const SpaceSpec& spec, std::size_t k);

/// ceil((q^n - 1) / (q^(n-k) - 1)) with exact integers.
mpz_class finite_cover_number(const mpz_class& q, std::size_t n, std::size_t k);

/// ceil(n / (n - k)), the q -> 1 limit of the finite cover number.
std::uint64_t f1_cover_number(std::size_t n, std::size_t k);

/// Value of the rational function (q^n - 1)/(q^(n-k) - 1) at q = 1, obtained
/// by cancelling common factors (q - 1) through polynomial division.
Rational f1_limit_value(std::size_t n, std::size_t k);

struct CoverStep {
  enum class Kind { kSpread, kMixed, kTail, kLift };

  Kind kind = Kind::kSpread;
  /// Dimension of the space the step acts on.
  std::size_t ambient_dim = 0;
  /// Dimension of every subspace the step contributes (before lifting).
  std::size_t d = 0;
  mpz_class parts;
  /// kTail: kernel V0 of the quotient; kLift: kernel of the lift.
  std::size_t kernel_dim = 0;
  /// kTail: dimension of the quotient that gets spread.
  std::size_t quotient_dim = 0;

  friend bool operator==(const CoverStep&, const CoverStep&) = default;
};

std::string to_string(CoverStep::Kind kind);

/// Symbolic trace of the construction, computable for any size.
struct CoverPlan {
  mpz_class q;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<CoverStep> steps;

  /// "spread" when (n - k) | n, otherwise "peeling".
  std::string kind() const;
  mpz_class count() const;
  friend bool operator==(const CoverPlan&, const CoverPlan&) = default;
};

/// Throws InvalidArgument unless 1 <= k < n.
CoverPlan plan_cover(const mpz_class& q, std::size_t n, std::size_t k);

struct Cover {
  Field field;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Subspace> subspaces;
  CoverPlan provenance;
};

/// Materializes the cover traced by plan_cover(q, n, k). Every subspace has
/// dimension exactly n - k. Throws BoundExceeded when q^n is above limits;
/// use plan_cover() for counts beyond that.
Cover cover_finite(const Field& field, std::size_t n, std::size_t k, const Limits& limits = {});

/// Subspace-wise full preimage of a cover of the quotient space.
Cover lift_cover(const LinearQuotient& quotient, const Cover& cover);

// --- Projective index over an arbitrary field ------------------------------

/// A point (0, ..., 0, 1, tail...) of projective k-space with the leading 1 at
/// position i in [0, k].
template <typename Scalar>
struct ProjectiveIndex {
  std::size_t k = 0;
  std::size_t i = 0;
  std::vector<Scalar> tail;  // k - i coordinates

  friend bool operator==(const ProjectiveIndex&, const ProjectiveIndex&) = default;
};

/// v = residual + scale * generator, with residual supported off the
/// designated coordinates.
template <typename Scalar>
struct MembershipWitness {
  Scalar scale;
  std::vector<Scalar> generator;
  std::vector<Scalar> residual;
};

template <typename Scalar>
struct ProjectiveAssignment {
  ProjectiveIndex<Scalar> index;
  MembershipWitness<Scalar> witness;
};

namespace detail {
void check_designated(std::size_t dim, std::span<const std::size_t> designated);
}

/// Generator e_{d_i} + sum_{j > i} tail_j e_{d_j} of the subspace V_x indexed
/// by x, where d = designated. V_x is spanned by it together with every unit
/// vector off the designated coordinates.
template <typename Scalar>
std::vector<Scalar> projective_generator(const ProjectiveIndex<Scalar>& x, std::span<const std::size_t> designated,
                                         std::size_t dim, const Scalar& zero, const Scalar& one) {
  detail::check_designated(dim, designated);
  if (designated.size() != x.k + 1 || x.i > x.k || x.tail.size() != x.k - x.i) {
    throw InvalidArgument("projective index does not match the designated coordinates");
  }
  std::vector<Scalar> g(dim, zero);
  g[designated[x.i]] = one;
  for (std::size_t j = x.i + 1; j <= x.k; ++j) g[designated[j]] = x.tail[j - x.i - 1];
  return g;
}

/// Finds the index x with v in V_x. With beta the coordinates of v on the
/// designated positions and beta_i the first nonzero one, x has tail
/// beta_j / beta_i for j > i. When every beta vanishes, v already lies in the
/// span of the complement and the index (0, ..., 0, 1) is returned.
template <typename Scalar>
ProjectiveAssignment<Scalar> projective_assign(std::span<const Scalar> v, std::span<const std::size_t> designated) {
  detail::check_designated(v.size(), designated);
  const std::size_t k = designated.size() - 1;
  const Scalar zero = v[designated[0]] - v[designated[0]];

  std::size_t lead = 0;
  while (lead <= k && v[designated[lead]] == zero) ++lead;

  ProjectiveAssignment<Scalar> out{{k, k, {}}, {zero, {}, {}}};
  if (lead > k) {
    // Any index works; v lies in the common span of the complement.
    out.witness.scale = zero;
    out.witness.residual.assign(v.begin(), v.end());
    out.witness.generator.assign(v.size(), zero);
    return out;
  }
  const Scalar beta = v[designated[lead]];
  const Scalar one = beta / beta;
  out.index.i = lead;
  for (std::size_t j = lead + 1; j <= k; ++j) out.index.tail.push_back(v[designated[j]] / beta);
  out.witness.scale = beta;
  out.witness.generator = projective_generator(out.index, designated, v.size(), zero, one);
  out.witness.residual.assign(v.begin(), v.end());
  for (std::size_t c = 0; c < v.size(); ++c) out.witness.residual[c] = v[c] - beta * out.witness.generator[c];
  return out;
}

/// Recomputes the generator from the index and checks the witness exactly.
template <typename Scalar>
bool validate_assignment(std::span<const Scalar> v, std::span<const std::size_t> designated,
                         const ProjectiveAssignment<Scalar>& a, const Scalar& zero, const Scalar& one) {
  const auto& w = a.witness;
  if (w.residual.size() != v.size() || w.generator.size() != v.size()) return false;
  std::vector<Scalar> g;
  try {
    g = projective_generator(a.index, designated, v.size(), zero, one);
  } catch (const InvalidArgument&) {
    return false;
  }
  const bool degenerate = w.scale == zero;
  if (!degenerate && g != w.generator) return false;
  for (auto c : designated) {
    if (!(w.residual[c] == zero)) return false;
  }
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (!(v[c] == w.residual[c] + w.scale * w.generator[c])) return false;
  }
  return true;
}

// --- Countable cover ---------------------------------------------------------

/// A vector with finitely many nonzero coordinates over a countable basis
/// e_0, e_1, ...; keys are basis indices, values must be nonzero.
using FiniteSupportVector = std::map<std::uint64_t, Rational>;

/// Least n with support(v) inside {e_0, ..., e_{n-1}}, i.e. v in V_n for the
/// filtration V_n = span(e_0, ..., e_{n-1}). Zero maps to 0.
/// Throws InvalidArgument when a stored coefficient is zero.
std::uint64_t countable_cover_index(const FiniteSupportVector& v);

/// Membership v in V_n.
bool in_filtration_span(const FiniteSupportVector& v, std::uint64_t n);

}  // namespace subcover
