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

// Vectors, matrices and subspaces over GF(q).
//
// A Subspace always stores the reduced row-echelon basis of its span, so two
// subspaces are equal as sets exactly when their bases are identical.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "subcover/gf.hpp"
#include "subcover/limits.hpp"

namespace subcover {

/// A vector of F_q^n as element encodings.
using Row = std::vector<elem_t>;
using Matrix = std::vector<Row>;

struct RrefResult {
  Matrix rows;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Throws InvalidArgument on ragged input or
/// entries outside the field.
RrefResult rref(const Field& field, const Matrix& m);

/// Basis of {x : m x = 0} for a matrix with `cols` columns, one row per free
/// column of the RREF of m.
Matrix nullspace(const Field& field, const Matrix& m, std::size_t cols);

/// x * m, where m has one row per entry of x.
Row row_times(const Field& field, std::span<const elem_t> x, const Matrix& m);

class Subspace {
 public:
  static Subspace from_generators(const Field& field, std::size_t n, const Matrix& generators);
  static Subspace zero(const Field& field, std::size_t n);
  static Subspace full(const Field& field, std::size_t n);
  /// Accepts `basis` only if it is already a canonical RREF basis with
  /// independent rows; throws InvalidArgument otherwise.
  static Subspace from_rref(const Field& field, std::size_t n, Matrix basis);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return n_ - basis_.size(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Solves v = sum coeffs_i basis_i; false when v lies outside.
  bool coordinates(std::span<const elem_t> v, Row& coeffs) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  /// Lexicographic on (ambient_dim, basis); meaningful within one field.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Subspace(Field field, std::size_t n, Matrix basis, std::vector<std::size_t> pivots)
      : field_(std::move(field)), n_(n), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Field field_;
  std::size_t n_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

bool contains(const Subspace& s, std::span<const elem_t> v);
Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);

/// Rows spanning the annihilator {f : f . v = 0 for all v in s}.
Matrix annihilator(const Subspace& s);

/// Image of s under the linear map F^{dim of rows} -> F^n given by `map_rows`
/// (row i is the image of the i-th unit vector).
Subspace map_subspace(const Subspace& s, const Matrix& map_rows, std::size_t n);

/// Projection V -> V/V0 identified with F^t through the non-pivot columns of
/// V0's RREF, in increasing order.
class LinearQuotient {
 public:
  /// Throws InvalidArgument when kernel is the whole ambient space.
  explicit LinearQuotient(Subspace kernel);

  const Subspace& kernel() const { return kernel_; }
  std::size_t ambient_dim() const { return kernel_.ambient_dim(); }
  std::size_t quotient_dim() const { return coords_.size(); }
  /// Ambient columns that carry the quotient coordinates.
  const std::vector<std::size_t>& coordinate_columns() const { return coords_; }
  /// t x n matrix; project(v) = coordinate_map * v.
  const Matrix& coordinate_map() const { return map_; }

  Row project(std::span<const elem_t> v) const;
  /// Full preimage of a subspace of F^t.
  Subspace lift(const Subspace& s) const;

 private:
  Subspace kernel_;
  std::vector<std::size_t> coords_;
  Matrix map_;
};

LinearQuotient quotient(const Subspace& kernel);
inline Row project(const LinearQuotient& q, std::span<const elem_t> v) { return q.project(v); }
inline Subspace lift(const LinearQuotient& q, const Subspace& s) { return q.lift(s); }

/// All q^dim vectors of s, ordered by coefficient tuple (first basis row's
/// coefficient most significant). Throws BoundExceeded above limits.
std::vector<Row> enumerate_vectors(const Subspace& s, const Limits& limits = {});

/// Calls f on every vector of s in the same order as enumerate_vectors,
/// without materializing the list.
void for_each_vector(const Subspace& s, const std::function<void(const Row&)>& f, const Limits& limits = {});

}  // namespace subcover

template <>
struct std::hash<subcover::Subspace> {
  std::size_t operator()(const subcover::Subspace& s) const noexcept;
};
