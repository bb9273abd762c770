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

// Exact arithmetic in GF(p^m).
//
// A field is built over the lexicographically smallest monic irreducible
// modulus of degree m (coefficient tuples compared constant term first), so
// every process constructs bit-identical fields. Elements are handled as their
// canonical integer encoding enc(a) = sum coeffs[i] * p^i, which is a
// bijection onto [0, q). Multiplication runs through exp/log tables over a
// primitive element found at construction.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "subcover/limits.hpp"

namespace subcover {

/// Canonical integer encoding of a field element.
using elem_t = std::uint32_t;

/// Thrown when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an instance exceeds the configured desk-scale bounds.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

bool is_prime(std::uint64_t n);

namespace detail {
struct FieldData;
}

class FieldElem;

/// Immutable descriptor of GF(p^m). Cheap to copy; copies share tables.
class Field {
 public:
  /// Builds (or fetches from the process-wide cache) GF(p^m).
  /// Throws InvalidArgument for non-prime p or m < 1, BoundExceeded when
  /// p^m is above limits.max_q_pow.
  static Field make(std::uint32_t p, std::uint32_t m, const Limits& limits = {});

  std::uint32_t p() const;
  std::uint32_t m() const;
  std::uint32_t q() const;
  /// Monic modulus, constant term first, length m + 1.
  const std::vector<std::uint32_t>& modulus() const;
  /// Primitive element used for the exp/log tables.
  elem_t primitive() const;

  bool contains(elem_t a) const { return a < q(); }

  elem_t add(elem_t a, elem_t b) const;
  elem_t sub(elem_t a, elem_t b) const;
  elem_t neg(elem_t a) const;
  elem_t mul(elem_t a, elem_t b) const;
  /// Throws InvalidArgument when a == 0.
  elem_t inv(elem_t a) const;
  /// Throws InvalidArgument when b == 0.
  elem_t div(elem_t a, elem_t b) const;
  elem_t pow(elem_t a, std::uint64_t e) const;
  /// a^(p^i).
  elem_t frobenius(elem_t a, std::uint64_t i) const;

  /// Polynomial coefficients of a (constant first, length m).
  std::vector<std::uint32_t> coeffs(elem_t a) const;
  /// Inverse of coeffs(); throws on wrong length or out-of-range digits.
  elem_t from_coeffs(std::span<const std::uint32_t> c) const;

  FieldElem elem(elem_t a) const;
  FieldElem zero() const;
  FieldElem one() const;

  /// Human-readable polynomial form, e.g. "x^2 + x + 1".
  std::string to_string(elem_t a) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

/// Field element bound to its field. Mixed-field arithmetic throws.
class FieldElem {
 public:
  FieldElem(Field field, elem_t enc);

  const Field& field() const { return field_; }
  elem_t enc() const { return enc_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(enc_); }
  bool is_zero() const { return enc_ == 0; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const { return {field_, field_.neg(enc_)}; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  Field field_;
  elem_t enc_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

FieldElem arith(ArithOp op, const FieldElem& a, const FieldElem& b);
FieldElem frobenius(const FieldElem& a, std::uint64_t i);

/// All q elements in increasing encoding order.
std::vector<FieldElem> enumerate_field(const Field& field);

/// Trial division against every monic polynomial of degree 1..deg/2.
/// Coefficients constant term first; the polynomial must be monic.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

}  // namespace subcover
