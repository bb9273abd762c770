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

#include <cstddef>
#include <vector>

#include "subcover/gf.hpp"
#include "subcover/linalg.hpp"

namespace subcover {

/// F_q-linear identification of F_q^n with the field K = GF(q^n).
///
/// F_q embeds into K through the smallest root of its modulus, and K gets the
/// F_q-basis 1, x, ..., x^{n-1} where x is K's own generator. Coordinates are
/// recovered through a full lookup table, so |K| must be within the limits.
class ExtensionModel {
 public:
  ExtensionModel(const Field& base, std::size_t n, const Limits& limits = {});

  const Field& base() const { return base_; }
  const Field& extension() const { return ext_; }
  std::size_t degree() const { return n_; }

  /// Image of a base-field element inside K.
  elem_t embed(elem_t c) const { return embed_[c]; }
  /// The i-th basis element x^i of K over F_q.
  elem_t basis(std::size_t i) const { return basis_[i]; }

  elem_t from_vector(std::span<const elem_t> coords) const;
  Row to_vector(elem_t a) const;

 private:
  Field base_;
  Field ext_;
  std::size_t n_;
  std::vector<elem_t> embed_;
  std::vector<elem_t> basis_;
  std::vector<std::uint32_t> index_of_;  // K element -> packed coordinate index
};

}  // namespace subcover
