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

#include "subcover/partitions.hpp"

#include <string>
#include <unordered_set>

#include "subcover/extension.hpp"

namespace subcover {

namespace {

std::uint64_t checked_power(std::uint64_t q, std::size_t n, const Limits& limits, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    r *= q;
    if (r > limits.max_q_pow) throw BoundExceeded(std::string(what) + ": q^n exceeds the configured bound");
  }
  return r;
}

Matrix transpose(const Matrix& a, std::size_t cols) {
  Matrix t(cols, Row(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  }
  return t;
}

}  // namespace

std::string_view to_string(PartitionKind kind) { return kind == PartitionKind::kSpread ? "spread" : "mixed"; }

Partition spread_partition(const Field& field, std::size_t n, std::size_t d, const Limits& limits) {
  if (d < 1 || d > n) throw InvalidArgument("spread_partition: need 1 <= d <= n");
  if (n % d != 0) {
    throw InvalidArgument("spread_partition: d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
  }
  const std::uint64_t qn = checked_power(field.q(), n, limits, "spread_partition");
  const std::uint64_t qd = checked_power(field.q(), d, limits, "spread_partition");
  const std::uint64_t target = (qn - 1) / (qd - 1);

  const ExtensionModel model(field, n, limits);
  const Field& k = model.extension();

  // a -> a^(q^d) - a on the basis x^j; the subfield is its kernel.
  const std::uint64_t frob_steps = std::uint64_t{field.m()} * d;
  Matrix images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const elem_t b = model.basis(j);
    images.push_back(model.to_vector(k.sub(k.frobenius(b, frob_steps), b)));
  }
  const Subspace subfield = Subspace::from_generators(field, n, nullspace(field, transpose(images, n), n));
  if (subfield.dim() != d) throw std::logic_error("spread_partition: subfield has unexpected dimension");
  std::vector<elem_t> subfield_basis;
  for (const auto& row : subfield.basis()) subfield_basis.push_back(model.from_vector(row));

  Partition out{field, n, d, PartitionKind::kSpread, true, {}};
  std::unordered_set<Subspace> seen;
  for (elem_t alpha = 1; alpha < k.q() && out.parts.size() < target; ++alpha) {
    Matrix gens;
    gens.reserve(d);
    for (auto s : subfield_basis) gens.push_back(model.to_vector(k.mul(alpha, s)));
    auto part = Subspace::from_generators(field, n, gens);
    if (seen.insert(part).second) out.parts.push_back(std::move(part));
  }
  return out;
}

Partition mixed_partition(const Field& field, std::size_t n, std::size_t d, const Limits& limits) {
  if (d < 1 || 2 * d > n) throw InvalidArgument("mixed_partition: need 1 <= d <= n/2");
  checked_power(field.q(), n, limits, "mixed_partition");
  const std::size_t kdim = n - d;
  const ExtensionModel model(field, kdim, limits);
  const Field& k = model.extension();

  Partition out{field, n, d, PartitionKind::kMixed, 1 < d && 2 * d < n, {}};
  out.parts.reserve(1 + k.q());

  Matrix head;
  for (std::size_t i = 0; i < kdim; ++i) {
    Row e(n, 0);
    e[i] = 1;
    head.push_back(std::move(e));
  }
  out.parts.push_back(Subspace::from_generators(field, n, head));

  for (elem_t a = 0; a < k.q(); ++a) {
    Matrix gens;
    gens.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
      Row g = model.to_vector(k.mul(a, model.basis(j)));
      g.resize(n, 0);
      g[kdim + j] = 1;
      gens.push_back(std::move(g));
    }
    out.parts.push_back(Subspace::from_generators(field, n, gens));
  }
  return out;
}

}  // namespace subcover
