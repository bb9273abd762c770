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

#include "subcover/linalg.hpp"

#include <algorithm>
#include <string>

namespace subcover {

namespace {

void check_entries(const Field& field, std::span<const elem_t> v) {
  for (auto a : v) {
    if (!field.contains(a)) throw InvalidArgument("vector entry " + std::to_string(a) + " is not a field element");
  }
}

void check_vector(const Subspace& s, std::span<const elem_t> v) {
  if (v.size() != s.ambient_dim()) {
    throw InvalidArgument("vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                          std::to_string(s.ambient_dim()));
  }
  check_entries(s.field(), v);
}

void check_same_ambient(const Subspace& s, const Subspace& t) {
  if (!(s.field() == t.field()) || s.ambient_dim() != t.ambient_dim()) {
    throw InvalidArgument("subspaces live in different ambient spaces");
  }
}

// row_a -= c * row_b
void axpy(const Field& f, Row& a, const Row& b, elem_t c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (b[j] != 0) a[j] = f.sub(a[j], f.mul(c, b[j]));
  }
}

}  // namespace

RrefResult rref(const Field& field, const Matrix& m) {
  RrefResult out;
  out.rows = m;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  for (const auto& r : m) {
    if (r.size() != cols) throw InvalidArgument("rref: ragged matrix");
    check_entries(field, r);
  }
  auto& a = out.rows;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const elem_t inv = field.inv(a[row][c]);
    for (auto& x : a[row]) x = field.mul(x, inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != row) axpy(field, a[i], a[row], a[i][c]);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  return out;
}

Matrix nullspace(const Field& field, const Matrix& m, std::size_t cols) {
  for (const auto& r : m) {
    if (r.size() != cols) throw InvalidArgument("nullspace: row length mismatch");
  }
  const auto red = rref(field, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  Matrix out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row x(cols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = field.neg(red.rows[i][f]);
    out.push_back(std::move(x));
  }
  return out;
}

Row row_times(const Field& field, std::span<const elem_t> x, const Matrix& m) {
  if (x.size() != m.size()) throw InvalidArgument("row_times: dimension mismatch");
  if (m.empty()) return {};
  Row out(m.front().size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = field.add(out[j], field.mul(x[i], m[i][j]));
  }
  return out;
}

Subspace Subspace::from_generators(const Field& field, std::size_t n, const Matrix& generators) {
  for (const auto& g : generators) {
    if (g.size() != n) {
      throw InvalidArgument("generator of length " + std::to_string(g.size()) + " in ambient dimension " +
                            std::to_string(n));
    }
  }
  auto red = rref(field, generators);
  red.rows.resize(red.rank);
  return Subspace(field, n, std::move(red.rows), std::move(red.pivots));
}

Subspace Subspace::zero(const Field& field, std::size_t n) { return Subspace(field, n, {}, {}); }

Subspace Subspace::full(const Field& field, std::size_t n) {
  Matrix id(n, Row(n, 0));
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) {
    id[i][i] = 1;
    piv[i] = i;
  }
  return Subspace(field, n, std::move(id), std::move(piv));
}

Subspace Subspace::from_rref(const Field& field, std::size_t n, Matrix basis) {
  auto s = from_generators(field, n, basis);
  if (s.basis_ != basis) throw InvalidArgument("basis is not in reduced row-echelon form");
  return s;
}

bool Subspace::coordinates(std::span<const elem_t> v, Row& coeffs) const {
  check_vector(*this, v);
  Row residual(v.begin(), v.end());
  coeffs.assign(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const elem_t c = residual[pivots_[i]];
    coeffs[i] = c;
    axpy(field_, residual, basis_[i], c);
  }
  return std::all_of(residual.begin(), residual.end(), [](elem_t x) { return x == 0; });
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.basis_ == b.basis_;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.basis_ < b.basis_;
}

bool contains(const Subspace& s, std::span<const elem_t> v) {
  Row coeffs;
  return s.coordinates(v, coeffs);
}

Matrix annihilator(const Subspace& s) { return nullspace(s.field(), s.basis(), s.ambient_dim()); }

Subspace intersect(const Subspace& s, const Subspace& t) {
  check_same_ambient(s, t);
  Matrix dual = annihilator(s);
  for (auto& r : annihilator(t)) dual.push_back(std::move(r));
  return Subspace::from_generators(s.field(), s.ambient_dim(), nullspace(s.field(), dual, s.ambient_dim()));
}

Subspace sum(const Subspace& s, const Subspace& t) {
  check_same_ambient(s, t);
  Matrix gens = s.basis();
  gens.insert(gens.end(), t.basis().begin(), t.basis().end());
  return Subspace::from_generators(s.field(), s.ambient_dim(), gens);
}

Subspace map_subspace(const Subspace& s, const Matrix& map_rows, std::size_t n) {
  if (map_rows.size() != s.ambient_dim()) throw InvalidArgument("map_subspace: map has wrong number of rows");
  Matrix gens;
  gens.reserve(s.dim());
  for (const auto& b : s.basis()) gens.push_back(row_times(s.field(), b, map_rows));
  return Subspace::from_generators(s.field(), n, gens);
}

LinearQuotient::LinearQuotient(Subspace kernel) : kernel_(std::move(kernel)) {
  const std::size_t n = kernel_.ambient_dim();
  if (kernel_.dim() == n) throw InvalidArgument("quotient: kernel must be a proper subspace");
  const auto& f = kernel_.field();
  std::vector<bool> is_pivot(n, false);
  for (auto c : kernel_.pivots()) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) coords_.push_back(c);
  }
  // Coordinate j reads the residual of v at column coords_[j] after reducing
  // v against the kernel basis.
  for (auto col : coords_) {
    Row r(n, 0);
    r[col] = 1;
    for (std::size_t i = 0; i < kernel_.dim(); ++i) r[kernel_.pivots()[i]] = f.neg(kernel_.basis()[i][col]);
    map_.push_back(std::move(r));
  }
}

Row LinearQuotient::project(std::span<const elem_t> v) const {
  check_vector(kernel_, v);
  const auto& f = kernel_.field();
  Row out(map_.size(), 0);
  for (std::size_t j = 0; j < map_.size(); ++j) {
    elem_t acc = 0;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0 && map_[j][c] != 0) acc = f.add(acc, f.mul(map_[j][c], v[c]));
    }
    out[j] = acc;
  }
  return out;
}

Subspace LinearQuotient::lift(const Subspace& s) const {
  if (!(s.field() == kernel_.field()) || s.ambient_dim() != coords_.size()) {
    throw InvalidArgument("lift: subspace does not live in the quotient space");
  }
  Matrix gens = kernel_.basis();
  for (const auto& b : s.basis()) {
    Row r(ambient_dim(), 0);
    for (std::size_t j = 0; j < coords_.size(); ++j) r[coords_[j]] = b[j];
    gens.push_back(std::move(r));
  }
  return Subspace::from_generators(kernel_.field(), ambient_dim(), gens);
}

LinearQuotient quotient(const Subspace& kernel) { return LinearQuotient(kernel); }

void for_each_vector(const Subspace& s, const std::function<void(const Row&)>& f, const Limits& limits) {
  const std::uint64_t q = s.field().q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    total *= q;
    if (total > limits.max_q_pow) throw BoundExceeded("enumerate_vectors: q^dim exceeds the configured bound");
  }
  const auto& field = s.field();
  const std::size_t r = s.dim();
  Row coeffs(r, 0);
  Row v(s.ambient_dim(), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (std::size_t i = r; i-- > 0;) {
      coeffs[i] = static_cast<elem_t>(rest % q);
      rest /= q;
    }
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (coeffs[i] == 0) continue;
      const auto& b = s.basis()[i];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (b[j] != 0) v[j] = field.add(v[j], field.mul(coeffs[i], b[j]));
      }
    }
    f(v);
  }
}

std::vector<Row> enumerate_vectors(const Subspace& s, const Limits& limits) {
  std::vector<Row> out;
  for_each_vector(s, [&](const Row& v) { out.push_back(v); }, limits);
  return out;
}

}  // namespace subcover

std::size_t std::hash<subcover::Subspace>::operator()(const subcover::Subspace& s) const noexcept {
  std::size_t h = s.ambient_dim() * 0x9e3779b97f4a7c15ULL;
  for (const auto& r : s.basis()) {
    for (auto x : r) h = (h ^ x) * 0x100000001b3ULL;
    h ^= 0xff;
  }
  return h;
}
