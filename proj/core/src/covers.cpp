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

#include "subcover/covers.hpp"

#include <algorithm>
#include <set>

#include "subcover/partitions.hpp"

namespace subcover {

namespace {

mpz_class mpz_pow(const mpz_class& base, std::size_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Integer polynomial, constant term first.
using IntPoly = std::vector<mpz_class>;

// Divides by (x - 1) via synthetic division; returns false if 1 is not a root.
bool divide_by_x_minus_one(IntPoly& p) {
  if (p.empty()) return false;
  mpz_class at_one = 0;
  for (const auto& c : p) at_one += c;
  if (at_one != 0 || p.size() < 2) return false;
  IntPoly quotient(p.size() - 1);
  mpz_class carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry += p[i];
    quotient[i - 1] = carry;
  }
  p = std::move(quotient);
  return true;
}

mpz_class eval_at_one(const IntPoly& p) {
  mpz_class s = 0;
  for (const auto& c : p) s += c;
  return s;
}

IntPoly x_pow_minus_one(std::size_t n) {
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  return p;
}

}  // namespace

mpz_class SpaceSpec::q() const {
  const auto* f = std::get_if<FiniteField>(&field);
  if (f == nullptr) throw InvalidArgument("space spec: the field is infinite");
  if (!is_prime(f->p) || f->m < 1) throw InvalidArgument("space spec: invalid finite field");
  return mpz_pow(mpz_class(f->p), f->m);
}

std::string CoverCardinality::to_string() const {
  switch (kind) {
    case Kind::kFinite: return count.get_str();
    case Kind::kCountablyInfinite: return "countably-infinite";
    case Kind::kFieldPowerPlusPoint: {
      std::string s = "F^" + std::to_string(k) + " + {inf}";
      if (counted) s += " = " + counted->get_str();
      return s;
    }
  }
  return {};
}

mpz_class finite_cover_number(const mpz_class& q, std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw InvalidArgument("cover number: need 1 <= k < n");
  if (q < 2) throw InvalidArgument("cover number: field order must be at least 2");
  return ceil_div(mpz_pow(q, n) - 1, mpz_pow(q, n - k) - 1);
}

CoverCardinality nu(const SpaceSpec& spec, std::size_t k) {
  if (k < 1) throw InvalidArgument("nu: codimension must be >= 1");
  if (spec.dim && k >= *spec.dim) {
    throw InvalidArgument("nu: codimension " + std::to_string(k) + " must be below the dimension " +
                          std::to_string(*spec.dim));
  }
  CoverCardinality out;
  if (spec.finite_field() && spec.dim) {
    out.kind = CoverCardinality::Kind::kFinite;
    out.count = finite_cover_number(spec.q(), *spec.dim, k);
  } else if (!spec.finite_field() && !spec.dim) {
    out.kind = CoverCardinality::Kind::kCountablyInfinite;
  } else {
    out.kind = CoverCardinality::Kind::kFieldPowerPlusPoint;
    out.k = k;
    if (spec.finite_field()) out.counted = mpz_pow(spec.q(), k) + 1;
  }
  return out;
}

std::uint64_t f1_cover_number(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw InvalidArgument("f1_cover_number: need 0 < k < n");
  const std::uint64_t d = n - k;
  return (n + d - 1) / d;
}

Rational f1_limit_value(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw InvalidArgument("f1_limit_value: need 0 < k < n");
  IntPoly num = x_pow_minus_one(n);
  IntPoly den = x_pow_minus_one(n - k);
  while (eval_at_one(den) == 0) {
    if (!divide_by_x_minus_one(den) || !divide_by_x_minus_one(num)) {
      throw std::logic_error("f1_limit_value: pole at q = 1");
    }
  }
  Rational r(eval_at_one(num), eval_at_one(den));
  r.canonicalize();
  return r;
}

std::string to_string(CoverStep::Kind kind) {
  switch (kind) {
    case CoverStep::Kind::kSpread: return "spread";
    case CoverStep::Kind::kMixed: return "mixed";
    case CoverStep::Kind::kTail: return "tail";
    case CoverStep::Kind::kLift: return "lift";
  }
  return {};
}

std::string CoverPlan::kind() const {
  return !steps.empty() && steps.front().kind == CoverStep::Kind::kSpread ? "spread" : "peeling";
}

mpz_class CoverPlan::count() const {
  mpz_class total = 0;
  for (const auto& s : steps) {
    if (s.kind != CoverStep::Kind::kLift) total += s.parts;
  }
  return total;
}

CoverPlan plan_cover(const mpz_class& q, std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw InvalidArgument("cover: need 1 <= k < n");
  if (q < 2) throw InvalidArgument("cover: field order must be at least 2");
  CoverPlan plan{q, n, k, {}};
  const std::size_t d = n - k;
  if (n % d == 0) {
    plan.steps.push_back({CoverStep::Kind::kSpread, n, d, (mpz_pow(q, n) - 1) / (mpz_pow(q, d) - 1), 0, 0});
    return plan;
  }
  // The ambient dimension stays congruent to n mod d, so it never equals 2d.
  std::size_t dim = n;
  while (dim > 2 * d) {
    plan.steps.push_back({CoverStep::Kind::kMixed, dim, d, mpz_pow(q, dim - d), 0, 0});
    dim -= d;
  }
  const std::size_t r = dim;
  plan.steps.push_back({CoverStep::Kind::kTail, r, r - d, mpz_pow(q, r - d) + 1, 2 * d - r, 2 * (r - d)});
  return plan;
}

Cover cover_finite(const Field& field, std::size_t n, std::size_t k, const Limits& limits) {
  CoverPlan plan = plan_cover(mpz_class(field.q()), n, k);
  if (mpz_pow(mpz_class(field.q()), n) > mpz_class(std::to_string(limits.max_q_pow))) {
    throw BoundExceeded("cover: q^n exceeds the configured bound; only the plan can be computed");
  }
  const std::size_t d = n - k;
  Cover cover{field, n, k, {}, plan};

  // Rows map the current ambient F^dim into F^n.
  Matrix embed(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) embed[i][i] = 1;

  for (const auto& step : plan.steps) {
    switch (step.kind) {
      case CoverStep::Kind::kSpread: {
        auto spread = spread_partition(field, n, d, limits);
        cover.subspaces = std::move(spread.parts);
        break;
      }
      case CoverStep::Kind::kMixed: {
        const auto mixed = mixed_partition(field, step.ambient_dim, d, limits);
        for (std::size_t i = 1; i < mixed.parts.size(); ++i) {
          cover.subspaces.push_back(map_subspace(mixed.parts[i], embed, n));
        }
        // Continue inside the distinguished part, spanned by the first dim - d coordinates.
        embed.resize(step.ambient_dim - d);
        break;
      }
      case CoverStep::Kind::kTail: {
        const std::size_t r = step.ambient_dim;
        Matrix kernel_gens;
        for (std::size_t i = r - step.kernel_dim; i < r; ++i) {
          Row e(r, 0);
          e[i] = 1;
          kernel_gens.push_back(std::move(e));
        }
        const LinearQuotient quot(Subspace::from_generators(field, r, kernel_gens));
        const auto spread = spread_partition(field, step.quotient_dim, step.d, limits);
        for (const auto& part : spread.parts) cover.subspaces.push_back(map_subspace(quot.lift(part), embed, n));
        break;
      }
      case CoverStep::Kind::kLift: break;
    }
  }
  return cover;
}

Cover lift_cover(const LinearQuotient& quotient, const Cover& cover) {
  if (!(cover.field == quotient.kernel().field()) || cover.n != quotient.quotient_dim()) {
    throw InvalidArgument("lift_cover: cover does not live in the quotient space");
  }
  Cover out{cover.field, quotient.ambient_dim(), cover.k, {}, cover.provenance};
  out.subspaces.reserve(cover.subspaces.size());
  for (const auto& s : cover.subspaces) out.subspaces.push_back(quotient.lift(s));
  out.provenance.steps.push_back(
      {CoverStep::Kind::kLift, quotient.ambient_dim(), cover.n - cover.k + quotient.kernel().dim(),
       mpz_class(cover.subspaces.size()), quotient.kernel().dim(), quotient.quotient_dim()});
  return out;
}

namespace detail {

void check_designated(std::size_t dim, std::span<const std::size_t> designated) {
  if (designated.empty()) throw InvalidArgument("projective assignment: no designated coordinates");
  std::set<std::size_t> seen;
  for (auto c : designated) {
    if (c >= dim) throw InvalidArgument("projective assignment: designated coordinate out of range");
    if (!seen.insert(c).second) throw InvalidArgument("projective assignment: repeated designated coordinate");
  }
}

}  // namespace detail

std::uint64_t countable_cover_index(const FiniteSupportVector& v) {
  for (const auto& [idx, c] : v) {
    if (c == 0) throw InvalidArgument("finite-support vector stores a zero coefficient at index " + std::to_string(idx));
  }
  return v.empty() ? 0 : v.rbegin()->first + 1;
}

bool in_filtration_span(const FiniteSupportVector& v, std::uint64_t n) {
  return std::all_of(v.begin(), v.end(), [&](const auto& e) { return e.second == 0 || e.first < n; });
}

}  // namespace subcover
