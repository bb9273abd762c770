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

#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"

namespace subcover {
namespace {

mpz_class zpow(long b, std::size_t e) {
  mpz_class r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// Independent ceiling of (q^n - 1)/(q^d - 1) using truncating division.
mpz_class ceil_ratio(long q, std::size_t n, std::size_t d) {
  const mpz_class num = zpow(q, n) - 1;
  const mpz_class den = zpow(q, d) - 1;
  return (num + den - 1) / den;
}

// Number of nonzero vectors of F^n left uncovered, by direct enumeration.
std::size_t uncovered_count(const Cover& c) {
  std::set<Row> covered;
  for (const auto& s : c.subspaces) {
    for (const auto& v : enumerate_vectors(s)) covered.insert(v);
  }
  return testing::all_vectors(c.field, c.n).size() - covered.size();
}

SpaceSpec finite_space(std::uint32_t p, std::uint32_t m, std::size_t n) {
  return SpaceSpec{SpaceSpec::FiniteField{p, m}, n};
}

TEST(Nu, LinesOfThePlane) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto c = nu(finite_space(p, 1, 2), 1);
    EXPECT_EQ(c.kind, CoverCardinality::Kind::kFinite);
    EXPECT_EQ(c.count, p + 1);
  }
  EXPECT_EQ(nu(finite_space(2, 1, 2), 1).to_string(), "3");
  EXPECT_EQ(nu(finite_space(2, 2, 2), 1).count, 5);
}

TEST(Nu, FortyOneTwentyNine) {
  for (long q : {2L, 3L, 5L, 7L}) {
    const auto c = nu(finite_space(static_cast<std::uint32_t>(q), 1, 41), 29);
    EXPECT_EQ(c.count, zpow(q, 29) + zpow(q, 17) + zpow(q, 5) + 1) << q;
  }
  EXPECT_EQ(nu(finite_space(2, 1, 41), 29).count, 537002017);
}

TEST(Nu, InfiniteCases) {
  const SpaceSpec qinf{SpaceSpec::InfiniteField{"Q"}, std::nullopt};
  EXPECT_EQ(nu(qinf, 3).kind, CoverCardinality::Kind::kCountablyInfinite);
  EXPECT_EQ(nu(qinf, 1).to_string(), "countably-infinite");

  const SpaceSpec f3inf{SpaceSpec::FiniteField{3, 1}, std::nullopt};
  const auto c = nu(f3inf, 2);
  EXPECT_EQ(c.kind, CoverCardinality::Kind::kFieldPowerPlusPoint);
  EXPECT_EQ(c.k, 2u);
  ASSERT_TRUE(c.counted.has_value());
  EXPECT_EQ(*c.counted, 10);

  const SpaceSpec q5{SpaceSpec::InfiniteField{"Q"}, 5};
  const auto d = nu(q5, 4);
  EXPECT_EQ(d.kind, CoverCardinality::Kind::kFieldPowerPlusPoint);
  EXPECT_EQ(d.k, 4u);
  EXPECT_FALSE(d.counted.has_value());
  EXPECT_EQ(d.to_string(), "F^4 + {inf}");
}

TEST(Nu, Errors) {
  EXPECT_THROW(nu(finite_space(2, 1, 3), 0), InvalidArgument);
  EXPECT_THROW(nu(finite_space(2, 1, 3), 3), InvalidArgument);
  EXPECT_THROW(nu(SpaceSpec{SpaceSpec::InfiniteField{}, 2}, 2), InvalidArgument);
  EXPECT_THROW(nu(SpaceSpec{SpaceSpec::InfiniteField{}, std::nullopt}, 0), InvalidArgument);
  EXPECT_THROW(nu(finite_space(4, 1, 3), 1), InvalidArgument);
}

TEST(Nu, MonotoneInCodimension) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::size_t n = 2; n <= 12; ++n) {
      mpz_class prev = 0;
      for (std::size_t k = 1; k < n; ++k) {
        const auto c = nu(finite_space(p, 1, n), k).count;
        EXPECT_GE(c, prev);
        EXPECT_EQ(c, ceil_ratio(p, n, n - k));
        prev = c;
      }
    }
  }
}

TEST(F1, CoverNumberExamples) {
  EXPECT_EQ(f1_cover_number(2, 1), 2u);
  EXPECT_EQ(f1_cover_number(41, 29), 4u);
  EXPECT_EQ(f1_cover_number(4, 2), 2u);
  EXPECT_THROW(f1_cover_number(3, 3), InvalidArgument);
  EXPECT_THROW(f1_cover_number(3, 0), InvalidArgument);
}

TEST(F1, LimitValueIsNOverNMinusK) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      Rational expected(static_cast<long>(n), static_cast<long>(n - k));
      expected.canonicalize();
      const auto v = f1_limit_value(n, k);
      EXPECT_EQ(v, expected);
      mpz_class ceil;
      mpz_cdiv_q(ceil.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
      EXPECT_EQ(ceil, f1_cover_number(n, k));
    }
  }
  // The 41/29 count has exactly four summands.
  EXPECT_EQ(f1_cover_number(41, 29), plan_cover(2, 41, 29).steps.size() + 1);
}

TEST(PlanCover, SevenFive) {
  const auto plan = plan_cover(2, 7, 5);
  EXPECT_EQ(plan.kind(), "peeling");
  ASSERT_EQ(plan.steps.size(), 3u);
  EXPECT_EQ(plan.steps[0], (CoverStep{CoverStep::Kind::kMixed, 7, 2, 32, 0, 0}));
  EXPECT_EQ(plan.steps[1], (CoverStep{CoverStep::Kind::kMixed, 5, 2, 8, 0, 0}));
  EXPECT_EQ(plan.steps[2], (CoverStep{CoverStep::Kind::kTail, 3, 1, 3, 1, 2}));
  EXPECT_EQ(plan.count(), 43);
}

TEST(PlanCover, FortyOneTwentyNine) {
  for (long q : {2L, 3L, 5L}) {
    const auto plan = plan_cover(q, 41, 29);
    ASSERT_EQ(plan.steps.size(), 3u);
    EXPECT_EQ(plan.steps[0].parts, zpow(q, 29));
    EXPECT_EQ(plan.steps[1].parts, zpow(q, 17));
    EXPECT_EQ(plan.steps[2].ambient_dim, 17u);
    EXPECT_EQ(plan.steps[2].kernel_dim, 7u);
    EXPECT_EQ(plan.steps[2].quotient_dim, 10u);
    EXPECT_EQ(plan.steps[2].parts, zpow(q, 5) + 1);
    EXPECT_EQ(plan.count(), ceil_ratio(q, 41, 12));
  }
}

TEST(PlanCover, TelescopingIdentity) {
  for (long q : {2L, 3L, 4L, 5L}) {
    for (std::size_t n = 2; n <= 12; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        const auto plan = plan_cover(q, n, k);
        EXPECT_EQ(plan.count(), ceil_ratio(q, n, n - k)) << q << " " << n << " " << k;
        EXPECT_EQ(plan.kind(), n % (n - k) == 0 ? "spread" : "peeling");
      }
    }
  }
}

TEST(CoverFinite, LinesOfF2Squared) {
  const auto c = cover_finite(Field::make(2, 1), 2, 1);
  ASSERT_EQ(c.subspaces.size(), 3u);
  EXPECT_EQ(uncovered_count(c), 0u);
}

TEST(CoverFinite, SevenFiveHasFortyThreePlanes) {
  const auto c = cover_finite(Field::make(2, 1), 7, 5);
  ASSERT_EQ(c.subspaces.size(), 43u);
  for (const auto& s : c.subspaces) EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(uncovered_count(c), 0u);
  EXPECT_EQ(std::set<Subspace>(c.subspaces.begin(), c.subspaces.end()).size(), 43u);
}

TEST(CoverFinite, SpreadWhenDivisible) {
  const auto c = cover_finite(Field::make(2, 1), 4, 2);
  EXPECT_EQ(c.provenance.kind(), "spread");
  ASSERT_EQ(c.subspaces.size(), 5u);
  EXPECT_EQ(uncovered_count(c), 0u);
}

TEST(CoverFinite, SmallGridCoversEverything) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const auto f = Field::make(p, m);
    for (std::size_t n = 2; zpow(f.q(), n) <= 4096; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        const auto c = cover_finite(f, n, k);
        SCOPED_TRACE(std::to_string(f.q()) + " " + std::to_string(n) + " " + std::to_string(k));
        EXPECT_EQ(c.subspaces.size(), ceil_ratio(f.q(), n, n - k));
        for (const auto& s : c.subspaces) EXPECT_EQ(s.dim(), n - k);
        EXPECT_EQ(uncovered_count(c), 0u);
      }
    }
  }
}

TEST(CoverFinite, Errors) {
  const auto f = Field::make(2, 1);
  EXPECT_THROW(cover_finite(f, 3, 0), InvalidArgument);
  EXPECT_THROW(cover_finite(f, 3, 3), InvalidArgument);
  EXPECT_THROW(cover_finite(f, 41, 29), BoundExceeded);
  EXPECT_NO_THROW(plan_cover(2, 41, 29));
}

TEST(LiftCover, LinesLiftedToHyperplanes) {
  const auto f = Field::make(2, 1);
  const auto lines = cover_finite(f, 2, 1);
  const auto q = quotient(Subspace::from_generators(f, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  const auto lifted = lift_cover(q, lines);
  ASSERT_EQ(lifted.subspaces.size(), 3u);
  EXPECT_EQ(lifted.n, 4u);
  EXPECT_EQ(lifted.k, 1u);
  for (const auto& s : lifted.subspaces) EXPECT_EQ(s.dim(), 3u);
  EXPECT_EQ(uncovered_count(lifted), 0u);
  EXPECT_EQ(lifted.provenance.steps.back().kind, CoverStep::Kind::kLift);
}

TEST(LiftCover, ZeroKernelIsIdentity) {
  const auto f = Field::make(3, 1);
  const auto c = cover_finite(f, 3, 1);
  const auto lifted = lift_cover(quotient(Subspace::zero(f, 3)), c);
  EXPECT_EQ(lifted.subspaces, c.subspaces);
}

TEST(LiftCover, Errors) {
  const auto f = Field::make(2, 1);
  const auto c = cover_finite(f, 3, 1);
  EXPECT_THROW(lift_cover(quotient(Subspace::zero(f, 2)), c), InvalidArgument);
}

// --- Projective assignment ---------------------------------------------------

std::vector<Rational> rationals(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

TEST(ProjectiveAssign, AlreadyNormal) {
  const auto v = rationals({1, 0, 0, 4, 5});
  const std::vector<std::size_t> pos{0, 1, 2};
  const auto a = projective_assign<Rational>(v, pos);
  EXPECT_EQ(a.index.i, 0u);
  EXPECT_EQ(a.index.tail, rationals({0, 0}));
  EXPECT_TRUE(validate_assignment<Rational>(v, pos, a, 0, 1));
}

TEST(ProjectiveAssign, RationalTail) {
  const auto v = rationals({2, 3, 7});
  const std::vector<std::size_t> pos{0, 1};
  const auto a = projective_assign<Rational>(v, pos);
  EXPECT_EQ(a.index.i, 0u);
  ASSERT_EQ(a.index.tail.size(), 1u);
  EXPECT_EQ(a.index.tail[0], Rational(3, 2));
  EXPECT_EQ(a.witness.scale, 2);
  EXPECT_EQ(a.witness.residual, rationals({0, 0, 7}));
  EXPECT_TRUE(validate_assignment<Rational>(v, pos, a, 0, 1));
}

TEST(ProjectiveAssign, LeadingZero) {
  const auto v = rationals({0, 5, 7, -1});
  const std::vector<std::size_t> pos{0, 1, 2};
  const auto a = projective_assign<Rational>(v, pos);
  EXPECT_EQ(a.index.i, 1u);
  ASSERT_EQ(a.index.tail.size(), 1u);
  EXPECT_EQ(a.index.tail[0], Rational(7, 5));
  EXPECT_TRUE(validate_assignment<Rational>(v, pos, a, 0, 1));
}

TEST(ProjectiveAssign, AllDesignatedZero) {
  const auto v = rationals({0, 3, 0, 0});
  const std::vector<std::size_t> pos{0, 2, 3};
  const auto a = projective_assign<Rational>(v, pos);
  EXPECT_EQ(a.index.i, 2u);
  EXPECT_TRUE(a.index.tail.empty());
  EXPECT_TRUE(validate_assignment<Rational>(v, pos, a, 0, 1));
}

TEST(ProjectiveAssign, TamperedWitnessFails) {
  const auto v = rationals({2, 3, 7});
  const std::vector<std::size_t> pos{0, 1};
  auto a = projective_assign<Rational>(v, pos);
  a.index.tail[0] = Rational(1, 2);
  EXPECT_FALSE(validate_assignment<Rational>(v, pos, a, 0, 1));
}

TEST(ProjectiveAssign, MalformedPositions) {
  const auto v = rationals({1, 2, 3});
  EXPECT_THROW(projective_assign<Rational>(v, std::vector<std::size_t>{}), InvalidArgument);
  EXPECT_THROW(projective_assign<Rational>(v, std::vector<std::size_t>{0, 0}), InvalidArgument);
  EXPECT_THROW(projective_assign<Rational>(v, std::vector<std::size_t>{0, 3}), InvalidArgument);
}

// Over F_q the same assignment indexes a cover of F_q^dim by the subspaces
// V_x, x in projective k-space; check it exhaustively.
TEST(ProjectiveAssign, FiniteFieldModelIsACover) {
  for (auto [p, k, dim] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{
           {2, 1, 3}, {2, 2, 4}, {3, 1, 3}, {3, 2, 4}, {5, 1, 2}}) {
    const auto f = Field::make(p, 1);
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i <= k; ++i) pos.push_back(dim - 1 - i);  // designated in reverse order
    std::set<std::size_t> designated(pos.begin(), pos.end());

    std::map<std::vector<elem_t>, Subspace> by_index;
    auto subspace_of = [&](const ProjectiveIndex<FieldElem>& x) {
      const auto g = projective_generator(x, pos, dim, f.zero(), f.one());
      Matrix gens{Row{}};
      for (const auto& e : g) gens[0].push_back(e.enc());
      for (std::size_t c = 0; c < dim; ++c) {
        if (designated.count(c) == 0) {
          Row e(dim, 0);
          e[c] = 1;
          gens.push_back(e);
        }
      }
      return Subspace::from_generators(f, dim, gens);
    };

    for (const auto& raw : testing::all_vectors(f, dim)) {
      std::vector<FieldElem> v;
      for (auto e : raw) v.push_back(f.elem(e));
      const auto a = projective_assign<FieldElem>(v, pos);
      ASSERT_TRUE(validate_assignment<FieldElem>(v, pos, a, f.zero(), f.one()));
      const auto s = subspace_of(a.index);
      EXPECT_EQ(s.codim(), k);
      EXPECT_TRUE(contains(s, raw));
      std::vector<elem_t> key{static_cast<elem_t>(a.index.i)};
      for (const auto& t : a.index.tail) key.push_back(t.enc());
      by_index.emplace(key, s);
    }
    // Every normal form gets used, and distinct normal forms give distinct subspaces.
    const std::size_t points = (static_cast<std::size_t>(std::pow(p, k + 1)) - 1) / (p - 1);
    EXPECT_EQ(by_index.size(), points);
    std::set<Subspace> distinct;
    for (const auto& [key, s] : by_index) distinct.insert(s);
    EXPECT_EQ(distinct.size(), points);
  }
}

// --- Countable cover ---------------------------------------------------------

TEST(CountableCover, Examples) {
  EXPECT_EQ(countable_cover_index({}), 0u);
  EXPECT_EQ(countable_cover_index({{4, Rational(3)}}), 5u);
  const FiniteSupportVector v{{1, Rational(1)}, {7, Rational(-2, 3)}, {9, Rational(5)}};
  EXPECT_EQ(countable_cover_index(v), 10u);
  EXPECT_TRUE(in_filtration_span(v, 10));
  EXPECT_FALSE(in_filtration_span(v, 9));
  EXPECT_THROW(countable_cover_index({{2, Rational(0)}}), InvalidArgument);
}

}  // namespace
}  // namespace subcover
