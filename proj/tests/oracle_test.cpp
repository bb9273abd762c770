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

#include "subcover/oracle.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "test_util.hpp"

namespace subcover {
namespace {

// Distinct d-dimensional spans of tuples of vectors, as vector sets.
std::set<std::set<Row>> brute_subspaces(const Field& f, std::size_t n, std::size_t d) {
  const auto all = testing::all_vectors(f, n);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < d; ++i) size *= f.q();
  std::set<std::set<Row>> out;
  std::function<void(std::size_t, Matrix&)> rec = [&](std::size_t from, Matrix& gens) {
    if (gens.size() == d) {
      auto s = testing::brute_span(f, n, gens);
      if (s.size() == size) out.insert(std::move(s));
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      gens.push_back(all[i]);
      rec(i + 1, gens);
      gens.pop_back();
    }
  };
  Matrix gens;
  rec(1, gens);
  return out;
}

// Smallest number of the given vector sets whose union is all of F^n.
std::size_t brute_min_cover(const std::vector<std::set<Row>>& sets, std::size_t total) {
  for (std::size_t size = 1; size <= sets.size(); ++size) {
    std::vector<std::size_t> pick(size);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
      if (depth == size) {
        std::set<Row> u;
        for (auto i : pick) u.insert(sets[i].begin(), sets[i].end());
        return u.size() == total;
      }
      for (std::size_t i = from; i < sets.size(); ++i) {
        pick[depth] = i;
        if (rec(depth + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) return size;
  }
  return 0;
}

TEST(GaussianBinomial, Values) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(2, 1, 3), 4);
  EXPECT_EQ(gaussian_binomial(5, 0, 7), 1);
  EXPECT_EQ(gaussian_binomial(5, 5, 7), 1);
  EXPECT_THROW(gaussian_binomial(3, 4, 2), InvalidArgument);
  for (long q : {2L, 3L, 4L}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (std::size_t d = 1; d < n; ++d) {
        // Symmetry and the q-Pascal rule.
        EXPECT_EQ(gaussian_binomial(n, d, q), gaussian_binomial(n, n - d, q));
        mpz_class qd = 1;
        for (std::size_t i = 0; i < d; ++i) qd *= q;
        EXPECT_EQ(gaussian_binomial(n, d, q), gaussian_binomial(n - 1, d - 1, q) + qd * gaussian_binomial(n - 1, d, q));
      }
    }
  }
}

TEST(EnumerateSubspaces, Counts) {
  EXPECT_EQ(enumerate_subspaces(Field::make(2, 1), 2, 1).size(), 3u);
  EXPECT_EQ(enumerate_subspaces(Field::make(2, 1), 4, 3).size(), 15u);
  EXPECT_EQ(enumerate_subspaces(Field::make(3, 1), 3, 2).size(), 13u);
}

TEST(EnumerateSubspaces, MatchesBruteForce) {
  for (auto [p, m, n, d] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t, std::size_t>>{
           {2, 1, 4, 2}, {2, 1, 3, 1}, {3, 1, 3, 1}, {3, 1, 3, 2}, {2, 2, 2, 1}, {2, 1, 4, 1}}) {
    const auto f = Field::make(p, m);
    const auto subs = enumerate_subspaces(f, n, d);
    std::set<std::set<Row>> got;
    for (const auto& s : subs) {
      EXPECT_EQ(s.dim(), d);
      const auto vs = enumerate_vectors(s);
      got.emplace(vs.begin(), vs.end());
    }
    EXPECT_EQ(got.size(), subs.size());  // no repeats
    EXPECT_EQ(got, brute_subspaces(f, n, d));
    EXPECT_EQ(subs.size(), gaussian_binomial(n, d, f.q()));
  }
}

TEST(EnumerateSubspaces, RespectsLimit) {
  Limits tight;
  tight.max_subspaces = 10;
  EXPECT_THROW(enumerate_subspaces(Field::make(2, 1), 4, 2, tight), BoundExceeded);
}

TEST(Points, RepresentativesAndPacking) {
  const auto f = Field::make(3, 1);
  const auto pts = enumerate_points(f, 3);
  EXPECT_EQ(pts.points.size(), 13u);
  for (const auto& v : pts.points) {
    auto it = std::find_if(v.begin(), v.end(), [](elem_t x) { return x != 0; });
    ASSERT_NE(it, v.end());
    EXPECT_EQ(*it, 1u);
  }
  for (std::uint64_t i = 0; i < 27; ++i) EXPECT_EQ(pack_vector(unpack_vector(i, 3, 3), 3), i);
  EXPECT_EQ(pack_vector(Row{1, 0, 0}, 3), 9u);
}

TEST(VerifyCover, AcceptsConstructionAndCatchesMissingLine) {
  const auto f = Field::make(3, 1);
  auto c = cover_finite(f, 2, 1);
  ASSERT_EQ(c.subspaces.size(), 4u);
  EXPECT_TRUE(verify_cover(c).ok);
  EXPECT_TRUE(verify_cover_by_points(c).ok);

  c.subspaces.pop_back();
  const auto r = verify_cover(c);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.uncovered.size(), 2u);  // the two nonzero points of the dropped line
  EXPECT_FALSE(verify_cover_by_points(c).ok);
}

TEST(VerifyCover, FlagsWrongDimension) {
  const auto f = Field::make(2, 1);
  auto c = cover_finite(f, 3, 1);
  c.subspaces.push_back(Subspace::from_generators(f, 3, {{1, 0, 0}}));
  const auto r = verify_cover(c);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.malformed.empty());
}

TEST(VerifyCover, VectorsAndPointsAgree) {
  std::mt19937_64 rng(11);
  const auto f = Field::make(2, 1);
  const auto planes = enumerate_subspaces(f, 4, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Cover c{f, 4, 2, {}, {}};
    for (const auto& s : planes) {
      if (rng() % 4 == 0) c.subspaces.push_back(s);
    }
    EXPECT_EQ(verify_cover(c).ok, verify_cover_by_points(c).ok);
    EXPECT_EQ(verify_cover(c).uncovered.size(), verify_cover_by_points(c).uncovered.size());
  }
}

TEST(VerifyPartition, SpreadPassesCoverDoesNot) {
  const auto f = Field::make(2, 1);
  EXPECT_TRUE(verify_partition(spread_partition(f, 4, 2)).ok);
  EXPECT_TRUE(verify_partition(mixed_partition(f, 5, 2)).ok);

  auto p = spread_partition(f, 4, 2);
  p.parts.push_back(Subspace::from_generators(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  const auto r = verify_partition(p);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.double_covered.empty());
}

TEST(VerifyCover, RespectsLimit) {
  Limits tight;
  tight.max_q_pow = 4;
  EXPECT_THROW(verify_cover(cover_finite(Field::make(2, 1), 3, 1), tight), BoundExceeded);
}

TEST(MinCover, KnownValues) {
  EXPECT_EQ(min_cover_size(Field::make(2, 1), 2, 1).size, 3u);
  EXPECT_EQ(min_cover_size(Field::make(2, 1), 4, 2).size, 5u);
  EXPECT_EQ(min_cover_size(Field::make(3, 1), 2, 1).size, 4u);
}

TEST(MinCover, MatchesSubsetSearch) {
  for (auto [p, n, k] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{
           {2, 3, 1}, {2, 3, 2}, {2, 4, 1}, {2, 4, 2}, {3, 3, 1}, {2, 4, 3}}) {
    const auto f = Field::make(p, 1);
    const auto subs = brute_subspaces(f, n, n - k);
    const std::vector<std::set<Row>> sets(subs.begin(), subs.end());
    const auto r = min_cover_size(f, n, k);
    EXPECT_EQ(r.size, brute_min_cover(sets, testing::all_vectors(f, n).size())) << p << " " << n << " " << k;
    EXPECT_EQ(r.witness.size(), r.size);
    EXPECT_TRUE(verify_cover(Cover{f, n, k, r.witness, {}}).ok);
    EXPECT_LE(r.counting_bound, r.size);
  }
}

TEST(MinCover, EqualsClosedFormOnSmallGrid) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
    const auto f = Field::make(p, m);
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        if (gaussian_binomial(n, n - k, f.q()) > 2000) continue;
        EXPECT_EQ(min_cover_size(f, n, k).size, finite_cover_number(f.q(), n, k)) << f.q() << " " << n << " " << k;
      }
    }
  }
}

TEST(MinCover, BadHintFallsBack) {
  const auto f = Field::make(2, 1);
  EXPECT_EQ(min_cover_size(f, 3, 1, 1).size, 3u);
  EXPECT_EQ(min_cover_size(f, 3, 1, 50).size, 3u);
}

TEST(MinCover, ThreadCountDoesNotChangeSize) {
  const auto f = Field::make(2, 1);
  const auto one = min_cover_size(f, 4, 2, std::nullopt, 1);
  for (unsigned t : {2u, 4u, 8u}) {
    const auto r = min_cover_size(f, 4, 2, std::nullopt, t);
    EXPECT_EQ(r.size, one.size);
    EXPECT_TRUE(verify_cover(Cover{f, 4, 2, r.witness, {}}).ok);
  }
  const auto again = min_cover_size(f, 4, 2, std::nullopt, 1);
  EXPECT_EQ(again.witness, one.witness);
}

TEST(MinCover, Errors) {
  const auto f = Field::make(2, 1);
  EXPECT_THROW(min_cover_size(f, 3, 0), InvalidArgument);
  EXPECT_THROW(min_cover_size(f, 3, 3), InvalidArgument);
}

}  // namespace
}  // namespace subcover
