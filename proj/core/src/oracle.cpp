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

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace subcover {

namespace {

std::uint64_t bounded_power(std::uint64_t q, std::size_t n, const Limits& limits, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    r *= q;
    if (r > limits.max_q_pow) throw BoundExceeded(std::string(what) + ": q^n exceeds the configured bound");
  }
  return r;
}

void next_combination_or_end(std::vector<std::size_t>& c, std::size_t n, bool& done) {
  const std::size_t d = c.size();
  std::size_t i = d;
  while (i-- > 0) {
    if (c[i] < n - d + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
      return;
    }
  }
  done = true;
}

}  // namespace

mpz_class gaussian_binomial(std::size_t n, std::size_t d, const mpz_class& q) {
  if (d > n) throw InvalidArgument("gaussian_binomial: need d <= n");
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::size_t i = 0; i < d; ++i) {
    mpz_class a;
    mpz_class b;
    mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), n - i);
    mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), d - i);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, std::size_t d, const Limits& limits) {
  if (d > n) throw InvalidArgument("enumerate_subspaces: need d <= n");
  const mpz_class count = gaussian_binomial(n, d, field.q());
  if (count > mpz_class(static_cast<unsigned long>(limits.max_subspaces))) {
    throw BoundExceeded("enumerate_subspaces: " + count.get_str() + " subspaces exceed the search bound");
  }
  std::vector<Subspace> out;
  out.reserve(count.get_ui());
  if (d == 0) {
    out.push_back(Subspace::zero(field, n));
    return out;
  }
  const std::uint32_t q = field.q();
  std::vector<std::size_t> piv(d);
  for (std::size_t i = 0; i < d; ++i) piv[i] = i;
  bool done = false;
  while (!done) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t c = piv[i] + 1; c < n; ++c) {
        if (!is_pivot[c]) free_slots.emplace_back(i, c);
      }
    }
    std::uint64_t fillings = 1;
    for (std::size_t s = 0; s < free_slots.size(); ++s) fillings *= q;
    for (std::uint64_t t = 0; t < fillings; ++t) {
      Matrix m(d, Row(n, 0));
      for (std::size_t i = 0; i < d; ++i) m[i][piv[i]] = 1;
      std::uint64_t rest = t;
      for (std::size_t s = free_slots.size(); s-- > 0;) {
        m[free_slots[s].first][free_slots[s].second] = static_cast<elem_t>(rest % q);
        rest /= q;
      }
      out.push_back(Subspace::from_rref(field, n, std::move(m)));
    }
    next_combination_or_end(piv, n, done);
  }
  return out;
}

std::uint64_t pack_vector(std::span<const elem_t> v, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (auto x : v) idx = idx * q + x;
  return idx;
}

Row unpack_vector(std::uint64_t index, std::uint32_t q, std::size_t n) {
  Row v(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<elem_t>(index % q);
    index /= q;
  }
  return v;
}

ProjectivePointSet enumerate_points(const Field& field, std::size_t n, const Limits& limits) {
  const std::uint32_t q = field.q();
  bounded_power(q, n, limits, "enumerate_points");
  ProjectivePointSet out{field, n, {}};
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t rest_len = n - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rest_len; ++i) total *= q;
    for (std::uint64_t t = 0; t < total; ++t) {
      Row v(n, 0);
      v[lead] = 1;
      const Row tail = unpack_vector(t, q, rest_len);
      std::copy(tail.begin(), tail.end(), v.begin() + static_cast<std::ptrdiff_t>(lead + 1));
      out.points.push_back(std::move(v));
    }
  }
  return out;
}

namespace {

void check_structure(const Cover& cover, VerificationReport& report) {
  for (std::size_t i = 0; i < cover.subspaces.size(); ++i) {
    const auto& s = cover.subspaces[i];
    if (!(s.field() == cover.field) || s.ambient_dim() != cover.n) {
      report.malformed.push_back("subspace " + std::to_string(i) + " lives in a different ambient space");
    } else if (s.dim() + cover.k != cover.n) {
      report.malformed.push_back("subspace " + std::to_string(i) + " has dimension " + std::to_string(s.dim()) +
                                 ", expected " + std::to_string(cover.n - cover.k));
    }
  }
}

// Number of parts through every vector, indexed by pack_vector.
std::vector<std::uint32_t> coverage(const Field& field, std::size_t n, const std::vector<Subspace>& parts,
                                    const Limits& limits) {
  const std::uint64_t total = bounded_power(field.q(), n, limits, "verify");
  std::vector<std::uint32_t> hits(total, 0);
  for (const auto& s : parts) {
    if (!(s.field() == field) || s.ambient_dim() != n) continue;
    for_each_vector(s, [&](const Row& v) { ++hits[pack_vector(v, field.q())]; }, limits);
  }
  return hits;
}

}  // namespace

VerificationReport verify_cover(const Cover& cover, const Limits& limits) {
  VerificationReport report;
  check_structure(cover, report);
  const auto hits = coverage(cover.field, cover.n, cover.subspaces, limits);
  for (std::uint64_t idx = 1; idx < hits.size(); ++idx) {
    ++report.checked;
    if (hits[idx] == 0) report.uncovered.push_back(unpack_vector(idx, cover.field.q(), cover.n));
  }
  report.ok = report.uncovered.empty() && report.malformed.empty();
  return report;
}

VerificationReport verify_cover_by_points(const Cover& cover, const Limits& limits) {
  VerificationReport report;
  check_structure(cover, report);
  const auto points = enumerate_points(cover.field, cover.n, limits);
  for (const auto& p : points.points) {
    ++report.checked;
    const bool hit = std::any_of(cover.subspaces.begin(), cover.subspaces.end(), [&](const Subspace& s) {
      return s.field() == cover.field && s.ambient_dim() == cover.n && contains(s, p);
    });
    if (!hit) report.uncovered.push_back(p);
  }
  report.ok = report.uncovered.empty() && report.malformed.empty();
  return report;
}

VerificationReport verify_partition(const Partition& partition, const Limits& limits) {
  VerificationReport report;
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    const auto& s = partition.parts[i];
    if (!(s.field() == partition.field) || s.ambient_dim() != partition.n) {
      report.malformed.push_back("part " + std::to_string(i) + " lives in a different ambient space");
    } else if (s.dim() == 0) {
      report.malformed.push_back("part " + std::to_string(i) + " is the zero subspace");
    }
  }
  const auto hits = coverage(partition.field, partition.n, partition.parts, limits);
  for (std::uint64_t idx = 1; idx < hits.size(); ++idx) {
    ++report.checked;
    if (hits[idx] == 0) report.uncovered.push_back(unpack_vector(idx, partition.field.q(), partition.n));
    if (hits[idx] > 1) report.double_covered.push_back(unpack_vector(idx, partition.field.q(), partition.n));
  }
  report.ok = report.uncovered.empty() && report.double_covered.empty() && report.malformed.empty();
  return report;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct SearchSpace {
  std::size_t num_points = 0;
  std::size_t words = 0;
  std::size_t per_subspace = 0;
  std::vector<Bits> subspace_bits;
  std::vector<std::vector<std::size_t>> through_point;  // subspaces containing each point
};

std::size_t popcount_and_not(const Bits& a, const Bits& covered) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += static_cast<std::size_t>(std::popcount(a[w] & ~covered[w]));
  return c;
}

class BranchAndBound {
 public:
  BranchAndBound(const SearchSpace& space, std::uint64_t bound) : space_(space), best_(bound) {}

  // Explores the subtree below `covered` after choosing `chosen`.
  void search(Bits& covered, std::size_t uncovered, std::vector<std::size_t>& chosen) {
    nodes_.fetch_add(1, std::memory_order_relaxed);
    if (uncovered == 0) {
      record(chosen);
      return;
    }
    const std::uint64_t lb = (uncovered + space_.per_subspace - 1) / space_.per_subspace;
    if (chosen.size() + lb >= best_.load(std::memory_order_relaxed)) return;

    const std::size_t point = first_uncovered(covered);
    for (auto [gain, s] : ranked_candidates(point, covered)) {
      if (chosen.size() + 1 + (uncovered - gain + space_.per_subspace - 1) / space_.per_subspace >=
          best_.load(std::memory_order_relaxed)) {
        continue;
      }
      Bits saved = covered;
      for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= space_.subspace_bits[s][w];
      chosen.push_back(s);
      search(covered, uncovered - gain, chosen);
      chosen.pop_back();
      covered = std::move(saved);
    }
  }

  std::size_t first_uncovered(const Bits& covered) const {
    for (std::size_t w = 0; w < covered.size(); ++w) {
      const std::uint64_t free = ~covered[w];
      if (free != 0) {
        const std::size_t idx = w * 64 + static_cast<std::size_t>(std::countr_zero(free));
        if (idx < space_.num_points) return idx;
      }
    }
    return space_.num_points;
  }

  std::vector<std::pair<std::size_t, std::size_t>> ranked_candidates(std::size_t point, const Bits& covered) const {
    std::vector<std::pair<std::size_t, std::size_t>> cand;
    for (auto s : space_.through_point[point]) cand.emplace_back(popcount_and_not(space_.subspace_bits[s], covered), s);
    std::stable_sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return cand;
  }

  std::uint64_t best() const { return best_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }
  std::vector<std::size_t> witness() const {
    std::lock_guard lock(mu_);
    return witness_;
  }
  bool found() const {
    std::lock_guard lock(mu_);
    return found_;
  }

 private:
  void record(const std::vector<std::size_t>& chosen) {
    std::lock_guard lock(mu_);
    if (!found_ || chosen.size() < witness_.size() ||
        (chosen.size() == witness_.size() && chosen < witness_)) {
      witness_ = chosen;
      found_ = true;
    }
    std::uint64_t cur = best_.load();
    while (chosen.size() < cur && !best_.compare_exchange_weak(cur, chosen.size())) {
    }
  }

  const SearchSpace& space_;
  std::atomic<std::uint64_t> best_;
  std::atomic<std::uint64_t> nodes_{0};
  mutable std::mutex mu_;
  std::vector<std::size_t> witness_;
  bool found_ = false;
};

void run_search(BranchAndBound& bnb, const SearchSpace& space, unsigned threads) {
  Bits covered(space.words, 0);
  // Pad bits past the last point so they never count as uncovered.
  for (std::size_t i = space.num_points; i < space.words * 64; ++i) covered[i / 64] |= std::uint64_t{1} << (i % 64);
  if (threads <= 1) {
    std::vector<std::size_t> chosen;
    bnb.search(covered, space.num_points, chosen);
    return;
  }
  // Root split: the first point must be covered by one of the subspaces through it.
  const auto roots = bnb.ranked_candidates(0, covered);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next.fetch_add(1); r < roots.size(); r = next.fetch_add(1)) {
      Bits local = covered;
      const auto [gain, s] = roots[r];
      for (std::size_t w = 0; w < local.size(); ++w) local[w] |= space.subspace_bits[s][w];
      std::vector<std::size_t> chosen{s};
      bnb.search(local, space.num_points - gain, chosen);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

MinCoverResult min_cover_size(const Field& field, std::size_t n, std::size_t k, std::optional<std::uint64_t> upper_hint,
                              unsigned threads, const Limits& limits) {
  if (k < 1 || k >= n) throw InvalidArgument("min_cover_size: need 1 <= k < n");
  const std::size_t d = n - k;
  const std::uint32_t q = field.q();
  bounded_power(q, n, limits, "min_cover_size");
  const auto subspaces = enumerate_subspaces(field, n, d, limits);
  const auto points = enumerate_points(field, n, limits);

  SearchSpace space;
  space.num_points = points.points.size();
  space.words = (space.num_points + 63) / 64;
  std::vector<std::int64_t> point_id(bounded_power(q, n, limits, "min_cover_size"), -1);
  for (std::size_t i = 0; i < points.points.size(); ++i) point_id[pack_vector(points.points[i], q)] = static_cast<std::int64_t>(i);
  space.through_point.resize(space.num_points);
  for (std::size_t s = 0; s < subspaces.size(); ++s) {
    Bits bits(space.words, 0);
    std::size_t count = 0;
    for_each_vector(subspaces[s], [&](const Row& v) {
      const auto id = point_id[pack_vector(v, q)];
      if (id >= 0) {
        bits[static_cast<std::size_t>(id) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(id) % 64);
        space.through_point[static_cast<std::size_t>(id)].push_back(s);
        ++count;
      }
    }, limits);
    space.per_subspace = count;
    space.subspace_bits.push_back(std::move(bits));
  }

  MinCoverResult result;
  result.counting_bound = (space.num_points + space.per_subspace - 1) / space.per_subspace;
  const std::uint64_t hint = upper_hint ? *upper_hint : finite_cover_number(mpz_class(q), n, k).get_ui();

  BranchAndBound first(space, hint + 1);
  run_search(first, space, threads);
  result.nodes = first.nodes();
  if (first.found()) {
    result.size = first.best();
    for (auto s : first.witness()) result.witness.push_back(subspaces[s]);
    return result;
  }
  // No cover within the hint: one subspace per point always suffices.
  BranchAndBound second(space, space.num_points + 1);
  run_search(second, space, threads);
  result.nodes += second.nodes();
  result.size = second.best();
  for (auto s : second.witness()) result.witness.push_back(subspaces[s]);
  return result;
}

}  // namespace subcover
