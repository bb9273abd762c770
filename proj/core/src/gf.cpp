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

#include "subcover/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace subcover {

namespace {

// Hard ceiling on table size regardless of the configured limits.
constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 24;

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b, coefficients mod p.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t sub = (lead * b[i]) % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  if (monic.empty() || monic.back() != 1) {
    throw InvalidArgument("is_irreducible: polynomial must be monic");
  }
  const std::size_t deg = monic.size() - 1;
  if (deg == 0) return false;
  const Poly f(monic.begin(), monic.end());
  for (std::size_t j = 1; j <= deg / 2; ++j) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(j));
    Poly g(j + 1, 0);
    g[j] = 1;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < j; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<std::uint32_t> pow_p;  // p^i for i < m
  elem_t primitive = 1;
  std::vector<elem_t> exp;  // length 2(q-1)
  std::vector<std::uint32_t> log;

  elem_t add(elem_t a, elem_t b) const {
    if (p == 2) return a ^ b;
    if (m == 1) return (a + b) % p;
    elem_t r = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      const std::uint32_t da = (a / pow_p[i]) % p;
      const std::uint32_t db = (b / pow_p[i]) % p;
      r += ((da + db) % p) * pow_p[i];
    }
    return r;
  }

  elem_t neg(elem_t a) const {
    if (p == 2) return a;
    if (m == 1) return (p - a) % p;
    elem_t r = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      const std::uint32_t da = (a / pow_p[i]) % p;
      r += ((p - da) % p) * pow_p[i];
    }
    return r;
  }

  Poly digits(elem_t a) const {
    Poly c(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  }

  elem_t undigits(const Poly& c) const {
    elem_t r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * p + c[i];
    return r;
  }

  // Schoolbook product modulo the modulus; used only while building tables.
  elem_t slow_mul(elem_t a, elem_t b) const {
    if (m == 1) return static_cast<elem_t>((std::uint64_t{a} * b) % p);
    const Poly x = digits(a);
    const Poly y = digits(b);
    Poly prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      for (std::uint32_t j = 0; j < m; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
      }
    }
    Poly r = poly_rem(std::move(prod), modulus, p);
    r.resize(m, 0);
    return undigits(r);
  }

  elem_t slow_pow(elem_t a, std::uint64_t e) const {
    elem_t result = 1;
    while (e > 0) {
      if (e & 1U) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1U;
    }
    return result;
  }
};

}  // namespace detail

namespace {

Poly smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  // Lexicographic order on (c_0, ..., c_{m-1}): c_0 is the most significant digit.
  const std::uint64_t count = ipow(p, m);
  Poly f(m + 1, 0);
  f[m] = 1;
  for (std::uint64_t t = 0; t < count; ++t) {
    std::uint64_t rest = t;
    for (std::size_t i = m; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(p, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::shared_ptr<const detail::FieldData> build_field(std::uint32_t p, std::uint32_t m) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->m = m;
  d->q = static_cast<std::uint32_t>(ipow(p, m));
  d->modulus = smallest_irreducible(p, m);
  d->pow_p.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) d->pow_p[i] = static_cast<std::uint32_t>(ipow(p, i));

  const std::uint32_t order = d->q - 1;
  const auto factors = prime_factors(order);
  elem_t g = 1;
  for (elem_t cand = 1; cand < d->q; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (d->slow_pow(cand, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  d->primitive = g;
  d->exp.resize(2 * std::size_t{order});
  d->log.assign(d->q, 0);
  elem_t cur = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    d->exp[i] = cur;
    d->exp[i + order] = cur;
    d->log[cur] = i;
    cur = d->slow_mul(cur, g);
  }
  return d;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t m, const Limits& limits) {
  if (!is_prime(p)) throw InvalidArgument("field: p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidArgument("field: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > limits.max_q_pow || q > kMaxFieldOrder) {
      throw BoundExceeded("field: order " + std::to_string(p) + "^" + std::to_string(m) +
                          " exceeds the configured bound");
    }
  }

  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldData>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, m}];
  if (!slot) slot = build_field(p, m);
  return Field(slot);
}

std::uint32_t Field::p() const { return data_->p; }
std::uint32_t Field::m() const { return data_->m; }
std::uint32_t Field::q() const { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }
elem_t Field::primitive() const { return data_->primitive; }

elem_t Field::add(elem_t a, elem_t b) const { return data_->add(a, b); }
elem_t Field::neg(elem_t a) const { return data_->neg(a); }
elem_t Field::sub(elem_t a, elem_t b) const { return data_->add(a, data_->neg(b)); }

elem_t Field::mul(elem_t a, elem_t b) const {
  if (a == 0 || b == 0) return 0;
  return data_->exp[data_->log[a] + data_->log[b]];
}

elem_t Field::inv(elem_t a) const {
  if (a == 0) throw InvalidArgument("division by zero");
  const std::uint32_t order = data_->q - 1;
  return data_->exp[(order - data_->log[a]) % order];
}

elem_t Field::div(elem_t a, elem_t b) const { return mul(a, inv(b)); }

elem_t Field::pow(elem_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = data_->q - 1;
  const std::uint64_t l = (std::uint64_t{data_->log[a]} * (e % order)) % order;
  return data_->exp[l];
}

elem_t Field::frobenius(elem_t a, std::uint64_t i) const {
  // a^(p^i) = a^(p^(i mod m)) since a^(p^m) = a.
  const std::uint64_t steps = i % data_->m;
  return pow(a, ipow(data_->p, static_cast<std::uint32_t>(steps)));
}

std::vector<std::uint32_t> Field::coeffs(elem_t a) const { return data_->digits(a); }

elem_t Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != data_->m) throw InvalidArgument("from_coeffs: expected " + std::to_string(data_->m) + " coefficients");
  for (auto v : c) {
    if (v >= data_->p) throw InvalidArgument("from_coeffs: coefficient out of range");
  }
  return data_->undigits(Poly(c.begin(), c.end()));
}

FieldElem Field::elem(elem_t a) const { return FieldElem(*this, a); }
FieldElem Field::zero() const { return FieldElem(*this, 0); }
FieldElem Field::one() const { return FieldElem(*this, 1); }

std::string Field::to_string(elem_t a) const {
  if (a == 0) return "0";
  const auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  return a.data_ == b.data_ || (a.p() == b.p() && a.m() == b.m());
}

FieldElem::FieldElem(Field field, elem_t enc) : field_(std::move(field)), enc_(enc) {
  if (!field_.contains(enc_)) throw InvalidArgument("field element encoding out of range");
}

namespace {
const Field& common_field(const FieldElem& a, const FieldElem& b) {
  if (!(a.field() == b.field())) throw InvalidArgument("field mismatch");
  return a.field();
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  const auto& f = common_field(a, b);
  return {f, f.add(a.enc_, b.enc_)};
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  const auto& f = common_field(a, b);
  return {f, f.sub(a.enc_, b.enc_)};
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  const auto& f = common_field(a, b);
  return {f, f.mul(a.enc_, b.enc_)};
}
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  const auto& f = common_field(a, b);
  return {f, f.div(a.enc_, b.enc_)};
}
bool operator==(const FieldElem& a, const FieldElem& b) { return a.field_ == b.field_ && a.enc_ == b.enc_; }

FieldElem arith(ArithOp op, const FieldElem& a, const FieldElem& b) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw InvalidArgument("unknown arithmetic op");
}

FieldElem frobenius(const FieldElem& a, std::uint64_t i) { return a.field().elem(a.field().frobenius(a.enc(), i)); }

std::vector<FieldElem> enumerate_field(const Field& field) {
  std::vector<FieldElem> out;
  out.reserve(field.q());
  for (elem_t a = 0; a < field.q(); ++a) out.emplace_back(field, a);
  return out;
}

Limits Limits::from_env() {
  Limits limits;
  if (const char* env = std::getenv("SUBCOVER_MAX_Q_POW"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw InvalidArgument(std::string("SUBCOVER_MAX_Q_POW: not a positive integer: ") + env);
    }
    limits.max_q_pow = v;
  }
  return limits;
}

}  // namespace subcover
