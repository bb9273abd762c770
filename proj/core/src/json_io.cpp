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

#include "subcover/json_io.hpp"

#include <limits>

namespace subcover {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedDocument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

bool is_nonneg_integer(const Json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t get_uint(const Json& j, const char* key) {
  const auto& v = member(j, key);
  if (!is_nonneg_integer(v)) throw MalformedDocument(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

Json row_to_json(const Row& r) { return Json(r); }

Row row_from_json(const Json& j, const Field& field, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw MalformedDocument("vector must be an array of length " + std::to_string(n));
  Row r;
  r.reserve(n);
  for (const auto& e : j) {
    if (!is_nonneg_integer(e) || e.get<std::uint64_t>() >= field.q()) {
      throw MalformedDocument("vector entry is not a field element encoding");
    }
    r.push_back(static_cast<elem_t>(e.get<std::uint64_t>()));
  }
  return r;
}

Json ambient_to_json(const Field& field, std::size_t n) { return Json{{"field", to_json(field)}, {"n", n}}; }

std::pair<Field, std::size_t> ambient_from_json(const Json& j, const Limits& limits) {
  return {field_from_json(member(j, "field"), limits), get_uint(j, "n")};
}

CoverStep::Kind step_kind_from_string(const std::string& s) {
  if (s == "spread") return CoverStep::Kind::kSpread;
  if (s == "mixed") return CoverStep::Kind::kMixed;
  if (s == "tail") return CoverStep::Kind::kTail;
  if (s == "lift") return CoverStep::Kind::kLift;
  throw MalformedDocument("unknown provenance step \"" + s + "\"");
}

}  // namespace

std::string format_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  auto parse_int = [&](const std::string& part, mpz_class& out) {
    if (part.empty() || out.set_str(part, 10) != 0) throw MalformedDocument("not a rational number: \"" + s + "\"");
  };
  parse_int(s.substr(0, slash), num);
  if (slash != std::string::npos) parse_int(s.substr(slash + 1), den);
  if (den == 0) throw MalformedDocument("zero denominator in \"" + s + "\"");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Json big_to_json(const mpz_class& v) {
  if (v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64) {
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
  }
  return v.get_str();
}

mpz_class big_from_json(const Json& j) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw MalformedDocument("not an integer: " + j.dump());
    return v;
  }
  throw MalformedDocument("expected an integer, got " + j.dump());
}

Json to_json(const Field& field) {
  return Json{{"p", field.p()}, {"m", field.m()}, {"modulus", field.modulus()}};
}

Field field_from_json(const Json& j, const Limits& limits) {
  const auto p = get_uint(j, "p");
  const auto m = get_uint(j, "m");
  if (p > std::numeric_limits<std::uint32_t>::max() || m > 64) throw MalformedDocument("field parameters out of range");
  Field f = Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), limits);
  if (j.contains("modulus") && j.at("modulus") != Json(f.modulus())) {
    throw MalformedDocument("field modulus differs from the canonical modulus " + Json(f.modulus()).dump());
  }
  return f;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& r : s.basis()) basis.push_back(row_to_json(r));
  return Json{{"field", to_json(s.field())}, {"n", s.ambient_dim()}, {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const Json& j, const Limits& limits) {
  const Field field = field_from_json(member(j, "field"), limits);
  const std::size_t n = get_uint(j, "n");
  const auto& b = member(j, "basis");
  if (!b.is_array()) throw MalformedDocument("basis must be an array");
  Matrix rows;
  for (const auto& r : b) rows.push_back(row_from_json(r, field, n));
  try {
    return Subspace::from_rref(field, n, std::move(rows));
  } catch (const InvalidArgument& e) {
    throw MalformedDocument(e.what());
  }
}

Json to_json(const CoverPlan& plan) {
  Json steps = Json::array();
  for (const auto& s : plan.steps) {
    Json step{{"type", to_string(s.kind)}, {"ambient_dim", s.ambient_dim}, {"d", s.d}, {"parts", big_to_json(s.parts)}};
    if (s.kind == CoverStep::Kind::kTail || s.kind == CoverStep::Kind::kLift) {
      step["kernel_dim"] = s.kernel_dim;
      step["quotient_dim"] = s.quotient_dim;
    }
    steps.push_back(std::move(step));
  }
  return Json{{"kind", plan.kind()}, {"count", big_to_json(plan.count())}, {"steps", std::move(steps)}};
}

CoverPlan plan_from_json(const Json& j, const mpz_class& q, std::size_t n, std::size_t k) {
  CoverPlan plan{q, n, k, {}};
  const auto& steps = member(j, "steps");
  if (!steps.is_array()) throw MalformedDocument("provenance steps must be an array");
  for (const auto& s : steps) {
    CoverStep step;
    const auto& type = member(s, "type");
    if (!type.is_string()) throw MalformedDocument("step type must be a string");
    step.kind = step_kind_from_string(type.get<std::string>());
    step.ambient_dim = get_uint(s, "ambient_dim");
    step.d = get_uint(s, "d");
    step.parts = big_from_json(member(s, "parts"));
    if (s.contains("kernel_dim")) step.kernel_dim = get_uint(s, "kernel_dim");
    if (s.contains("quotient_dim")) step.quotient_dim = get_uint(s, "quotient_dim");
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

Json to_json(const Cover& cover) {
  Json subspaces = Json::array();
  for (const auto& s : cover.subspaces) subspaces.push_back(to_json(s));
  return Json{{"ambient", ambient_to_json(cover.field, cover.n)},
              {"codim", cover.k},
              {"count", cover.subspaces.size()},
              {"subspaces", std::move(subspaces)},
              {"provenance", to_json(cover.provenance)}};
}

Cover cover_from_json(const Json& j, const Limits& limits) {
  auto [field, n] = ambient_from_json(member(j, "ambient"), limits);
  const std::size_t k = get_uint(j, "codim");
  Cover cover{field, n, k, {}, CoverPlan{mpz_class(field.q()), n, k, {}}};
  const auto& subs = member(j, "subspaces");
  if (!subs.is_array()) throw MalformedDocument("subspaces must be an array");
  for (const auto& s : subs) {
    auto sub = subspace_from_json(s, limits);
    if (!(sub.field() == field) || sub.ambient_dim() != n) {
      throw MalformedDocument("subspace does not live in the cover's ambient space");
    }
    cover.subspaces.push_back(std::move(sub));
  }
  if (j.contains("count") && get_uint(j, "count") != cover.subspaces.size()) {
    throw MalformedDocument("count does not match the number of subspaces");
  }
  if (j.contains("provenance")) cover.provenance = plan_from_json(j.at("provenance"), field.q(), n, k);
  return cover;
}

Json to_json(const Partition& partition) {
  Json parts = Json::array();
  for (const auto& s : partition.parts) parts.push_back(to_json(s));
  return Json{{"kind", std::string(to_string(partition.kind))},
              {"ambient", ambient_to_json(partition.field, partition.n)},
              {"d", partition.d},
              {"strict_interior", partition.strict_interior},
              {"parts", std::move(parts)}};
}

Partition partition_from_json(const Json& j, const Limits& limits) {
  auto [field, n] = ambient_from_json(member(j, "ambient"), limits);
  Partition p{field, n, 0, PartitionKind::kSpread, true, {}};
  const auto& kind = member(j, "kind");
  if (kind == "spread") {
    p.kind = PartitionKind::kSpread;
  } else if (kind == "mixed") {
    p.kind = PartitionKind::kMixed;
  } else {
    throw MalformedDocument("unknown partition kind " + kind.dump());
  }
  if (j.contains("d")) p.d = get_uint(j, "d");
  if (j.contains("strict_interior")) p.strict_interior = j.at("strict_interior").get<bool>();
  const auto& parts = member(j, "parts");
  if (!parts.is_array()) throw MalformedDocument("parts must be an array");
  for (const auto& s : parts) {
    auto sub = subspace_from_json(s, limits);
    if (!(sub.field() == field) || sub.ambient_dim() != n) {
      throw MalformedDocument("part does not live in the partition's ambient space");
    }
    p.parts.push_back(std::move(sub));
  }
  return p;
}

Json to_json(const VerificationReport& report) {
  Json unc = Json::array();
  for (const auto& r : report.uncovered) unc.push_back(row_to_json(r));
  Json dbl = Json::array();
  for (const auto& r : report.double_covered) dbl.push_back(row_to_json(r));
  return Json{{"ok", report.ok},
              {"uncovered", std::move(unc)},
              {"double_covered", std::move(dbl)},
              {"malformed", report.malformed},
              {"checked", report.checked}};
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.ok = member(j, "ok").get<bool>();
  for (const auto& v : member(j, "uncovered")) r.uncovered.push_back(v.get<Row>());
  if (j.contains("double_covered")) {
    for (const auto& v : j.at("double_covered")) r.double_covered.push_back(v.get<Row>());
  }
  if (j.contains("malformed")) r.malformed = j.at("malformed").get<std::vector<std::string>>();
  r.checked = get_uint(j, "checked");
  return r;
}

Json to_json(const CoverCardinality& c) {
  switch (c.kind) {
    case CoverCardinality::Kind::kFinite: return Json{{"kind", "finite"}, {"count", big_to_json(c.count)}};
    case CoverCardinality::Kind::kCountablyInfinite: return Json{{"kind", "countably-infinite"}};
    case CoverCardinality::Kind::kFieldPowerPlusPoint: {
      Json j{{"kind", "field-power-plus-point"}, {"k", c.k}};
      if (c.counted) j["count"] = big_to_json(*c.counted);
      return j;
    }
  }
  return {};
}

CoverCardinality cardinality_from_json(const Json& j) {
  CoverCardinality c;
  const auto kind = member(j, "kind").get<std::string>();
  if (kind == "finite") {
    c.kind = CoverCardinality::Kind::kFinite;
    c.count = big_from_json(member(j, "count"));
  } else if (kind == "countably-infinite") {
    c.kind = CoverCardinality::Kind::kCountablyInfinite;
  } else if (kind == "field-power-plus-point") {
    c.kind = CoverCardinality::Kind::kFieldPowerPlusPoint;
    c.k = get_uint(j, "k");
    if (j.contains("count")) c.counted = big_from_json(j.at("count"));
  } else {
    throw MalformedDocument("unknown cardinality kind \"" + kind + "\"");
  }
  return c;
}

Json to_json(const ProjectiveIndex<Rational>& x) {
  Json tail = Json::array();
  for (const auto& a : x.tail) tail.push_back(format_rational(a));
  return Json{{"i", x.i}, {"k", x.k}, {"tail", std::move(tail)}};
}

ProjectiveIndex<Rational> projective_index_from_json(const Json& j) {
  ProjectiveIndex<Rational> x;
  x.i = get_uint(j, "i");
  const auto& tail = member(j, "tail");
  if (!tail.is_array()) throw MalformedDocument("tail must be an array");
  for (const auto& a : tail) {
    if (!a.is_string()) throw MalformedDocument("tail entries must be rational strings");
    x.tail.push_back(parse_rational(a.get<std::string>()));
  }
  x.k = j.contains("k") ? get_uint(j, "k") : x.i + x.tail.size();
  if (x.k != x.i + x.tail.size()) throw MalformedDocument("tail length does not match k - i");
  return x;
}

Json to_json(const ProjectiveAssignment<Rational>& a) {
  auto vec = [](const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
  };
  return Json{{"index", to_json(a.index)},
              {"witness",
               {{"scale", format_rational(a.witness.scale)},
                {"generator", vec(a.witness.generator)},
                {"residual", vec(a.witness.residual)}}}};
}

}  // namespace subcover
