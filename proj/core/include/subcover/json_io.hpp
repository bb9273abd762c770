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

// JSON documents for fields, subspaces, covers, partitions and reports.
//
//   field      {"p": 2, "m": 2, "modulus": [1, 1, 1]}
//   subspace   {"field": field, "n": 4, "basis": [[1, 0, 0, 1], ...]}
//   ambient    {"field": field, "n": 4}
//   cover      {"ambient", "codim", "count", "subspaces", "provenance": {"kind", "steps"}}
//   partition  {"kind", "ambient", "d", "strict_interior", "parts"}
//   report     {"ok", "uncovered", "double_covered", "malformed", "checked"}
//
// Field elements are written as their canonical integer encodings. Exact
// integers that do not fit in 64 bits are written as decimal strings, and
// rationals always as "numerator/denominator" strings.

#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "subcover/covers.hpp"
#include "subcover/gf.hpp"
#include "subcover/linalg.hpp"
#include "subcover/oracle.hpp"
#include "subcover/partitions.hpp"

namespace subcover {

using Json = nlohmann::ordered_json;

/// Raised for documents that do not describe a valid object.
class MalformedDocument : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

std::string format_rational(const Rational& r);
/// Accepts "a/b" or "a"; throws MalformedDocument on bad syntax or b = 0.
Rational parse_rational(const std::string& s);

Json big_to_json(const mpz_class& v);
mpz_class big_from_json(const Json& j);

Json to_json(const Field& field);
Field field_from_json(const Json& j, const Limits& limits = {});

Json to_json(const Subspace& s);
/// Rejects bases that are not already in canonical RREF.
Subspace subspace_from_json(const Json& j, const Limits& limits = {});

Json to_json(const CoverPlan& plan);
CoverPlan plan_from_json(const Json& j, const mpz_class& q, std::size_t n, std::size_t k);

Json to_json(const Cover& cover);
Cover cover_from_json(const Json& j, const Limits& limits = {});

Json to_json(const Partition& partition);
Partition partition_from_json(const Json& j, const Limits& limits = {});

Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

Json to_json(const CoverCardinality& c);
CoverCardinality cardinality_from_json(const Json& j);

Json to_json(const ProjectiveIndex<Rational>& x);
ProjectiveIndex<Rational> projective_index_from_json(const Json& j);
Json to_json(const ProjectiveAssignment<Rational>& a);

}  // namespace subcover
