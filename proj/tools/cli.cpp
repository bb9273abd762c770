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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "subcover/covers.hpp"
#include "subcover/gf.hpp"
#include "subcover/json_io.hpp"
#include "subcover/oracle.hpp"
#include "subcover/partitions.hpp"

namespace subcover::cli {
namespace {

struct FieldOpts {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
};

void add_field_opts(CLI::App* app, FieldOpts& f) {
  app->add_option("--p", f.p, "field characteristic (prime)")->required();
  app->add_option("--m", f.m, "extension degree")->capture_default_str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::size_t parse_index(const std::string& s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidArgument(std::string(what) + ": not a non-negative integer: \"" + s + "\"");
  }
  return std::stoull(s);
}

std::vector<Rational> parse_vector(const std::string& s) {
  std::vector<Rational> v;
  for (const auto& item : split(s, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw InvalidArgument("--vector is empty");
  return v;
}

FiniteSupportVector parse_support(const std::string& s) {
  FiniteSupportVector v;
  for (const auto& item : split(s, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidArgument("support entry needs index:value, got \"" + item + "\"");
    const auto idx = parse_index(item.substr(0, colon), "support index");
    if (!v.emplace(idx, parse_rational(item.substr(colon + 1))).second) {
      throw InvalidArgument("support index " + std::to_string(idx) + " given twice");
    }
  }
  return v;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedDocument(path + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(output);
  if (!f) throw InvalidArgument("cannot write " + output);
  f << j.dump(2) << '\n';
}

bool report_problems(const VerificationReport& r, std::ostream& err) {
  if (r.ok) return false;
  err << "verification failed: " << r.uncovered.size() << " uncovered, " << r.double_covered.size()
      << " double-covered, " << r.malformed.size() << " malformed\n";
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covers of finite-dimensional vector spaces by subspaces"};
  app.name("subcover");
  app.require_subcommand(1);

  int status = kExitOk;
  std::function<void()> action;

  // nu
  FieldOpts nu_field;
  std::string nu_n;
  std::size_t nu_k = 0;
  std::string nu_infinite;
  bool nu_json = false;
  auto* nu_cmd = app.add_subcommand("nu", "minimal cover cardinality");
  nu_cmd->add_option("--p", nu_field.p, "field characteristic (prime)");
  nu_cmd->add_option("--m", nu_field.m, "extension degree");
  nu_cmd->add_option("--n", nu_n, "dimension, or \"inf\"")->required();
  nu_cmd->add_option("--k", nu_k, "codimension")->required();
  auto* inf_opt = nu_cmd->add_option("--infinite-field", nu_infinite, "label of an infinite field, e.g. Q");
  nu_cmd->add_flag("--json", nu_json, "print a JSON document");
  nu_cmd->callback([&] {
    action = [&] {
      SpaceSpec spec{SpaceSpec::InfiniteField{}, std::nullopt};
      if (inf_opt->count() > 0) {
        if (nu_cmd->count("--p") > 0) throw InvalidArgument("--p and --infinite-field are exclusive");
        spec.field = SpaceSpec::InfiniteField{nu_infinite};
      } else {
        if (nu_cmd->count("--p") == 0) throw InvalidArgument("nu needs --p or --infinite-field");
        spec.field = SpaceSpec::FiniteField{nu_field.p, nu_field.m};
      }
      if (nu_n != "inf") spec.dim = parse_index(nu_n, "--n");
      const auto c = nu(spec, nu_k);
      if (nu_json) {
        out << to_json(c).dump(2) << '\n';
      } else {
        out << c.to_string() << '\n';
      }
    };
  });

  // cover
  FieldOpts cov_field;
  std::size_t cov_n = 0;
  std::size_t cov_k = 0;
  bool cov_verify = false;
  bool cov_plan = false;
  std::string cov_output;
  auto* cover_cmd = app.add_subcommand("cover", "construct a minimal cover");
  add_field_opts(cover_cmd, cov_field);
  cover_cmd->add_option("--n", cov_n, "dimension")->required();
  cover_cmd->add_option("--k", cov_k, "codimension")->required();
  cover_cmd->add_flag("--verify", cov_verify, "check the cover exhaustively");
  cover_cmd->add_flag("--plan-only", cov_plan, "print the construction plan without building subspaces");
  cover_cmd->add_option("--output", cov_output, "write JSON here instead of stdout");
  cover_cmd->callback([&] {
    action = [&] {
      const auto limits = Limits::from_env();
      const auto field = Field::make(cov_field.p, cov_field.m, limits);
      if (cov_plan) {
        const auto plan = plan_cover(field.q(), cov_n, cov_k);
        emit(Json{{"ambient", {{"field", to_json(field)}, {"n", cov_n}}},
                  {"codim", cov_k},
                  {"count", big_to_json(plan.count())},
                  {"provenance", to_json(plan)}},
             cov_output, out);
        return;
      }
      const auto cover = cover_finite(field, cov_n, cov_k, limits);
      auto j = to_json(cover);
      if (cov_verify) {
        const auto report = verify_cover(cover, limits);
        j["verification"] = to_json(report);
        if (report_problems(report, err)) status = kExitVerifyFailed;
      }
      emit(j, cov_output, out);
    };
  });

  // partition
  FieldOpts part_field;
  std::size_t part_n = 0;
  std::size_t part_d = 0;
  bool part_verify = false;
  std::string part_output;
  auto* part_cmd = app.add_subcommand("partition", "construct a spread or mixed partition");
  part_cmd->require_subcommand(1);
  for (const char* kind : {"spread", "mixed"}) {
    auto* sub = part_cmd->add_subcommand(kind, std::string(kind) + " partition");
    add_field_opts(sub, part_field);
    sub->add_option("--n", part_n, "dimension")->required();
    sub->add_option("--d", part_d, "part dimension")->required();
    sub->add_flag("--verify", part_verify, "check the partition exhaustively");
    sub->add_option("--output", part_output, "write JSON here instead of stdout");
    const bool spread = std::string(kind) == "spread";
    sub->callback([&, spread] {
      action = [&, spread] {
        const auto limits = Limits::from_env();
        const auto field = Field::make(part_field.p, part_field.m, limits);
        const auto p = spread ? spread_partition(field, part_n, part_d, limits)
                              : mixed_partition(field, part_n, part_d, limits);
        auto j = to_json(p);
        if (part_verify) {
          const auto report = verify_partition(p, limits);
          j["verification"] = to_json(report);
          if (report_problems(report, err)) status = kExitVerifyFailed;
        }
        emit(j, part_output, out);
      };
    });
  }

  // verify
  std::string ver_cover;
  std::string ver_partition;
  bool ver_points = false;
  auto* verify_cmd = app.add_subcommand("verify", "check a cover or partition document");
  auto* ver_cover_opt = verify_cmd->add_option("--cover", ver_cover, "cover JSON file");
  auto* ver_part_opt = verify_cmd->add_option("--partition", ver_partition, "partition JSON file");
  ver_cover_opt->excludes(ver_part_opt);
  verify_cmd->add_flag("--points", ver_points, "check covers through projective points");
  verify_cmd->callback([&] {
    action = [&] {
      const auto limits = Limits::from_env();
      VerificationReport report;
      if (ver_cover_opt->count() > 0) {
        const auto cover = cover_from_json(read_json(ver_cover), limits);
        report = ver_points ? verify_cover_by_points(cover, limits) : verify_cover(cover, limits);
      } else if (ver_part_opt->count() > 0) {
        report = verify_partition(partition_from_json(read_json(ver_partition), limits), limits);
      } else {
        throw InvalidArgument("verify needs --cover or --partition");
      }
      out << to_json(report).dump(2) << '\n';
      if (report_problems(report, err)) status = kExitVerifyFailed;
    };
  });

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference computations");
  oracle_cmd->require_subcommand(1);
  FieldOpts or_field;
  std::size_t or_n = 0;
  std::size_t or_k = 0;
  std::size_t or_d = 0;
  std::optional<std::uint64_t> or_hint;
  unsigned or_threads = 1;
  bool or_witness = false;
  std::string or_q;

  auto* min_cmd = oracle_cmd->add_subcommand("min", "exact minimum cover size");
  add_field_opts(min_cmd, or_field);
  min_cmd->add_option("--n", or_n, "dimension")->required();
  min_cmd->add_option("--k", or_k, "codimension")->required();
  min_cmd->add_option("--hint", or_hint, "initial upper bound");
  min_cmd->add_option("--threads", or_threads, "worker threads")->check(CLI::PositiveNumber);
  min_cmd->add_flag("--witness", or_witness, "print an optimal cover as JSON");
  min_cmd->callback([&] {
    action = [&] {
      const auto limits = Limits::from_env();
      const auto field = Field::make(or_field.p, or_field.m, limits);
      const auto r = min_cover_size(field, or_n, or_k, or_hint, or_threads, limits);
      if (!or_witness) {
        out << r.size << '\n';
        return;
      }
      Json subs = Json::array();
      for (const auto& s : r.witness) subs.push_back(to_json(s));
      out << Json{{"minimum", r.size}, {"counting_bound", r.counting_bound}, {"subspaces", std::move(subs)}}.dump(2)
          << '\n';
    };
  });

  auto* gauss_cmd = oracle_cmd->add_subcommand("gaussian", "number of d-dimensional subspaces of F_q^n");
  gauss_cmd->add_option("--q", or_q, "field size")->required();
  gauss_cmd->add_option("--n", or_n, "dimension")->required();
  gauss_cmd->add_option("--d", or_d, "subspace dimension")->required();
  gauss_cmd->callback([&] {
    action = [&] {
      mpz_class q;
      if (q.set_str(or_q, 10) != 0 || q < 2) throw InvalidArgument("--q must be an integer >= 2");
      out << gaussian_binomial(or_n, or_d, q).get_str() << '\n';
    };
  });

  auto* subs_cmd = oracle_cmd->add_subcommand("subspaces", "list every d-dimensional subspace");
  add_field_opts(subs_cmd, or_field);
  subs_cmd->add_option("--n", or_n, "dimension")->required();
  subs_cmd->add_option("--d", or_d, "subspace dimension")->required();
  subs_cmd->callback([&] {
    action = [&] {
      const auto limits = Limits::from_env();
      const auto field = Field::make(or_field.p, or_field.m, limits);
      Json subs = Json::array();
      for (const auto& s : enumerate_subspaces(field, or_n, or_d, limits)) subs.push_back(to_json(s));
      out << subs.dump(2) << '\n';
    };
  });

  // assign
  std::size_t as_k = 0;
  std::string as_vector;
  std::string as_positions;
  auto* assign_cmd = app.add_subcommand("assign", "projective index of a rational vector");
  assign_cmd->add_option("--k", as_k, "projective dimension")->required();
  assign_cmd->add_option("--vector", as_vector, "comma-separated rationals, e.g. 2,3/2,0")->required();
  assign_cmd->add_option("--positions", as_positions, "designated coordinates (default 0..k)");
  assign_cmd->callback([&] {
    action = [&] {
      const auto v = parse_vector(as_vector);
      std::vector<std::size_t> pos;
      if (as_positions.empty()) {
        for (std::size_t i = 0; i <= as_k; ++i) pos.push_back(i);
      } else {
        for (const auto& s : split(as_positions, ',')) pos.push_back(parse_index(s, "--positions"));
        if (pos.size() != as_k + 1) throw InvalidArgument("--positions must list k + 1 coordinates");
      }
      const auto a = projective_assign<Rational>(v, pos);
      if (!validate_assignment<Rational>(v, pos, a, Rational(0), Rational(1))) {
        err << "membership witness failed to validate\n";
        status = kExitVerifyFailed;
      }
      out << to_json(a).dump(2) << '\n';
    };
  });

  // countable
  std::string ct_support;
  auto* countable_cmd = app.add_subcommand("countable", "filtration index of a finite-support vector");
  countable_cmd->add_option("--support", ct_support, "index:value pairs, e.g. 1:3,7:1/2 (empty for zero)")
      ->required();
  countable_cmd->callback([&] {
    action = [&] { out << countable_cover_index(parse_support(ct_support)) << '\n'; };
  });

  // limit
  std::size_t lim_n = 0;
  std::size_t lim_k = 0;
  auto* limit_cmd = app.add_subcommand("limit", "cover number of an n-element set and the q = 1 value");
  limit_cmd->add_option("--n", lim_n, "dimension")->required();
  limit_cmd->add_option("--k", lim_k, "codimension")->required();
  limit_cmd->callback([&] {
    action = [&] {
      out << Json{{"cover_number", f1_cover_number(lim_n, lim_k)},
                  {"limit", format_rational(f1_limit_value(lim_n, lim_k))}}
                 .dump(2)
          << '\n';
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (action) action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return status;
}

}  // namespace subcover::cli
