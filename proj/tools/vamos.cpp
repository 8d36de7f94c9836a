// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line entry point.  Every run writes a single JSON document (to
// stdout or --json-out) with a "schema" tag, the fully resolved
// configuration, and the result; identical configurations produce
// byte-identical output.
//
// Exit codes: 0 all checks passed, 1 a check failed (a violation appeared
// where none was expected, or an expected violation did not), 2 usage or
// input error (message on stderr).  Commands whose purpose is refutation
// (hpp-falsify, counterex-ranks) exit 0 exactly when the refutation
// materializes; commands with a pass/fail verdict honor
// --expect-violation.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vamos/errors.hpp"
#include "vamos/jordan.hpp"
#include "vamos/json_io.hpp"
#include "vamos/matroid.hpp"
#include "vamos/setfamily.hpp"
#include "vamos/stability.hpp"
#include "vamos/symfun.hpp"
#include "vamos/vamoslab.hpp"

using namespace vamos;

namespace {

struct Opts {
  // Globals, with the documented defaults.
  std::uint64_t seed = 0xC0FFEE;
  int trials = 256;
  int samples = 10000;
  double tol = 1e-9;
  bool expect_violation = false;
  std::string json_out;

  // Command-specific inputs.
  std::string hypergraph, target, poly, points, matroid;
  std::string poly_out;
  std::string sets, set, family = "bases", which = "all";
  std::string ineq = "ingleton";
  std::string direction, point;
  std::string del_list, con_list, z_list;
  int r = -1, n = -1, k = -1, x = -1, y = -1;
  int truncate_level = -1;
  bool search = false, full = false;

  std::string command;
};

// ---------------------------------------------------------------------------
// Small parsers for option values
// ---------------------------------------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const std::string& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("expected a comma-separated integer list, got \"" +
                       text + "\"");
    }
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& part : split(text, ','))
    out.push_back(parse_rational(part));
  return out;
}

/// "1,5;4,8;2,6" -> one mask per ';' group.
std::vector<SetMask> parse_set_groups(const std::string& text, int ground) {
  std::vector<SetMask> out;
  for (const std::string& group : split(text, ';'))
    out.push_back(mask_from_elements(parse_int_list(group), ground));
  return out;
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

Json base_config(const Opts& o) {
  Json c;
  c["command"] = o.command;
  c["seed"] = o.seed;
  c["trials"] = o.trials;
  c["samples"] = o.samples;
  c["tol"] = o.tol;
  c["expect_violation"] = o.expect_violation;
  c["output"] = o.json_out.empty() ? "stdout" : o.json_out;
  return c;
}

int finish(const Opts& o, Json config, Json result, bool ok) {
  Json doc;
  doc["schema"] = "v1";
  doc["config"] = std::move(config);
  doc["result"] = std::move(result);
  doc["ok"] = ok;
  if (o.json_out.empty())
    std::fputs(json_to_text(doc).c_str(), stdout);
  else
    write_json_file(o.json_out, doc);
  return ok ? 0 : 1;
}

/// Pass/fail verdict for commands that look for violations.
bool verdict(bool violation_found, const Opts& o) {
  return o.expect_violation ? violation_found : !violation_found;
}

VHMatroid load_vh(const std::string& path) {
  if (path.empty()) throw InputError("--hypergraph is required");
  return build_vh(hypergraph_from_json(load_json_file(path)));
}

ExactPoly load_poly(const std::string& path) {
  if (path.empty()) throw InputError("--poly is required");
  return poly_from_json(load_json_file(path));
}

std::vector<Rational> required_vector(const std::string& text,
                                      const char* flag) {
  if (text.empty())
    throw InputError(std::string(flag) + " is required (comma-separated "
                     "rationals, e.g. \"1,1/2,-3\")");
  return parse_rational_list(text);
}

void maybe_write_poly(const Opts& o, const ExactPoly& p) {
  if (!o.poly_out.empty()) write_json_file(o.poly_out, poly_to_json(p));
}

Json roots_to_json(const std::vector<RootInfo>& roots) {
  Json out = Json::array();
  for (const RootInfo& r : roots) {
    Json jr;
    jr["lower"] = rational_to_string(r.lower());
    jr["upper"] = rational_to_string(r.upper());
    jr["approx"] = r.approx;
    jr["multiplicity"] = r.multiplicity;
    if (r.exact)
      jr["value"] = rational_to_string(r.value);
    else
      jr["value"] = nullptr;
    out.push_back(std::move(jr));
  }
  return out;
}

Json witnesses_to_json(const std::vector<ViolationWitness>& ws) {
  Json out = Json::array();
  for (const ViolationWitness& w : ws) {
    Json jw;
    jw["sets"] = set_family_to_json(w.sets);
    jw["lhs"] = w.lhs;
    jw["rhs"] = w.rhs;
    out.push_back(std::move(jw));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Command runners
// ---------------------------------------------------------------------------

int run_build_matroid(const Opts& o) {
  VHMatroid m = load_vh(o.hypergraph);
  Json config = base_config(o);
  config["hypergraph"] = o.hypergraph;
  Json res;
  res["hypergraph"] = hypergraph_to_json(m.graph);
  res["ground"] = m.ground;
  res["rank"] = m.rank;
  res["nonbases"] = set_family_to_json(m.nonbases);
  Integer total;
  mpz_bin_uiui(total.get_mpz_t(), static_cast<unsigned long>(m.ground),
               static_cast<unsigned long>(m.rank));
  res["bases_count"] =
      static_cast<std::uint64_t>(total.get_ui()) - m.nonbases.size();
  if (m.ground <= 16)
    res["bases"] = set_family_to_json(enumerate_family(m, FamilyKind::kBases));
  return finish(o, std::move(config), std::move(res), true);
}

int run_rank(const Opts& o) {
  VHMatroid m = load_vh(o.hypergraph);
  if (o.set.empty()) throw InputError("--set is required (e.g. --set 1,2,5)");
  std::vector<int> elements = parse_int_list(o.set);
  Json config = base_config(o);
  config["hypergraph"] = o.hypergraph;
  config["set"] = elements;
  Json res;
  res["set"] = elements;
  res["rank"] = rank_of_subset(m, elements);
  return finish(o, std::move(config), std::move(res), true);
}

int run_enumerate(const Opts& o) {
  VHMatroid m = load_vh(o.hypergraph);
  FamilyKind kind = family_kind_from_name(o.family);
  std::vector<SetMask> family = enumerate_family(m, kind);
  Json config = base_config(o);
  config["hypergraph"] = o.hypergraph;
  config["family"] = family_kind_name(kind);
  Json res;
  res["family"] = family_kind_name(kind);
  res["count"] = family.size();
  res["sets"] = set_family_to_json(family);
  return finish(o, std::move(config), std::move(res), true);
}

int run_verify_axioms(const Opts& o) {
  VHMatroid m = load_vh(o.hypergraph);
  RankTable t = RankTable::from_vh(m);
  ExchangeCheck exchange =
      basis_exchange_check(enumerate_family(t, FamilyKind::kBases));
  PolymatroidReport axioms = check_polymatroid(t);
  std::vector<SetMask> hyperplanes =
      enumerate_family(t, FamilyKind::kHyperplanes);
  DPartitionReport partition =
      check_d_partition(hyperplanes, m.ground, m.rank - 1);

  Json config = base_config(o);
  config["hypergraph"] = o.hypergraph;
  Json res;
  res["basis_exchange"] = exchange.ok;
  if (!exchange.ok) {
    res["exchange_witness"] = {
        {"b1", elements_of(exchange.b1)},
        {"b2", elements_of(exchange.b2)},
        {"element", exchange.element},
    };
  }
  res["polymatroid"] = axioms.ok;
  if (!axioms.ok) res["polymatroid_axiom"] = axioms.axiom;
  res["hyperplane_partition"] = partition.ok;
  res["hyperplane_partition_trivial"] = partition.trivial;
  bool ok = exchange.ok && axioms.ok && partition.ok;
  return finish(o, std::move(config), std::move(res), ok);
}

int run_rank_ineq(const Opts& o, RankIneq which) {
  VHMatroid m = load_vh(o.hypergraph);
  Json config = base_config(o);
  config["hypergraph"] = o.hypergraph;
  config["search"] = o.search;
  Json res;
  bool violation = false;
  if (o.search) {
    std::vector<ViolationWitness> ws = violation_search(m, which, o.full);
    violation = !ws.empty();
    res["witness_count"] = ws.size();
    res["witnesses"] = witnesses_to_json(ws);
  } else {
    if (o.sets.empty())
      throw InputError("provide --sets \"A;B;C;...\" or --search");
    std::vector<SetMask> sets = parse_set_groups(o.sets, m.ground);
    config["sets"] = set_family_to_json(sets);
    IneqResult r = linear_rank_ineq(m, which, sets);
    violation = r.violated;
    res["inequality"] = rank_ineq_name(which);
    res["evaluation"] = ineq_result_to_json(r);
  }
  return finish(o, std::move(config), std::move(res), verdict(violation, o));
}

int run_search_violations(const Opts& o) {
  VHMatroid m = load_vh(o.hypergraph);
  RankIneq which = rank_ineq_from_name(o.ineq);
  Json config = base_config(o);
  config["hypergraph"] = o.hypergraph;
  config["inequality"] = rank_ineq_name(which);
  config["full"] = o.full;
  std::vector<ViolationWitness> ws = violation_search(m, which, o.full);
  Json res;
  res["inequality"] = rank_ineq_name(which);
  res["witness_count"] = ws.size();
  res["witnesses"] = witnesses_to_json(ws);
  return finish(o, std::move(config), std::move(res), verdict(!ws.empty(), o));
}

int run_minors(const Opts& o) {
  VHMatroid m = load_vh(o.hypergraph);
  RankTable t = RankTable::from_vh(m);
  Json config = base_config(o);
  config["hypergraph"] = o.hypergraph;
  Json res;
  if (!o.target.empty()) {
    RankTable target = RankTable::from_vh(load_vh(o.target));
    config["target"] = o.target;
    SetMask deleted = 0, contracted = 0;
    bool found = has_minor(t, target, &deleted, &contracted);
    res["has_minor"] = found;
    if (found) {
      res["deleted"] = elements_of(deleted);
      res["contracted"] = elements_of(contracted);
    }
    return finish(o, std::move(config), std::move(res), true);
  }
  SetMask deleted = mask_from_elements(parse_int_list(o.del_list), m.ground);
  SetMask contracted = mask_from_elements(parse_int_list(o.con_list), m.ground);
  config["delete"] = elements_of(deleted);
  config["contract"] = elements_of(contracted);
  RankTable minor = minor_table(t, deleted, contracted);
  res["ground"] = minor.ground();
  res["labels"] = minor_ground_labels(m.ground, deleted | contracted);
  res["full_rank"] = minor.full_rank();
  res["bases"] = set_family_to_json(enumerate_family(minor, FamilyKind::kBases));
  return finish(o, std::move(config), std::move(res), true);
}

int run_bases_poly(const Opts& o) {
  VHMatroid m = load_vh(o.hypergraph);
  ExactPoly h = bases_gen_poly(m);
  maybe_write_poly(o, h);
  Json config = base_config(o);
  config["hypergraph"] = o.hypergraph;
  if (!o.poly_out.empty()) config["poly_out"] = o.poly_out;
  Json res;
  res["poly"] = poly_to_json(h);
  res["terms"] = h.support().size();
  res["value_at_ones"] = rational_to_string(
      h.evaluate(std::vector<Rational>(static_cast<std::size_t>(h.arity()),
                                       Rational(1))));
  return finish(o, std::move(config), std::move(res), true);
}

int run_w_poly(const Opts& o) {
  if (o.hypergraph.empty()) throw InputError("--hypergraph is required");
  Hypergraph h = hypergraph_from_json(load_json_file(o.hypergraph));
  WPair wp = w_poly(h);
  maybe_write_poly(o, wp.w);
  Json config = base_config(o);
  config["hypergraph"] = o.hypergraph;
  if (!o.poly_out.empty()) config["poly_out"] = o.poly_out;
  Json res;
  res["f_poly"] = poly_to_json(wp.f);
  res["w_poly"] = poly_to_json(wp.w);
  res["support_equal"] = wp.support_equal;
  return finish(o, std::move(config), std::move(res), wp.support_equal);
}

int run_whpp_witness(const Opts& o) {
  if (o.hypergraph.empty()) throw InputError("--hypergraph is required");
  Hypergraph h = hypergraph_from_json(load_json_file(o.hypergraph));
  WitnessBundle b = whpp_witness(h, o.trials, o.seed);
  maybe_write_poly(o, b.witness_poly);
  Json config = base_config(o);
  config["hypergraph"] = o.hypergraph;
  if (!o.poly_out.empty()) config["poly_out"] = o.poly_out;
  Json res = witness_bundle_to_json(b);
  bool violation = !b.support_match || b.probe.failures > 0;
  return finish(o, std::move(config), std::move(res), verdict(violation, o));
}

int run_hpp_falsify(const Opts& o) {
  HppFalsification f = hpp_falsify_complete63();
  Json config = base_config(o);
  Json res;
  res["restriction"] = univariate_to_json(f.restriction);
  res["discriminant"] = rational_to_string(f.discriminant);
  res["non_real"] = f.non_real;
  // The command's purpose is the refutation: success means non-real roots.
  return finish(o, std::move(config), std::move(res), f.non_real);
}

int run_build_hnk(const Opts& o) {
  if (o.n < 0 || o.k < 0) throw InputError("--n and --k are required");
  HnkResult r = build_hnk(o.n, o.k);
  maybe_write_poly(o, r.h);
  Json config = base_config(o);
  config["n"] = o.n;
  config["k"] = o.k;
  if (!o.poly_out.empty()) config["poly_out"] = o.poly_out;
  Json res;
  res["hypergraph"] = hypergraph_to_json(r.hypergraph);
  res["h"] = poly_to_json(r.h);
  return finish(o, std::move(config), std::move(res), true);
}

int run_kummer(const Opts& o) {
  KummerReport r = kummer_check(o.trials, o.seed, o.samples);
  Json config = base_config(o);
  Json res;
  res["q_at_ones"] = rational_to_string(r.q_at_ones);
  res["product_degree"] = r.product_degree;
  res["q_probe"] = probe_report_to_json(r.q_probe);
  res["product_probe"] = probe_report_to_json(r.product_probe);
  res["samples"] = r.samples;
  res["inclusion_failures"] = r.inclusion_failures;
  if (r.failure_point) {
    Json pt = Json::array();
    for (const Rational& q : *r.failure_point)
      pt.push_back(rational_to_string(q));
    res["failure_point"] = std::move(pt);
  } else {
    res["failure_point"] = nullptr;
  }
  bool violation = r.q_at_ones != 2304 || r.product_degree != 7 ||
                   r.q_probe.failures > 0 || r.product_probe.failures > 0 ||
                   r.inclusion_failures > 0;
  return finish(o, std::move(config), std::move(res), verdict(violation, o));
}

int run_counterex_ranks(const Opts& o) {
  if (o.n < 0 || o.k < 0) throw InputError("--n and --k are required");
  std::vector<int> z = parse_int_list(o.z_list);
  if (o.z_list.empty())
    for (int i = 1; i <= o.k - 2; ++i) z.push_back(i);
  int x = o.x >= 0 ? o.x : o.k - 1;
  int y = o.y >= 0 ? o.y : o.k;
  IneqResult r = counterex_ranks(o.n, o.k, z, x, y);
  Json config = base_config(o);
  config["n"] = o.n;
  config["k"] = o.k;
  config["z"] = z;
  config["x"] = x;
  config["y"] = y;
  Json res = ineq_result_to_json(r);
  // Counterexample generator: success means the violation materialized.
  return finish(o, std::move(config), std::move(res), r.violated);
}

int run_check_identities(const Opts& o) {
  if (o.r < 0 || o.n < 0) throw InputError("--r and --n are required");
  Json config = base_config(o);
  config["which"] = o.which;
  config["r"] = o.r;
  config["n"] = o.n;
  std::vector<IdentityKind> kinds;
  if (o.which == "all") {
    kinds = {IdentityKind::kJensen, IdentityKind::kBoost,
             IdentityKind::kTsosConstant, IdentityKind::kDoubledElementary};
  } else {
    kinds = {identity_from_name(o.which)};
  }
  Json res;
  Json list = Json::array();
  bool all_hold = true;
  for (IdentityKind kind : kinds) {
    // r = 1 is below the valid range of the two doubled identities; skip
    // them in "all" mode rather than failing the whole sweep.
    if (o.which == "all" && o.r < 2 &&
        (kind == IdentityKind::kTsosConstant ||
         kind == IdentityKind::kDoubledElementary))
      continue;
    IdentityResult one = verify_identity(kind, o.r, o.n);
    Json entry;
    entry["identity"] = identity_name(kind);
    entry["holds"] = one.holds;
    entry["difference_terms"] = one.difference.support().size();
    list.push_back(std::move(entry));
    all_hold = all_hold && one.holds;
  }
  res["identities"] = std::move(list);
  return finish(o, std::move(config), std::move(res), all_hold);
}

int run_inequality_sample(const Opts& o) {
  if (o.r < 0 || o.n < 0) throw InputError("--r and --n are required");
  if (o.which == "all")
    throw InputError(
        "--which is required: laguerre_turan|newton|turan_refined|eng");
  InequalityKind which = inequality_from_name(o.which);
  GapReport g = inequality_gap(which, o.r, o.n, o.samples, o.seed);
  Json config = base_config(o);
  config["which"] = inequality_name(which);
  config["r"] = o.r;
  config["n"] = o.n;
  Json res = sample_stats_to_json(g.stats);
  res["nonnegative_on_samples"] = g.stats.nonnegative_on_samples;
  bool violation = !g.stats.nonnegative_on_samples;
  return finish(o, std::move(config), std::move(res), verdict(violation, o));
}

int run_probe(const Opts& o) {
  ExactPoly p = load_poly(o.poly);
  Json config = base_config(o);
  config["poly"] = o.poly;
  ProbeReport r;
  if (o.direction.empty()) {
    r = probe_stability(p, o.trials, o.seed, o.tol);
  } else {
    std::vector<Rational> e = parse_rational_list(o.direction);
    config["direction"] = Json::array();
    for (const Rational& q : e)
      config["direction"].push_back(rational_to_string(q));
    r = probe_hyperbolicity(p, e, o.trials, o.seed, o.tol);
  }
  Json res = probe_report_to_json(r);
  return finish(o, std::move(config), std::move(res),
                verdict(r.failures > 0, o));
}

int run_eigenvalues(const Opts& o) {
  ExactPoly p = load_poly(o.poly);
  std::vector<Rational> e = required_vector(o.direction, "--direction");
  std::vector<Rational> x = required_vector(o.point, "--point");
  Spectrum s = eigenvalues(p, e, x);
  Json config = base_config(o);
  config["poly"] = o.poly;
  config["direction"] = Json::array();
  for (const Rational& q : e) config["direction"].push_back(rational_to_string(q));
  config["point"] = Json::array();
  for (const Rational& q : x) config["point"].push_back(rational_to_string(q));
  Json res;
  res["restriction"] = univariate_to_json(s.restriction);
  res["degree"] = s.degree;
  res["eigenvalues"] = roots_to_json(s.roots);
  res["rank"] = hyp_rank(p, e, x);
  return finish(o, std::move(config), std::move(res), true);
}

int run_cone_member(const Opts& o) {
  ExactPoly p = load_poly(o.poly);
  std::vector<Rational> e = required_vector(o.direction, "--direction");
  std::vector<Rational> x = required_vector(o.point, "--point");
  ConeMembership where = cone_member(p, e, x, o.tol);
  Json config = base_config(o);
  config["poly"] = o.poly;
  config["direction"] = Json::array();
  for (const Rational& q : e) config["direction"].push_back(rational_to_string(q));
  config["point"] = Json::array();
  for (const Rational& q : x) config["point"].push_back(rational_to_string(q));
  Json res;
  res["membership"] = cone_membership_name(where);
  return finish(o, std::move(config), std::move(res), true);
}

int run_jordan_verify(const Opts& o) {
  if (o.points.empty()) throw InputError("--points is required");
  if (o.matroid.empty()) throw InputError("--matroid is required");
  PointSet ps = point_set_from_json(load_json_file(o.points));
  RepresentationTarget target = target_from_json(load_json_file(o.matroid));
  Json config = base_config(o);
  config["points"] = o.points;
  config["matroid"] = o.matroid;
  if (o.truncate_level >= 0) {
    config["truncate_level"] = o.truncate_level;
    for (auto& vec : ps.points)
      for (CDElement& c : vec) c = c.to_level(o.truncate_level);
    ps.level = o.truncate_level;
  }
  RepresentationReport report =
      verify_representation(idempotents_of(ps), target);
  Json res;
  res["algebra"] = cd_level_name(ps.level);
  res["points"] = ps.points.size();
  res["verified"] = report.ok;
  res["mismatch_count"] = report.mismatches.size();
  Json mism = Json::array();
  for (std::size_t i = 0; i < report.mismatches.size() && i < 20; ++i) {
    const RankMismatch& m = report.mismatches[i];
    Json jm;
    jm["subset"] = elements_of(m.subset);
    jm["expected"] = m.expected;
    jm["actual"] = m.actual;
    mism.push_back(std::move(jm));
  }
  res["mismatches"] = std::move(mism);
  return finish(o, std::move(config), std::move(res), verdict(!report.ok, o));
}

// ---------------------------------------------------------------------------
// Wiring
// ---------------------------------------------------------------------------

void add_globals(CLI::App* sub, Opts& o) {
  sub->add_option("--seed", o.seed, "random seed (default 0xC0FFEE)");
  sub->add_option("--trials", o.trials, "probe trials (default 256)");
  sub->add_option("--samples", o.samples, "sample count (default 10000)");
  sub->add_option("--tol", o.tol, "numeric tolerance (default 1e-9)");
  sub->add_flag("--expect-violation", o.expect_violation,
                "succeed when a violation IS found");
  sub->add_option("--json-out", o.json_out, "write the JSON document here");
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  std::function<int()> runner;

  CLI::App app{
      "Exact toolkit for hyperbolic polynomials and doubled-hypergraph "
      "matroids"};
  app.require_subcommand(1);

  auto make = [&](const std::string& name, const std::string& desc,
                  std::function<int()> fn) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_globals(sub, o);
    sub->callback([&, name, fn] {
      o.command = name;
      runner = fn;
    });
    return sub;
  };

  CLI::App* s;
  s = make("build-matroid", "doubled matroid of a hypergraph",
           [&] { return run_build_matroid(o); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");

  s = make("rank", "rank of one subset", [&] { return run_rank(o); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");
  s->add_option("--set", o.set, "subset, e.g. 1,2,5");

  s = make("enumerate", "bases / circuits / hyperplanes",
           [&] { return run_enumerate(o); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");
  s->add_option("--family", o.family, "bases|circuits|hyperplanes");

  s = make("verify-axioms", "exchange, polymatroid and partition checks",
           [&] { return run_verify_axioms(o); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");

  s = make("ingleton", "evaluate or search the Ingleton inequality",
           [&] { return run_rank_ineq(o, RankIneq::kIngleton); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");
  s->add_option("--sets", o.sets, "four sets, e.g. \"1,5;4,8;2,6;3,7\"");
  s->add_flag("--search", o.search, "search paired-doubleton tuples");
  s->add_flag("--full", o.full, "search unions of doubletons (guarded)");

  s = make("dfz", "evaluate or search the six-set inequality",
           [&] { return run_rank_ineq(o, RankIneq::kDfz); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");
  s->add_option("--sets", o.sets, "six sets separated by ';'");
  s->add_flag("--search", o.search, "search paired-doubleton tuples");
  s->add_flag("--full", o.full, "search unions of doubletons (guarded)");

  s = make("search-violations", "violation search for a named inequality",
           [&] { return run_search_violations(o); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");
  s->add_option("--ineq", o.ineq, "ingleton|dfz");
  s->add_flag("--full", o.full, "search unions of doubletons (guarded)");

  s = make("minors", "minor computation or minor containment",
           [&] { return run_minors(o); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");
  s->add_option("--target", o.target, "hypergraph JSON of the minor to find");
  s->add_option("--delete", o.del_list, "elements to delete, e.g. 1,2");
  s->add_option("--contract", o.con_list, "elements to contract");

  s = make("bases-poly", "bases-generating polynomial",
           [&] { return run_bases_poly(o); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");
  s->add_option("--poly-out", o.poly_out, "also write the bare polynomial");

  s = make("w-poly", "diagonalized stable form and its W variant",
           [&] { return run_w_poly(o); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");
  s->add_option("--poly-out", o.poly_out, "also write W as a polynomial file");

  s = make("whpp-witness", "polarized witness with support and probe checks",
           [&] { return run_whpp_witness(o); });
  s->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");
  s->add_option("--poly-out", o.poly_out, "also write the witness polynomial");

  make("hpp-falsify", "non-real restriction for the complete 3-uniform case",
       [&] { return run_hpp_falsify(o); });

  s = make("build-hnk", "two-special-vertex hypergraph and its polynomial",
           [&] { return run_build_hnk(o); });
  s->add_option("--n", o.n, "free vertex count");
  s->add_option("--k", o.k, "edge size");
  s->add_option("--poly-out", o.poly_out, "also write the polynomial");

  make("kummer", "quartic-times-cubic hyperbolicity and cone inclusion",
       [&] { return run_kummer(o); });

  s = make("counterex-ranks", "Ingleton sides of the diagonal polymatroid",
           [&] { return run_counterex_ranks(o); });
  s->add_option("--n", o.n, "free vertex count");
  s->add_option("--k", o.k, "edge size");
  s->add_option("--z", o.z_list, "(k-2)-subset of [n], default 1..k-2");
  s->add_option("--x", o.x, "element of [n], default k-1");
  s->add_option("--y", o.y, "element of [n], default k");

  s = make("check-identities", "exact symmetric-function identities",
           [&] { return run_check_identities(o); });
  s->add_option("--which", o.which,
                "jensen|boost|tsos_constant|doubled_elementary|all");
  s->add_option("--r", o.r, "identity index r");
  s->add_option("--n", o.n, "variable count");

  s = make("inequality-sample", "sample a gap polynomial for negativity",
           [&] { return run_inequality_sample(o); });
  s->add_option("--which", o.which,
                "laguerre_turan|newton|turan_refined|eng");
  s->add_option("--r", o.r, "inequality index r");
  s->add_option("--n", o.n, "variable count");

  s = make("probe", "stability / hyperbolicity probe of a polynomial file",
           [&] { return run_probe(o); });
  s->add_option("--poly", o.poly, "polynomial JSON file");
  s->add_option("--direction", o.direction,
                "probe hyperbolicity in this direction instead");

  s = make("eigenvalues", "exact eigenvalues of a point in a direction",
           [&] { return run_eigenvalues(o); });
  s->add_option("--poly", o.poly, "polynomial JSON file");
  s->add_option("--direction", o.direction, "hyperbolicity direction e");
  s->add_option("--point", o.point, "point x");

  s = make("cone-member", "interior / boundary / outside classification",
           [&] { return run_cone_member(o); });
  s->add_option("--poly", o.poly, "polynomial JSON file");
  s->add_option("--direction", o.direction, "hyperbolicity direction e");
  s->add_option("--point", o.point, "point x");

  s = make("jordan-verify", "verify a point configuration against a matroid",
           [&] { return run_jordan_verify(o); });
  s->add_option("--points", o.points, "point-set JSON file");
  s->add_option("--matroid", o.matroid, "target matroid JSON file");
  s->add_option("--truncate-level", o.truncate_level,
                "project coordinates to this algebra level first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return runner();
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
