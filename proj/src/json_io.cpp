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

#include "vamos/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vamos/errors.hpp"

namespace vamos {

namespace {

const Json& field(const Json& doc, const char* key, const char* context) {
  if (!doc.is_object())
    throw InputError(std::string(context) + ": expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end())
    throw InputError(std::string(context) + ": missing field \"" + key + "\"");
  return *it;
}

int int_field(const Json& doc, const char* key, const char* context) {
  const Json& v = field(doc, key, context);
  if (!v.is_number_integer())
    throw InputError(std::string(context) + ": field \"" + key +
                     "\" must be an integer");
  return v.get<int>();
}

Rational rational_field(const Json& v, const char* context) {
  if (!v.is_string())
    throw InputError(std::string(context) +
                     ": rationals must be \"p/q\" strings");
  return parse_rational(v.get<std::string>());
}

std::vector<int> int_array(const Json& v, const char* context) {
  if (!v.is_array())
    throw InputError(std::string(context) + ": expected an array of integers");
  std::vector<int> out;
  for (const Json& x : v) {
    if (!x.is_number_integer())
      throw InputError(std::string(context) + ": expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json rational_array(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const Rational& x : xs) out.push_back(rational_to_string(x));
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return doc;
}

std::string json_to_text(const Json& doc) { return doc.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << json_to_text(doc);
  if (!out) throw InputError("write failed: " + path);
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

Json poly_to_json(const ExactPoly& p) {
  Json terms = Json::array();
  for (const Monomial& m : p.support()) {
    Json term;
    term["exp"] = m;
    term["coef"] = rational_to_string(p.coefficient(m));
    terms.push_back(std::move(term));
  }
  Json doc;
  doc["arity"] = p.arity();
  doc["terms"] = std::move(terms);
  return doc;
}

ExactPoly poly_from_json(const Json& doc) {
  const char* ctx = "polynomial JSON";
  int arity = int_field(doc, "arity", ctx);
  if (arity < 0) throw InputError(std::string(ctx) + ": arity must be >= 0");
  const Json& terms = field(doc, "terms", ctx);
  if (!terms.is_array())
    throw InputError(std::string(ctx) + ": \"terms\" must be an array");
  ExactPoly out(arity);
  for (const Json& term : terms) {
    std::vector<int> exp = int_array(field(term, "exp", ctx), ctx);
    if (static_cast<int>(exp.size()) != arity)
      throw InputError(std::string(ctx) + ": exponent array length " +
                       std::to_string(exp.size()) + " != arity " +
                       std::to_string(arity));
    for (int e : exp)
      if (e < 0)
        throw InputError(std::string(ctx) + ": negative exponent");
    out.add_term(exp, rational_field(field(term, "coef", ctx), ctx));
  }
  return out;
}

Json univariate_to_json(const UnivariateExact& p) {
  Json doc;
  doc["degree"] = p.degree();
  doc["coef"] = rational_array(p.coef());
  return doc;
}

// ---------------------------------------------------------------------------
// Hypergraphs and set families
// ---------------------------------------------------------------------------

Json hypergraph_to_json(const Hypergraph& h) {
  Json doc;
  doc["n"] = h.n;
  doc["d"] = h.d;
  doc["edges"] = edge_lists_of(h);
  return doc;
}

Hypergraph hypergraph_from_json(const Json& doc) {
  const char* ctx = "hypergraph JSON";
  int n = int_field(doc, "n", ctx);
  int d = int_field(doc, "d", ctx);
  const Json& edges = field(doc, "edges", ctx);
  if (!edges.is_array())
    throw InputError(std::string(ctx) + ": \"edges\" must be an array");
  std::vector<std::vector<int>> lists;
  for (const Json& e : edges) lists.push_back(int_array(e, ctx));
  return make_hypergraph(n, d, lists);
}

Json set_family_to_json(const std::vector<SetMask>& family) {
  std::vector<std::vector<int>> lists;
  for (SetMask s : family) lists.push_back(elements_of(s));
  std::sort(lists.begin(), lists.end());
  return Json(lists);
}

std::vector<SetMask> set_family_from_json(const Json& doc, int ground) {
  const char* ctx = "set-family JSON";
  if (!doc.is_array())
    throw InputError(std::string(ctx) + ": expected an array of arrays");
  std::vector<SetMask> out;
  for (const Json& s : doc)
    out.push_back(mask_from_elements(int_array(s, ctx), ground));
  return out;
}

// ---------------------------------------------------------------------------
// Point configurations and targets
// ---------------------------------------------------------------------------

Json point_set_to_json(const PointSet& ps) {
  Json doc;
  doc["algebra"] = cd_level_name(ps.level);
  if (!ps.note.empty()) doc["note"] = ps.note;
  Json pts = Json::array();
  for (const auto& vec : ps.points) {
    Json coords = Json::array();
    for (const CDElement& x : vec) coords.push_back(rational_array(x.coords()));
    pts.push_back(std::move(coords));
  }
  doc["points"] = std::move(pts);
  return doc;
}

PointSet point_set_from_json(const Json& doc) {
  const char* ctx = "point-set JSON";
  const Json& algebra = field(doc, "algebra", ctx);
  if (!algebra.is_string())
    throw InputError(std::string(ctx) + ": \"algebra\" must be a string");
  PointSet out;
  out.level = cd_level_from_name(algebra.get<std::string>());
  if (doc.contains("note") && doc["note"].is_string())
    out.note = doc["note"].get<std::string>();
  const Json& pts = field(doc, "points", ctx);
  if (!pts.is_array())
    throw InputError(std::string(ctx) + ": \"points\" must be an array");
  std::size_t dim = std::size_t{1} << out.level;
  for (const Json& p : pts) {
    if (!p.is_array() || p.size() != 3)
      throw InputError(std::string(ctx) +
                       ": each point needs exactly 3 coordinates");
    std::vector<CDElement> vec;
    for (const Json& coord : p) {
      if (!coord.is_array() || coord.size() != dim)
        throw InputError(std::string(ctx) + ": each coordinate needs " +
                         std::to_string(dim) + " rationals at algebra " +
                         cd_level_name(out.level));
      std::vector<Rational> c;
      for (const Json& q : coord) c.push_back(rational_field(q, ctx));
      vec.emplace_back(out.level, std::move(c));
    }
    out.points.push_back(std::move(vec));
  }
  return out;
}

std::vector<H3Element> idempotents_of(const PointSet& ps) {
  std::vector<H3Element> out;
  for (const auto& vec : ps.points) out.push_back(rank_one_from_vector(vec));
  return out;
}

Json target_to_json(const RepresentationTarget& t) {
  Json doc;
  doc["ground"] = t.ground;
  doc["rank"] = t.rank;
  doc["nonbases"] = set_family_to_json(t.nonbases);
  return doc;
}

RepresentationTarget target_from_json(const Json& doc) {
  const char* ctx = "target-matroid JSON";
  RepresentationTarget out;
  out.ground = int_field(doc, "ground", ctx);
  out.rank = int_field(doc, "rank", ctx);
  out.nonbases = set_family_from_json(field(doc, "nonbases", ctx), out.ground);
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

Json probe_report_to_json(const ProbeReport& r) {
  Json doc;
  doc["trials"] = r.trials;
  doc["failures"] = r.failures;
  doc["seed"] = r.seed;
  doc["tol"] = r.tol;
  if (r.worst_witness) {
    const ProbeWitness& w = *r.worst_witness;
    Json jw;
    jw["x0"] = rational_array(w.x0);
    jw["v"] = rational_array(w.v);
    jw["degenerate"] = w.degenerate;
    jw["root"] = {w.root.real(), w.root.imag()};
    jw["imag_excess"] = w.imag_excess;
    doc["worst_witness"] = std::move(jw);
  } else {
    doc["worst_witness"] = nullptr;
  }
  return doc;
}

Json ineq_result_to_json(const IneqResult& r) {
  Json doc;
  doc["lhs"] = r.lhs;
  doc["rhs"] = r.rhs;
  doc["violated"] = r.violated;
  return doc;
}

Json sample_stats_to_json(const SampleStats& s) {
  Json doc;
  doc["which"] = s.which;
  doc["r"] = s.r;
  doc["n"] = s.n;
  doc["seed"] = s.seed;
  doc["samples"] = s.samples;
  doc["min_value"] = rational_to_string(s.min_value);
  if (s.witness_point.empty())
    doc["witness_point"] = nullptr;
  else
    doc["witness_point"] = rational_array(s.witness_point);
  doc["exact_zero_gap"] = s.exact_zero_gap;
  return doc;
}

Json witness_bundle_to_json(const WitnessBundle& b) {
  Json doc;
  doc["hypergraph"] = hypergraph_to_json(b.matroid.graph);
  doc["ground"] = b.matroid.ground;
  doc["rank"] = b.matroid.rank;
  doc["nonbases"] = set_family_to_json(b.matroid.nonbases);
  doc["f_poly"] = poly_to_json(b.f_poly);
  doc["w_poly"] = poly_to_json(b.w_poly);
  doc["witness_poly"] = poly_to_json(b.witness_poly);
  doc["support_match"] = b.support_match;
  doc["probe"] = probe_report_to_json(b.probe);
  return doc;
}

}  // namespace vamos
