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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "vamos/json_io.hpp"
#include "vamos/symfun.hpp"

using namespace vamos;

TEST_CASE("polynomials round-trip with descending graded-lex terms") {
  ExactPoly p = elementary_symmetric(3, 2) +
                ExactPoly::constant(3, Rational(-7, 2)) +
                ExactPoly::variable(3, 0) * ExactPoly::variable(3, 0);
  Json doc = poly_to_json(p);
  CHECK(doc["arity"] == 3);
  // First term is the graded-lex leading one: x1^2.
  CHECK(doc["terms"][0]["exp"] == Json::array({2, 0, 0}));
  CHECK(doc["terms"][0]["coef"] == "1");
  CHECK(poly_from_json(doc) == p);

  // Zero polynomial round-trips as an empty term list.
  Json zero = poly_to_json(ExactPoly(2));
  CHECK(zero["terms"].empty());
  CHECK(poly_from_json(zero) == ExactPoly(2));
}

TEST_CASE("polynomial parsing validates shape") {
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms": []})")), InputError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"arity": 2})")), InputError);
  CHECK_THROWS_AS(
      poly_from_json(Json::parse(
          R"({"arity": 2, "terms": [{"exp": [1], "coef": "1"}]})")),
      InputError);
  CHECK_THROWS_AS(
      poly_from_json(Json::parse(
          R"({"arity": 1, "terms": [{"exp": [-1], "coef": "1"}]})")),
      InputError);
  CHECK_THROWS_AS(
      poly_from_json(Json::parse(
          R"({"arity": 1, "terms": [{"exp": [1], "coef": "1/0"}]})")),
      InputError);
  CHECK_THROWS_AS(
      poly_from_json(Json::parse(
          R"({"arity": 1, "terms": [{"exp": [1], "coef": 1}]})")),
      InputError);
}

TEST_CASE("hypergraphs round-trip") {
  Hypergraph h = make_hypergraph(4, 2, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  Json doc = hypergraph_to_json(h);
  CHECK(doc["n"] == 4);
  CHECK(doc["d"] == 2);
  CHECK(doc["edges"].size() == 5);
  Hypergraph back = hypergraph_from_json(doc);
  CHECK(back.edges == h.edges);
  CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"n": 3, "d": 2})")),
                  InputError);
  // Structural validation is delegated to make_hypergraph.
  CHECK_THROWS_AS(hypergraph_from_json(
                      Json::parse(R"({"n": 3, "d": 2, "edges": [[1, 5]]})")),
                  InputError);
}

TEST_CASE("set families serialize sorted") {
  std::vector<SetMask> family = {mask_from_elements({2, 3}, 4),
                                 mask_from_elements({1, 4}, 4)};
  Json doc = set_family_to_json(family);
  CHECK(doc[0] == Json::array({1, 4}));
  CHECK(doc[1] == Json::array({2, 3}));
  std::vector<SetMask> back = set_family_from_json(doc, 4);
  CHECK(back.size() == 2);
  CHECK(back[0] == mask_from_elements({1, 4}, 4));
  CHECK_THROWS_AS(set_family_from_json(Json::parse("[[0]]"), 4), InputError);
}

TEST_CASE("point sets round-trip by algebra level") {
  PointSet ps;
  ps.level = 2;
  ps.note = "example";
  ps.points = {{CDElement::unit(2, 0), CDElement::unit(2, 1),
                CDElement::scalar(2, Rational(1, 2))}};
  Json doc = point_set_to_json(ps);
  CHECK(doc["algebra"] == "H");
  PointSet back = point_set_from_json(doc);
  CHECK(back.level == 2);
  CHECK(back.note == "example");
  REQUIRE(back.points.size() == 1);
  CHECK(back.points[0][1] == CDElement::unit(2, 1));

  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"points": []})")),
                  InputError);
  CHECK_THROWS_AS(
      point_set_from_json(Json::parse(R"({"algebra": "X", "points": []})")),
      InputError);
  // Coordinate arrays must match the algebra dimension.
  CHECK_THROWS_AS(point_set_from_json(Json::parse(
                      R"({"algebra": "H", "points": [[["1"], ["0"], ["0"]]]})")),
                  InputError);
  CHECK(idempotents_of(ps).size() == 1);
}

TEST_CASE("targets round-trip") {
  RepresentationTarget t;
  t.ground = 4;
  t.nonbases = {mask_from_elements({1, 2, 3}, 4)};
  Json doc = target_to_json(t);
  RepresentationTarget back = target_from_json(doc);
  CHECK(back.ground == 4);
  CHECK(back.rank == 3);
  CHECK(back.nonbases == t.nonbases);
}

TEST_CASE("report serialization carries the probe fields") {
  ExactPoly e2 = elementary_symmetric(4, 2);
  ProbeReport clean = probe_stability(e2, 16, 1);
  Json doc = probe_report_to_json(clean);
  CHECK(doc["trials"] == 16);
  CHECK(doc["failures"] == 0);
  CHECK(doc["worst_witness"].is_null());

  ExactPoly circle = ExactPoly::variable(2, 0) * ExactPoly::variable(2, 0) +
                     ExactPoly::variable(2, 1) * ExactPoly::variable(2, 1);
  Json bad = probe_report_to_json(probe_stability(circle, 16, 1));
  CHECK(bad["failures"].get<int>() > 0);
  CHECK(bad["worst_witness"]["x0"].size() == 2);
  CHECK(bad["worst_witness"]["root"].size() == 2);
}

TEST_CASE("sample stats serialize with the documented fields") {
  GapReport g = inequality_gap(InequalityKind::kTuranRefined, 2, 4, 25, 99);
  Json doc = sample_stats_to_json(g.stats);
  CHECK(doc["which"] == "turan_refined");
  CHECK(doc["r"] == 2);
  CHECK(doc["n"] == 4);
  CHECK(doc["samples"] == 25);
  CHECK(doc["seed"] == 99);
  CHECK(doc.contains("min_value"));
  CHECK(doc.contains("witness_point"));
  CHECK(doc.contains("exact_zero_gap"));
}

TEST_CASE("rendering is deterministic and file io round-trips") {
  Hypergraph h = make_hypergraph(3, 2, {{1, 2}, {2, 3}});
  Json doc = hypergraph_to_json(h);
  CHECK(json_to_text(doc) == json_to_text(hypergraph_to_json(h)));

  std::string path = "io_roundtrip_tmp.json";
  write_json_file(path, doc);
  Json loaded = load_json_file(path);
  CHECK(loaded == Json(doc));
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_json_file("does_not_exist.json"), InputError);
}
