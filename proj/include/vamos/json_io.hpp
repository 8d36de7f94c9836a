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
// JSON encodings for every value the toolkit reads or writes: polynomials,
// hypergraphs, set families, point configurations, probe reports and
// witness bundles.  All rationals travel as "p/q" strings; all element
// labels are 1-based sorted integer arrays; writers emit fields in a fixed
// order so serialized output is byte-reproducible.

#ifndef VAMOS_JSON_IO_HPP
#define VAMOS_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "vamos/exactpoly.hpp"
#include "vamos/jordan.hpp"
#include "vamos/matroid.hpp"
#include "vamos/setfamily.hpp"
#include "vamos/stability.hpp"
#include "vamos/symfun.hpp"
#include "vamos/vamoslab.hpp"

namespace vamos {

/// Insertion-ordered JSON so documents render in the order they are built.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Files and rendering
// ---------------------------------------------------------------------------

/// Parses a JSON file; unreadable or malformed input throws InputError
/// naming the path.
Json load_json_file(const std::string& path);
/// Canonical rendering: two-space indent, trailing newline.
std::string json_to_text(const Json& doc);
void write_json_file(const std::string& path, const Json& doc);

// ---------------------------------------------------------------------------
// Polynomials: {"arity": n, "terms": [{"exp": [e1..en], "coef": "p/q"}, ...]}
// with terms in descending graded-lex order.
// ---------------------------------------------------------------------------

Json poly_to_json(const ExactPoly& p);
ExactPoly poly_from_json(const Json& doc);

Json univariate_to_json(const UnivariateExact& p);  ///< ascending "coef" list

// ---------------------------------------------------------------------------
// Hypergraphs: {"n": n, "d": d, "edges": [[...], ...]} (1-based, sorted).
// ---------------------------------------------------------------------------

Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& doc);

// ---------------------------------------------------------------------------
// Set families: sorted arrays of sorted 1-based arrays.
// ---------------------------------------------------------------------------

Json set_family_to_json(const std::vector<SetMask>& family);
std::vector<SetMask> set_family_from_json(const Json& doc, int ground);

// ---------------------------------------------------------------------------
// Point configurations over a Cayley-Dickson level:
//   {"algebra": "R|C|H|O", "points": [[coords, coords, coords], ...]}
// where coords is an array of 2^level rational strings.
// ---------------------------------------------------------------------------

struct PointSet {
  int level = 0;
  std::vector<std::vector<CDElement>> points;  ///< three coordinates each
  std::string note;                            ///< optional free-form remark
};

Json point_set_to_json(const PointSet& ps);
PointSet point_set_from_json(const Json& doc);
/// Rank-one idempotents of all points, in order.
std::vector<H3Element> idempotents_of(const PointSet& ps);

// Rank-3 target matroids: {"ground": m, "rank": 3, "nonbases": [[i,j,k],...]}.
Json target_to_json(const RepresentationTarget& t);
RepresentationTarget target_from_json(const Json& doc);

// ---------------------------------------------------------------------------
// Reports (write-only: these are outputs, never inputs).
// ---------------------------------------------------------------------------

Json probe_report_to_json(const ProbeReport& r);
Json ineq_result_to_json(const IneqResult& r);
Json sample_stats_to_json(const SampleStats& s);
Json witness_bundle_to_json(const WitnessBundle& b);

}  // namespace vamos

#endif  // VAMOS_JSON_IO_HPP
