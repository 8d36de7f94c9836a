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
// Sparse paving matroids V_H built from uniform hypergraphs: closed-form
// rank, exhaustive enumeration of bases/circuits/hyperplanes, matroid and
// d-partition axiom checks, linear rank inequalities (Ingleton and the
// six-variable Dougherty-Freiling-Zeger inequality), minors, isomorphism,
// and the diagonal polymatroid.

#ifndef VAMOS_MATROID_HPP
#define VAMOS_MATROID_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vamos/setfamily.hpp"

namespace vamos {

/// d-uniform hypergraph on vertex set [n].  Edges are stored as bitmasks
/// over the n vertices, strictly increasing, duplicate-free.
struct Hypergraph {
  int n = 0;
  int d = 0;
  std::vector<SetMask> edges;
};

/// Validates and normalizes (1-based vertex lists, sorted/deduplicated
/// edges).  Requires 1 <= d <= n <= 32 and every edge to be a d-subset of
/// [n].  Throws InputError otherwise.
Hypergraph make_hypergraph(int n, int d,
                           const std::vector<std::vector<int>>& edge_lists);

/// Edge masks back to sorted 1-based vertex lists (for serialization).
std::vector<std::vector<int>> edge_lists_of(const Hypergraph& h);

/// The sparse paving matroid V_H on ground set {1,...,n, 1',...,n'} with
/// i' encoded as i+n.  Rank 2d; the non-bases among 2d-subsets are exactly
/// the doubled edges e + e'.
struct VHMatroid {
  Hypergraph graph;
  int ground = 0;                 ///< 2n
  int rank = 0;                   ///< 2d
  std::vector<SetMask> nonbases;  ///< doubled edges, ascending

  /// Closed-form rank: |S| below 2d, then 2d minus one exactly on the
  /// doubled edges, then 2d.
  int rank_of(SetMask s) const;
  bool is_nonbasis(SetMask s) const;
};

/// Builds V_H.  Throws InputError for an invalid hypergraph, a ground set
/// beyond 64 elements, or the degenerate d == n case with the full edge
/// present (no basis would remain).
VHMatroid build_vh(const Hypergraph& h);

/// Rank of a subset given as 1-based element labels; validates range.
int rank_of_subset(const VHMatroid& m, const std::vector<int>& elements);

/// Dense rank function over a ground set of at most 16 elements; the
/// workhorse for exhaustive checks, minors and isomorphism.
class RankTable {
 public:
  RankTable(int ground, std::vector<std::uint8_t> table);

  /// Fills the table from the closed form of V_H.
  static RankTable from_vh(const VHMatroid& m);
  /// Fills the table from an explicit basis family: r(S) is the largest
  /// intersection of S with a basis.  The family must be nonempty and
  /// equicardinal.
  static RankTable from_bases(int ground, const std::vector<SetMask>& bases);
  /// The uniform matroid U_{rank, ground}.
  static RankTable uniform(int rank, int ground);

  int ground() const { return ground_; }
  int rank(SetMask s) const { return table_[s]; }
  int full_rank() const { return table_.back(); }

  bool operator==(const RankTable& o) const = default;

 private:
  int ground_;
  std::vector<std::uint8_t> table_;  // indexed by subset mask
};

enum class FamilyKind { kBases, kCircuits, kHyperplanes };

FamilyKind family_kind_from_name(const std::string& name);
const char* family_kind_name(FamilyKind k);

/// Exhaustively enumerates bases, circuits (minimal dependent sets), or
/// hyperplanes (maximal sets of rank one below full) from a rank table.
/// Results ascend numerically.
std::vector<SetMask> enumerate_family(const RankTable& t, FamilyKind kind);
/// Convenience overload; throws InputError when the ground set exceeds 16.
std::vector<SetMask> enumerate_family(const VHMatroid& m, FamilyKind kind);

/// Outcome of the d-partition test: all members have at least d elements
/// and every d-subset of the ground set lies in exactly one member.
/// The partition {E} is valid but flagged trivial.
struct DPartitionReport {
  bool ok = true;
  bool trivial = false;
  SetMask small_member = 0;  ///< member with fewer than d elements, if any
  SetMask bad_subset = 0;    ///< d-subset covered != 1 times, if any
  int cover_count = -1;      ///< how often bad_subset was covered
};

DPartitionReport check_d_partition(const std::vector<SetMask>& family,
                                   int ground, int d);

/// Witness-producing check of the polymatroid axioms on a rank table:
/// normalization r(empty) = 0, unit monotonicity, and local submodularity
/// r(S+a) + r(S+b) >= r(S+a+b) + r(S), which together imply the global
/// axioms.  `axiom` names the first failure.
struct PolymatroidReport {
  bool ok = true;
  std::string axiom;
  SetMask set = 0;
  int a = -1, b = -1;  ///< 1-based element labels of the witness step
};

PolymatroidReport check_polymatroid(const RankTable& t);

enum class RankIneq { kIngleton, kDfz };

RankIneq rank_ineq_from_name(const std::string& name);
const char* rank_ineq_name(RankIneq which);

struct IneqResult {
  long lhs = 0;
  long rhs = 0;
  bool violated = false;  ///< lhs > rhs
};

/// Evaluates a linear rank inequality exactly.  Ingleton takes four sets
/// A,B,C,D:
///   r(AB) + r(ACD) + r(C) + r(D) + r(BCD)
///     <= r(AC) + r(AD) + r(BC) + r(BD) + r(CD).
/// The Dougherty-Freiling-Zeger form takes six sets A..F:
///   r(AD) + r(BC) + r(CE) + r(EF) + r(BDF)
///     + r(ABCD) + r(ABCE) + r(ACEF) + r(ADEF)
///   <= r(ABC) + r(ABD) + r(ACE) + r(ADF) + r(AEF)
///     + r(BCD) + r(BCE) + r(CEF) + r(DEF).
IneqResult linear_rank_ineq(const std::function<int(SetMask)>& r,
                            RankIneq which, const std::vector<SetMask>& sets);
/// Convenience overloads validating the sets against the ground set.
IneqResult linear_rank_ineq(const VHMatroid& m, RankIneq which,
                            const std::vector<SetMask>& sets);
IneqResult linear_rank_ineq(const RankTable& t, RankIneq which,
                            const std::vector<SetMask>& sets);

struct ViolationWitness {
  std::vector<SetMask> sets;  ///< over the matroid ground set
  long lhs = 0;
  long rhs = 0;
};

/// Searches for violations of the chosen inequality.  By default every
/// variable runs over the paired doubletons {i, i'} with pairwise distinct
/// indices, in lexicographic index order (the shape of all known
/// violations here).  With full_subsets each variable instead runs over
/// all unions of doubletons; that search is guarded to at most 2^24
/// evaluations and throws InputError beyond.
std::vector<ViolationWitness> violation_search(const VHMatroid& m,
                                               RankIneq which,
                                               bool full_subsets = false);

/// Minor rank function r'(S) = r(S + C) - r(C) on the surviving ground
/// set, relabeled order-preservingly to 1..m.  Throws InputError when the
/// deleted and contracted sets overlap or leave the ground set.
RankTable minor_table(const RankTable& base, SetMask deleted,
                      SetMask contracted);

/// Original 1-based labels surviving the removal, ascending; position i
/// (0-based) is the preimage of new element i+1.
std::vector<int> minor_ground_labels(int ground, SetMask removed);

/// Matroid isomorphism by backtracking over element bijections, pruned by
/// per-size rank histograms and per-element rank signatures.  On success
/// *perm (if given) receives the mapping: element i+1 of a goes to
/// perm[i]+1 of b.
bool is_isomorphic(const RankTable& a, const RankTable& b,
                   std::vector<int>* perm = nullptr);

/// Whether some deletion/contraction of `m` is isomorphic to `target`;
/// fills the witness masks when given.
bool has_minor(const RankTable& m, const RankTable& target,
               SetMask* deleted = nullptr, SetMask* contracted = nullptr);

/// Diagonal polymatroid of V_H on [n]: r0(S) = rank of S + S' in V_H.
/// Twice a matroid rank function in disguise; exact for any ground size
/// the closed form supports.
std::function<int(SetMask)> diagonal_rank(const VHMatroid& m);

}  // namespace vamos

#endif  // VAMOS_MATROID_HPP
