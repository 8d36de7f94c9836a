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

#include "vamos/matroid.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace vamos {

namespace {

constexpr int kTableGroundLimit = 16;

void validate_hypergraph(const Hypergraph& h) {
  if (h.n < 1 || h.n > 32) throw InputError("vertex count must be in 1..32");
  if (h.d < 1 || h.d > h.n)
    throw InputError("uniform edge size must be in 1..n");
  SetMask vertex_mask = full_mask(h.n);
  SetMask prev = 0;
  bool first = true;
  for (SetMask e : h.edges) {
    if ((e & ~vertex_mask) != 0) throw InputError("edge leaves the vertex set");
    if (set_size(e) != h.d) throw InputError("edge has the wrong size");
    if (!first && e <= prev)
      throw InputError("edges must be strictly increasing");
    prev = e;
    first = false;
  }
}

}  // namespace

Hypergraph make_hypergraph(int n, int d,
                           const std::vector<std::vector<int>>& edge_lists) {
  Hypergraph h;
  h.n = n;
  h.d = d;
  if (n < 1 || n > 32) throw InputError("vertex count must be in 1..32");
  for (const auto& verts : edge_lists)
    h.edges.push_back(mask_from_elements(verts, n));
  std::sort(h.edges.begin(), h.edges.end());
  if (std::adjacent_find(h.edges.begin(), h.edges.end()) != h.edges.end())
    throw InputError("duplicate edge");
  validate_hypergraph(h);
  return h;
}

std::vector<std::vector<int>> edge_lists_of(const Hypergraph& h) {
  std::vector<std::vector<int>> out;
  for (SetMask e : h.edges) out.push_back(elements_of(e));
  return out;
}

int VHMatroid::rank_of(SetMask s) const {
  int k = set_size(s);
  if (k < rank) return k;
  if (k == rank && is_nonbasis(s)) return rank - 1;
  return rank;
}

bool VHMatroid::is_nonbasis(SetMask s) const {
  return std::binary_search(nonbases.begin(), nonbases.end(), s);
}

VHMatroid build_vh(const Hypergraph& h) {
  validate_hypergraph(h);
  if (2 * h.n > 64) throw InputError("ground set beyond 64 elements");
  VHMatroid m;
  m.graph = h;
  m.ground = 2 * h.n;
  m.rank = 2 * h.d;
  if (h.d == h.n && !h.edges.empty())
    throw InputError("d = n with the full edge leaves no bases");
  for (SetMask e : h.edges) m.nonbases.push_back(e | (e << h.n));
  std::sort(m.nonbases.begin(), m.nonbases.end());
  return m;
}

int rank_of_subset(const VHMatroid& m, const std::vector<int>& elements) {
  return m.rank_of(mask_from_elements(elements, m.ground));
}

RankTable::RankTable(int ground, std::vector<std::uint8_t> table)
    : ground_(ground), table_(std::move(table)) {
  if (ground < 0 || ground > kTableGroundLimit)
    throw InputError("rank table limited to ground sets of 16 elements");
  if (table_.size() != (size_t{1} << ground))
    throw InternalError("rank table has the wrong size");
}

RankTable RankTable::from_vh(const VHMatroid& m) {
  if (m.ground > kTableGroundLimit)
    throw InputError("exhaustive operations limited to 16 ground elements");
  std::vector<std::uint8_t> t(size_t{1} << m.ground);
  for (SetMask s = 0; s < t.size(); ++s)
    t[s] = static_cast<std::uint8_t>(m.rank_of(s));
  return RankTable(m.ground, std::move(t));
}

RankTable RankTable::from_bases(int ground,
                                const std::vector<SetMask>& bases) {
  if (ground < 0 || ground > kTableGroundLimit)
    throw InputError("rank table limited to ground sets of 16 elements");
  if (bases.empty()) throw InputError("basis family must be nonempty");
  int rank = set_size(bases.front());
  for (SetMask b : bases) {
    if ((b & ~full_mask(ground)) != 0)
      throw InputError("basis leaves the ground set");
    if (set_size(b) != rank)
      throw InputError("basis family members must share one cardinality");
  }
  std::vector<std::uint8_t> t(size_t{1} << ground, 0);
  for (SetMask s = 0; s < t.size(); ++s) {
    int best = 0;
    for (SetMask b : bases) best = std::max(best, set_size(s & b));
    t[s] = static_cast<std::uint8_t>(best);
  }
  return RankTable(ground, std::move(t));
}

RankTable RankTable::uniform(int rank, int ground) {
  if (rank < 0 || rank > ground)
    throw InputError("uniform matroid rank must be in 0..ground");
  std::vector<std::uint8_t> t(size_t{1} << ground);
  for (SetMask s = 0; s < t.size(); ++s)
    t[s] = static_cast<std::uint8_t>(std::min(set_size(s), rank));
  return RankTable(ground, std::move(t));
}

FamilyKind family_kind_from_name(const std::string& name) {
  if (name == "bases") return FamilyKind::kBases;
  if (name == "circuits") return FamilyKind::kCircuits;
  if (name == "hyperplanes") return FamilyKind::kHyperplanes;
  throw InputError("unknown family kind: " + name);
}

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::kBases: return "bases";
    case FamilyKind::kCircuits: return "circuits";
    case FamilyKind::kHyperplanes: return "hyperplanes";
  }
  throw InternalError("unknown family kind value");
}

std::vector<SetMask> enumerate_family(const RankTable& t, FamilyKind kind) {
  std::vector<SetMask> out;
  const int g = t.ground();
  const int r = t.full_rank();
  switch (kind) {
    case FamilyKind::kBases:
      for_each_subset_of_size(g, r, [&](SetMask s) {
        if (t.rank(s) == r) out.push_back(s);
      });
      break;
    case FamilyKind::kCircuits:
      // Minimal dependent sets; circuits have at most rank+1 elements.
      for (int k = 1; k <= r + 1 && k <= g; ++k) {
        for_each_subset_of_size(g, k, [&](SetMask s) {
          if (t.rank(s) >= k) return;  // independent
          SetMask rest = s;
          while (rest) {
            SetMask bit = rest & (-rest);
            rest &= rest - 1;
            if (t.rank(s ^ bit) < k - 1) return;  // proper subset dependent
          }
          out.push_back(s);
        });
      }
      std::sort(out.begin(), out.end());
      break;
    case FamilyKind::kHyperplanes: {
      SetMask all = full_mask(g);
      for (SetMask s = 0; s <= all && all; ++s) {
        if (t.rank(s) != r - 1) continue;
        bool maximal = true;
        SetMask outside = all & ~s;
        while (outside) {
          SetMask bit = outside & (-outside);
          outside &= outside - 1;
          if (t.rank(s | bit) == r - 1) {
            maximal = false;
            break;
          }
        }
        if (maximal) out.push_back(s);
        if (s == all) break;
      }
      break;
    }
  }
  return out;
}

std::vector<SetMask> enumerate_family(const VHMatroid& m, FamilyKind kind) {
  return enumerate_family(RankTable::from_vh(m), kind);
}

DPartitionReport check_d_partition(const std::vector<SetMask>& family,
                                   int ground, int d) {
  if (family.empty()) throw InputError("empty family is not a d-partition");
  if (d < 1 || d > ground) throw InputError("d must be in 1..ground");
  DPartitionReport rep;
  SetMask all = full_mask(ground);
  rep.trivial = family.size() == 1 && family.front() == all;
  for (SetMask member : family) {
    if ((member & ~all) != 0)
      throw InputError("family member leaves the ground set");
    if (set_size(member) < d) {
      rep.ok = false;
      rep.small_member = member;
      return rep;
    }
  }
  bool done = false;
  for_each_subset_of_size(ground, d, [&](SetMask s) {
    if (done) return;
    int covers = 0;
    for (SetMask member : family)
      if ((s & ~member) == 0) ++covers;
    if (covers != 1) {
      rep.ok = false;
      rep.bad_subset = s;
      rep.cover_count = covers;
      done = true;
    }
  });
  return rep;
}

PolymatroidReport check_polymatroid(const RankTable& t) {
  PolymatroidReport rep;
  const int g = t.ground();
  if (t.rank(0) != 0) {
    rep.ok = false;
    rep.axiom = "normalization";
    return rep;
  }
  SetMask all = full_mask(g);
  for (SetMask s = 0; s <= all; ++s) {
    for (int a = 0; a < g; ++a) {
      SetMask abit = SetMask{1} << a;
      if (s & abit) continue;
      if (t.rank(s | abit) < t.rank(s)) {
        rep.ok = false;
        rep.axiom = "monotonicity";
        rep.set = s;
        rep.a = a + 1;
        return rep;
      }
      for (int b = a + 1; b < g; ++b) {
        SetMask bbit = SetMask{1} << b;
        if (s & bbit) continue;
        if (t.rank(s | abit) + t.rank(s | bbit) <
            t.rank(s | abit | bbit) + t.rank(s)) {
          rep.ok = false;
          rep.axiom = "submodularity";
          rep.set = s;
          rep.a = a + 1;
          rep.b = b + 1;
          return rep;
        }
      }
    }
    if (s == all) break;
  }
  return rep;
}

RankIneq rank_ineq_from_name(const std::string& name) {
  if (name == "ingleton") return RankIneq::kIngleton;
  if (name == "dfz") return RankIneq::kDfz;
  throw InputError("unknown rank inequality: " + name);
}

const char* rank_ineq_name(RankIneq which) {
  switch (which) {
    case RankIneq::kIngleton: return "ingleton";
    case RankIneq::kDfz: return "dfz";
  }
  throw InternalError("unknown rank inequality value");
}

IneqResult linear_rank_ineq(const std::function<int(SetMask)>& r,
                            RankIneq which, const std::vector<SetMask>& sets) {
  IneqResult out;
  if (which == RankIneq::kIngleton) {
    if (sets.size() != 4)
      throw InputError("ingleton needs exactly 4 sets");
    SetMask A = sets[0], B = sets[1], C = sets[2], D = sets[3];
    out.lhs = r(A | B) + r(A | C | D) + r(C) + r(D) + r(B | C | D);
    out.rhs = r(A | C) + r(A | D) + r(B | C) + r(B | D) + r(C | D);
  } else {
    if (sets.size() != 6)
      throw InputError("dfz needs exactly 6 sets");
    SetMask A = sets[0], B = sets[1], C = sets[2], D = sets[3], E = sets[4],
            F = sets[5];
    out.lhs = r(A | D) + r(B | C) + r(C | E) + r(E | F) + r(B | D | F) +
              r(A | B | C | D) + r(A | B | C | E) + r(A | C | E | F) +
              r(A | D | E | F);
    out.rhs = r(A | B | C) + r(A | B | D) + r(A | C | E) + r(A | D | F) +
              r(A | E | F) + r(B | C | D) + r(B | C | E) + r(C | E | F) +
              r(D | E | F);
  }
  out.violated = out.lhs > out.rhs;
  return out;
}

namespace {

void check_sets_in_ground(const std::vector<SetMask>& sets, int ground) {
  for (SetMask s : sets)
    if ((s & ~full_mask(ground)) != 0)
      throw InputError("set leaves the ground set");
}

}  // namespace

IneqResult linear_rank_ineq(const VHMatroid& m, RankIneq which,
                            const std::vector<SetMask>& sets) {
  check_sets_in_ground(sets, m.ground);
  return linear_rank_ineq([&m](SetMask s) { return m.rank_of(s); }, which,
                          sets);
}

IneqResult linear_rank_ineq(const RankTable& t, RankIneq which,
                            const std::vector<SetMask>& sets) {
  check_sets_in_ground(sets, t.ground());
  return linear_rank_ineq([&t](SetMask s) { return t.rank(s); }, which, sets);
}

std::vector<ViolationWitness> violation_search(const VHMatroid& m,
                                               RankIneq which,
                                               bool full_subsets) {
  const int vars = which == RankIneq::kIngleton ? 4 : 6;
  const int n = m.graph.n;
  auto rank_fn = [&m](SetMask s) { return m.rank_of(s); };
  std::vector<ViolationWitness> out;

  if (!full_subsets) {
    // Each variable is one paired doubleton {i, i'}; indices pairwise
    // distinct, tuples in lexicographic order.
    std::vector<SetMask> sets(vars);
    std::function<void(int, SetMask)> rec = [&](int pos, SetMask used) {
      if (pos == vars) {
        IneqResult res = linear_rank_ineq(rank_fn, which, sets);
        if (res.violated) out.push_back({sets, res.lhs, res.rhs});
        return;
      }
      for (int i = 0; i < n; ++i) {
        SetMask bit = SetMask{1} << i;
        if (used & bit) continue;
        sets[pos] = bit | (bit << n);
        rec(pos + 1, used | bit);
      }
    };
    rec(0, 0);
    return out;
  }

  // Full mode: every variable runs over all unions of doubletons.
  double combos = 1.0;
  for (int v = 0; v < vars; ++v) combos *= std::ldexp(1.0, n);
  if (combos > std::ldexp(1.0, 24))
    throw InputError("full subset search too large (over 2^24 evaluations)");
  std::vector<SetMask> doubled(size_t{1} << n);
  for (SetMask s = 0; s < doubled.size(); ++s) doubled[s] = s | (s << n);
  std::vector<SetMask> sets(vars);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == vars) {
      IneqResult res = linear_rank_ineq(rank_fn, which, sets);
      if (res.violated) out.push_back({sets, res.lhs, res.rhs});
      return;
    }
    for (SetMask s = 0; s < doubled.size(); ++s) {
      sets[pos] = doubled[s];
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<int> minor_ground_labels(int ground, SetMask removed) {
  std::vector<int> labels;
  for (int i = 0; i < ground; ++i)
    if (!(removed & (SetMask{1} << i))) labels.push_back(i + 1);
  return labels;
}

RankTable minor_table(const RankTable& base, SetMask deleted,
                      SetMask contracted) {
  SetMask all = full_mask(base.ground());
  if ((deleted & contracted) != 0)
    throw InputError("deleted and contracted sets must be disjoint");
  if (((deleted | contracted) & ~all) != 0)
    throw InputError("set leaves the ground set");
  SetMask removed = deleted | contracted;
  std::vector<int> labels = minor_ground_labels(base.ground(), removed);
  const int g = static_cast<int>(labels.size());
  const int rc = base.rank(contracted);
  std::vector<std::uint8_t> t(size_t{1} << g);
  for (SetMask s = 0; s < t.size(); ++s) {
    SetMask orig = contracted;
    for (int i = 0; i < g; ++i)
      if (s & (SetMask{1} << i)) orig |= SetMask{1} << (labels[i] - 1);
    t[s] = static_cast<std::uint8_t>(base.rank(orig) - rc);
  }
  return RankTable(g, std::move(t));
}

namespace {

// Per-size multiset of rank values; equal for isomorphic matroids.
std::map<std::pair<int, int>, long> rank_histogram(const RankTable& t) {
  std::map<std::pair<int, int>, long> h;
  SetMask all = full_mask(t.ground());
  for (SetMask s = 0; s <= all; ++s) {
    ++h[{set_size(s), t.rank(s)}];
    if (s == all) break;
  }
  return h;
}

// Permutation-invariant per-element signature: for each subset size,
// the sum of ranks of the subsets containing the element.
std::vector<std::vector<long>> element_signatures(const RankTable& t) {
  const int g = t.ground();
  std::vector<std::vector<long>> sig(g, std::vector<long>(g + 1, 0));
  SetMask all = full_mask(g);
  for (SetMask s = 1; s <= all; ++s) {
    int k = set_size(s);
    int r = t.rank(s);
    SetMask rest = s;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      sig[i][k] += r;
    }
    if (s == all) break;
  }
  return sig;
}

struct IsoSearch {
  const RankTable& a;
  const RankTable& b;
  int g;
  std::vector<int> image;      // image[i] = mapped element of b, or -1
  std::vector<bool> used;      // elements of b already taken
  SetMask assigned = 0;        // domain elements mapped so far

  SetMask map_mask(SetMask s) const {
    SetMask out = 0;
    while (s) {
      int i = std::countr_zero(s);
      s &= s - 1;
      out |= SetMask{1} << image[i];
    }
    return out;
  }

  bool extend(int depth, const std::vector<std::vector<long>>& sig_a,
              const std::vector<std::vector<long>>& sig_b) {
    if (depth == g) return true;
    SetMask dbit = SetMask{1} << depth;
    for (int y = 0; y < g; ++y) {
      if (used[y] || sig_a[depth] != sig_b[y]) continue;
      image[depth] = y;
      // Every subset of the extended domain that contains the new element
      // must keep its rank under the partial map.
      bool consistent = true;
      SetMask prev = assigned;
      for (SetMask sub = prev;; sub = (sub - 1) & prev) {
        SetMask s = sub | dbit;
        if (a.rank(s) != b.rank(map_mask(s))) {
          consistent = false;
          break;
        }
        if (sub == 0) break;
      }
      if (consistent) {
        used[y] = true;
        assigned |= dbit;
        if (extend(depth + 1, sig_a, sig_b)) return true;
        assigned &= ~dbit;
        used[y] = false;
      }
      image[depth] = -1;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const RankTable& a, const RankTable& b,
                   std::vector<int>* perm) {
  if (a.ground() != b.ground() || a.full_rank() != b.full_rank()) return false;
  if (rank_histogram(a) != rank_histogram(b)) return false;
  auto sig_a = element_signatures(a);
  auto sig_b = element_signatures(b);
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  IsoSearch search{a, b, a.ground(),
                   std::vector<int>(a.ground(), -1),
                   std::vector<bool>(a.ground(), false)};
  if (!search.extend(0, sig_a, sig_b)) return false;
  if (perm) *perm = search.image;
  return true;
}

bool has_minor(const RankTable& m, const RankTable& target, SetMask* deleted,
               SetMask* contracted) {
  const int excess = m.ground() - target.ground();
  if (excess < 0) return false;
  bool found = false;
  for_each_subset_of_size(m.ground(), excess, [&](SetMask removed) {
    if (found) return;
    // Split the removed set into contracted/deleted parts in all ways.
    for (SetMask c = removed;; c = (c - 1) & removed) {
      RankTable candidate = minor_table(m, removed & ~c, c);
      if (candidate.full_rank() == target.full_rank() &&
          is_isomorphic(candidate, target)) {
        found = true;
        if (deleted) *deleted = removed & ~c;
        if (contracted) *contracted = c;
        return;
      }
      if (c == 0) break;
    }
  });
  return found;
}

std::function<int(SetMask)> diagonal_rank(const VHMatroid& m) {
  const int n = m.graph.n;
  return [m, n](SetMask s) {
    if ((s & ~full_mask(n)) != 0)
      throw InputError("set leaves the vertex set");
    return m.rank_of(s | (s << n));
  };
}

}  // namespace vamos
