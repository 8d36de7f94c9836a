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

#include "vamos/vamoslab.hpp"

#include <algorithm>

#include "vamos/symfun.hpp"

namespace vamos {

namespace {

// Monomial over 2n ground variables with exponent 1 on i and i' for every
// vertex i of `verts` (a mask over [n]).
Monomial doubled_monomial(int n, SetMask verts) {
  Monomial m(2 * n, 0);
  while (verts) {
    int i = std::countr_zero(verts);
    verts &= verts - 1;
    m[i] = 1;
    m[i + n] = 1;
  }
  return m;
}

// Sum over the r-subsets S of [n] selected by `keep` of the squared
// monomial prod_{i in S} x_i^2, in n variables.
ExactPoly squared_subset_sum(int n, int r,
                             const std::function<bool(SetMask)>& keep) {
  ExactPoly out(n);
  for_each_subset_of_size(n, r, [&](SetMask s) {
    if (!keep(s)) return;
    Monomial m(n, 0);
    SetMask rest = s;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      m[i] = 2;
    }
    out.add_term(m, Rational(1));
  });
  return out;
}

bool is_edge(const Hypergraph& h, SetMask s) {
  return std::binary_search(h.edges.begin(), h.edges.end(), s);
}

// 4 * sum_{j >= 0} e_{r+2j+1} e_{r-2j-1} in n variables, the doubled
// elementary symmetric polynomial minus its square part.
ExactPoly cross_term_sum(int n, int r) {
  ExactPoly out(n);
  for (int j = 0; r - 2 * j - 1 >= 0; ++j) {
    out = out + (elementary_symmetric(n, r + 2 * j + 1) *
                 elementary_symmetric(n, r - 2 * j - 1))
                    .scaled(Rational(4));
  }
  return out;
}

}  // namespace

ExactPoly bases_gen_poly(const VHMatroid& m) {
  const int n = m.graph.n;
  const int r = m.graph.d;
  // Closed form: e_{2r} over the 2n ground variables, minus one doubled
  // monomial per r-subset, plus back the doubled non-edges.
  ExactPoly h = elementary_symmetric(2 * n, 2 * r);
  ExactPoly er_products(2 * n);
  ExactPoly nonedge_sum(2 * n);
  for_each_subset_of_size(n, r, [&](SetMask s) {
    Monomial mono = doubled_monomial(n, s);
    er_products.add_term(mono, Rational(1));
    if (!is_edge(m.graph, s)) nonedge_sum.add_term(mono, Rational(1));
  });
  ExactPoly closed = h - er_products + nonedge_sum;

  if (m.ground <= 16) {
    ExactPoly enumerated(m.ground);
    for (SetMask b : enumerate_family(m, FamilyKind::kBases)) {
      Monomial mono(m.ground, 0);
      SetMask rest = b;
      while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        mono[i] = 1;
      }
      enumerated.add_term(mono, Rational(1));
    }
    if (!(closed == enumerated))
      throw InternalError(
          "closed-form bases polynomial disagrees with enumeration");
  }
  return closed;
}

WPair w_poly(const Hypergraph& h) {
  if (h.d < 2)
    throw InputError("stable form needs uniform edge size at least 2");
  const int n = h.n;
  const int r = h.d;
  ExactPoly nonedges =
      squared_subset_sum(n, r, [&](SetMask s) { return !is_edge(h, s); });
  WPair out;
  out.f = cross_term_sum(n, r) + nonedges;
  out.w = (elementary_symmetric(n, r + 1) * elementary_symmetric(n, r - 1))
              .scaled(Rational(4)) +
          nonedges.scaled(Rational(3) / Rational(r + 1));
  out.support_equal = out.f.support() == out.w.support();
  return out;
}

WitnessBundle whpp_witness(const Hypergraph& h, int trials,
                           std::uint64_t seed) {
  WitnessBundle bundle;
  bundle.matroid = build_vh(h);
  if (bundle.matroid.ground > 16)
    throw InputError("support comparison limited to 16 ground elements");
  WPair wp = w_poly(h);
  bundle.f_poly = wp.f;
  bundle.w_poly = wp.w;

  const int n = h.n;
  // Polarize with every variable capped at 2, then move block slot (i, j)
  // to the ground layout: first copies at 1..n, second copies at 1'..n'.
  ExactPoly polarized = polarize(wp.w, std::vector<int>(n, 2));
  std::vector<int> perm(2 * n);
  for (int i = 0; i < n; ++i) {
    perm[2 * i] = i;
    perm[2 * i + 1] = n + i;
  }
  bundle.witness_poly = polarized.permute_vars(perm);

  if (!bundle.witness_poly.is_multiaffine() ||
      !bundle.witness_poly.is_homogeneous() ||
      bundle.witness_poly.total_degree() != bundle.matroid.rank ||
      !bundle.witness_poly.has_positive_coefficients())
    throw InternalError("polarized witness lost its expected shape");

  std::vector<SetMask> support;
  for (const Monomial& mono : bundle.witness_poly.support()) {
    SetMask s = 0;
    for (int i = 0; i < 2 * n; ++i)
      if (mono[i] == 1) s |= SetMask{1} << i;
    support.push_back(s);
  }
  std::sort(support.begin(), support.end());
  bundle.support_match =
      support == enumerate_family(bundle.matroid, FamilyKind::kBases);

  bundle.probe = probe_stability(bundle.witness_poly, trials, seed);
  return bundle;
}

HppFalsification hpp_falsify_complete63() {
  std::vector<std::vector<int>> edges;
  for_each_subset_of_size(6, 3, [&](SetMask e) {
    edges.push_back(elements_of(e));
  });
  VHMatroid m = build_vh(make_hypergraph(6, 3, edges));
  ExactPoly h = bases_gen_poly(m);

  // x_1 = x_1' = t, x_2 = x_2' = x_3 = x_3' = -2, the rest 1.
  std::vector<Rational> x0(12, Rational(1)), v(12, Rational(0));
  x0[0] = 0;
  v[0] = 1;
  x0[6] = 0;
  v[6] = 1;
  x0[1] = x0[2] = x0[7] = x0[8] = Rational(-2);

  HppFalsification out;
  out.restriction = h.restrict_line(x0, v);
  if (out.restriction.degree() != 2)
    throw InternalError("falsifier restriction is not a quadratic");
  Rational a = out.restriction.coef()[2];
  Rational b = out.restriction.coef()[1];
  Rational c = out.restriction.coef()[0];
  out.discriminant = b * b - a * c * 4;
  out.non_real = sign_of(out.discriminant) < 0;
  bool sturm_real = real_roots_exact(out.restriction).real_rooted;
  if (out.non_real == sturm_real)
    throw InternalError("discriminant and Sturm count disagree");
  if (!out.non_real)
    throw InternalError("falsifier restriction is real-rooted");
  return out;
}

HnkResult build_hnk(int n, int k) {
  if (n < 1) throw InputError("n must be at least 1");
  if (k < 1 || k > n + 2) throw InputError("k must be in 1..n+2");
  const int verts = n + 2;
  if (verts > 32) throw InputError("vertex count must be in 1..32");
  SetMask specials = (SetMask{1} << n) | (SetMask{1} << (n + 1));
  std::vector<std::vector<int>> edges;
  for_each_subset_of_size(verts, k, [&](SetMask e) {
    if ((e & specials) != specials) edges.push_back(elements_of(e));
  });
  HnkResult out;
  out.hypergraph = make_hypergraph(verts, k, edges);
  // Diagonalized bases-generating polynomial: the doubled e_{2k} collapses
  // to the cross terms, and only the k-sets containing both specials
  // survive in N.
  ExactPoly nonedges = squared_subset_sum(verts, k, [&](SetMask s) {
    return (s & specials) == specials;
  });
  out.h = cross_term_sum(verts, k) + nonedges;
  return out;
}

KummerReport kummer_check(int trials, std::uint64_t seed, int samples) {
  if (samples < 0) throw InputError("sample count must be nonnegative");
  KummerReport rep;
  rep.seed = seed;
  rep.samples = samples;

  ExactPoly linear(4), quad(4);
  linear.add_term({1, 0, 0, 0}, Rational(2));
  linear.add_term({0, 1, 0, 0}, Rational(3));
  linear.add_term({0, 0, 1, 0}, Rational(3));
  linear.add_term({0, 0, 0, 1}, Rational(4));
  quad.add_term({1, 1, 0, 0}, Rational(1));
  quad.add_term({1, 0, 1, 0}, Rational(1));
  quad.add_term({1, 0, 0, 1}, Rational(2));
  quad.add_term({0, 1, 0, 1}, Rational(1));
  quad.add_term({0, 0, 1, 1}, Rational(1));
  ExactPoly q = (linear * quad).scaled(Rational(32));

  ExactPoly h22 = build_hnk(2, 2).h;
  ExactPoly product = q * h22;
  std::vector<Rational> ones(4, Rational(1));

  rep.q_at_ones = q.evaluate(ones);
  rep.product_degree = product.total_degree();
  rep.q_probe = probe_hyperbolicity(q, ones, trials, seed);
  rep.product_probe = probe_hyperbolicity(product, ones, trials, seed);

  // Cone inclusion: shift random points into the interior of the h_{2,2}
  // cone along the direction, then ask where they sit for q.
  RandomStream rng(seed);
  for (int i = 0; i < samples; ++i) {
    std::vector<Rational> x(4);
    for (auto& xi : x) xi = rng.uniform_rational(-10, 10);
    Spectrum spec = eigenvalues(h22, ones, x);
    Rational margin = rng.uniform_rational(1, 16) / 8;
    Rational shift = margin - spec.lambda_min().lower();
    for (size_t j = 0; j < 4; ++j) x[j] += shift;
    if (cone_member(h22, ones, x) != ConeMembership::kInterior)
      throw InternalError("shifted sample failed to reach the cone interior");
    if (cone_member(q, ones, x) == ConeMembership::kOutside) {
      ++rep.inclusion_failures;
      if (!rep.failure_point) rep.failure_point = x;
    }
  }
  return rep;
}

IneqResult counterex_ranks(int n, int k, const std::vector<int>& z, int x,
                           int y) {
  if (k < 2) throw InputError("k must be at least 2");
  if (n < k + 1) throw InputError("n must be at least k+1");
  if (static_cast<int>(z.size()) != k - 2)
    throw InputError("Z must have exactly k-2 elements");
  SetMask zmask = mask_from_elements(z, n);  // also validates range
  if (x < 1 || x > n || y < 1 || y > n || x == y)
    throw InputError("x and y must be distinct elements of [n]");
  SetMask xbit = SetMask{1} << (x - 1);
  SetMask ybit = SetMask{1} << (y - 1);
  if ((zmask & (xbit | ybit)) != 0)
    throw InputError("Z must be disjoint from {x, y}");

  VHMatroid m = build_vh(build_hnk(n, k).hypergraph);
  auto r0 = diagonal_rank(m);
  std::vector<SetMask> sets = {
      zmask | (SetMask{1} << n),        // A = Z + {n+1}
      zmask | (SetMask{1} << (n + 1)),  // B = Z + {n+2}
      zmask | xbit,                     // C = Z + {x}
      zmask | ybit,                     // D = Z + {y}
  };
  return linear_rank_ineq(r0, RankIneq::kIngleton, sets);
}

}  // namespace vamos
