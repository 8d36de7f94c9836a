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
// The headline pipelines around V_H: bases-generating polynomials and
// their closed forms, the diagonalized stable form and its weighted
// companion, the polarized weak-half-plane-property witness, the
// half-plane-property falsifier for the complete 3-uniform hypergraph,
// the H_{n,k} family, the Kummer-surface factorization checks, and the
// Ingleton rank arithmetic behind the high-rank counterexamples.

#ifndef VAMOS_VAMOSLAB_HPP
#define VAMOS_VAMOSLAB_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "vamos/exactpoly.hpp"
#include "vamos/matroid.hpp"
#include "vamos/stability.hpp"
#include "vamos/univariate.hpp"

namespace vamos {

/// Bases-generating polynomial of V_H over the 2n ground variables,
/// computed by the closed form
///   e_{2r}(x_1, x_1', ..., x_n, x_n') - e_r(x_1 x_1', ..., x_n x_n') + N(x)
/// with N running over the doubled non-edges, r = d.  For ground sets of at
/// most 16 elements the result is cross-checked against direct enumeration
/// of the bases; a mismatch throws InternalError.
ExactPoly bases_gen_poly(const VHMatroid& m);

/// The diagonalized stable form f (x_i' identified with x_i) and the
/// weighted form W, both in n variables:
///   f = 4 * sum_j e_{r+2j+1} e_{r-2j-1} + N(x, x)
///   W = 4 e_{r+1} e_{r-1} + (3/(r+1)) N(x, x).
/// support_equal records whether they have identical supports.
struct WPair {
  ExactPoly f;
  ExactPoly w;
  bool support_equal = false;
};

/// Requires d >= 2 (InputError otherwise).
WPair w_poly(const Hypergraph& h);

/// Certificate payload for the weak half-plane property of V_H: the
/// polarization of W with every variable capped at degree 2, relabeled to
/// the ground layout [x_1..x_n, x_1'..x_n'].
struct WitnessBundle {
  VHMatroid matroid;
  ExactPoly f_poly;        ///< in n variables
  ExactPoly w_poly;        ///< in n variables
  ExactPoly witness_poly;  ///< in 2n variables, ground layout
  bool support_match = false;  ///< support(witness_poly) == bases of V_H
  ProbeReport probe;
};

/// Runs the full pipeline w_poly -> polarize -> support comparison ->
/// stability probe.  Requires d >= 2 and 2n <= 16 (the support comparison
/// enumerates the bases).
WitnessBundle whpp_witness(const Hypergraph& h, int trials = 256,
                           std::uint64_t seed = 0xC0FFEE);

/// Restriction of a bases-generating polynomial to the line
/// x_1 = x_1' = t, x_2 = x_2' = x_3 = x_3' = -2, all other variables 1.
/// For the complete 3-uniform hypergraph on [6] the result is a quadratic
/// with negative discriminant, refuting the (strong) half-plane property.
struct HppFalsification {
  UnivariateExact restriction;  ///< exact quadratic in t
  Rational discriminant;
  bool non_real = false;  ///< restriction has non-real roots (certified)
};

/// Fixed instance: the complete 3-uniform hypergraph on [6].  non_real is
/// certified both by the discriminant sign and by Sturm counting; any
/// disagreement or a real-rooted outcome throws InternalError.
HppFalsification hpp_falsify_complete63();

/// The k-uniform hypergraph H_{n,k} on [n+2] containing every k-subset
/// except those with both special vertices n+1 and n+2, together with the
/// diagonalized bases-generating polynomial of V_{H_{n,k}} in n+2
/// variables (homogeneous of degree 2k).
struct HnkResult {
  Hypergraph hypergraph;
  ExactPoly h;
};

/// Requires n >= 1, 1 <= k <= n+2, n+2 <= 32.
HnkResult build_hnk(int n, int k);

/// Checks around the quartic h_{2,2} and Kummer-surface factor q:
///   q = 32 (2x_1 + 3x_2 + 3x_3 + 4x_4)
///          (x_1x_2 + x_1x_3 + 2x_1x_4 + x_2x_4 + x_3x_4).
/// Probes hyperbolicity of q and of q * h_{2,2} in direction (1,1,1,1),
/// and samples the cone inclusion: interior points of the h_{2,2} cone
/// must not sit outside the cone of q.
struct KummerReport {
  Rational q_at_ones;            ///< 2304
  int product_degree = 0;        ///< deg(q * h_{2,2}) = 7
  ProbeReport q_probe;
  ProbeReport product_probe;
  int samples = 0;
  int inclusion_failures = 0;
  std::optional<std::vector<Rational>> failure_point;
  std::uint64_t seed = 0;
};

KummerReport kummer_check(int trials = 256, std::uint64_t seed = 0xC0FFEE,
                          int samples = 1000);

/// Ingleton sides for the diagonal polymatroid of V_{H_{n,k}} evaluated at
///   A = Z + {n+1},  B = Z + {n+2},  C = Z + {x},  D = Z + {y}
/// with Z a (k-2)-subset of [n] and x, y in [n], all pairwise disjoint.
/// Returns (10k-4, 10k-5), violated = true.  Requires k >= 2 and
/// n >= k+1; malformed shapes throw InputError.
IneqResult counterex_ranks(int n, int k, const std::vector<int>& z, int x,
                           int y);

}  // namespace vamos

#endif  // VAMOS_VAMOSLAB_HPP
