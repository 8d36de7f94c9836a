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
// Real-stability and hyperbolicity checks for exact polynomials: randomized
// line-restriction probes, exact eigenvalue extraction along a direction,
// hyperbolic rank, cone membership, polarization, and the basis-exchange
// test on a multiaffine support.

#ifndef VAMOS_STABILITY_HPP
#define VAMOS_STABILITY_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "vamos/exactpoly.hpp"
#include "vamos/setfamily.hpp"
#include "vamos/univariate.hpp"

namespace vamos {

/// One failed line restriction found by a randomized probe.
struct ProbeWitness {
  std::vector<Rational> x0;  ///< base point of the restriction line
  std::vector<Rational> v;   ///< direction of the restriction line
  /// True when the restriction t -> P(x0 + t v) lost degree (or vanished),
  /// which a homogeneous polynomial positive on the sampled directions
  /// cannot do.  In that case `root` is meaningless.
  bool degenerate = false;
  std::complex<double> root{0.0, 0.0};  ///< offending non-real root (approx)
  double imag_excess = 0.0;             ///< |Im root| / (1 + |root|)
};

/// Result of a randomized stability or hyperbolicity probe.
/// Invariant: failures == 0 exactly when worst_witness is absent.
struct ProbeReport {
  int trials = 0;
  int failures = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::optional<ProbeWitness> worst_witness;
};

/// Probes real stability of a nonzero homogeneous polynomial by restricting
/// to random lines x0 + t v with v drawn from [1,10]^n and x0 from
/// [-10,10]^n (rational samples, deterministic in `seed`).  A trial fails
/// when the restriction drops degree or has a non-real root.  Restrictions
/// of degree at most 12 are decided exactly by Sturm sequences; larger ones
/// numerically, calling a root non-real when |Im z| > tol * (1 + |z|).
/// Throws InputError when P is zero or inhomogeneous.
ProbeReport probe_stability(const ExactPoly& P, int trials = 256,
                            std::uint64_t seed = 0xC0FFEE, double tol = 1e-9);

/// Probes hyperbolicity of P in the fixed direction e: random base points
/// x0 from [-10,10]^n, direction always e.  Requires P(e) != 0 (InputError
/// otherwise), so the restriction never drops degree; a trial fails exactly
/// when a non-real root shows up.  Same exact/numeric split as
/// probe_stability.
ProbeReport probe_hyperbolicity(const ExactPoly& P,
                                const std::vector<Rational>& e,
                                int trials = 256,
                                std::uint64_t seed = 0xC0FFEE,
                                double tol = 1e-9);

/// Eigenvalues of x in direction e: the roots of t -> h(t e - x), all real
/// when h is hyperbolic.  Roots are stored in descending order with
/// multiplicities, so lambda_max comes first and lambda_min last.
struct Spectrum {
  UnivariateExact restriction;      ///< t -> h(t e - x), exact
  std::vector<RootInfo> roots;      ///< descending; see RootInfo::multiplicity
  int degree = 0;                   ///< degree of the restriction

  /// Total number of eigenvalues counted with multiplicity.
  int count_with_multiplicity() const;
  const RootInfo& lambda_max() const { return roots.front(); }
  const RootInfo& lambda_min() const { return roots.back(); }
};

/// Computes the spectrum of x in direction e exactly.  Throws InputError
/// when h(e) == 0 ("not hyperbolic direction") and NumericError when the
/// restriction has a non-real root ("h not hyperbolic w.r.t. e at x").
Spectrum eigenvalues(const ExactPoly& h, const std::vector<Rational>& e,
                     const std::vector<Rational>& x);

/// Rank of x relative to (h, e): the degree in t of h(e + t x), computed
/// exactly.  rank(0) == 0, and rank equals the number of nonzero
/// eigenvalues for hyperbolic h.  Requires h(e) != 0.
int hyp_rank(const ExactPoly& h, const std::vector<Rational>& e,
             const std::vector<Rational>& x);

enum class ConeMembership { kInterior, kBoundary, kOutside };

const char* cone_membership_name(ConeMembership m);

/// Places x relative to the closed hyperbolicity cone of h in direction e:
/// Outside when some eigenvalue is negative, Boundary when none are
/// negative but 0 is an eigenvalue, Interior otherwise.  Signs are decided
/// exactly (Sturm sign counts plus a divisibility test at 0); `tol` is
/// accepted for interface symmetry with the numeric probes but unused on
/// the exact path.  Same preconditions as eigenvalues().
ConeMembership cone_member(const ExactPoly& h, const std::vector<Rational>& e,
                           const std::vector<Rational>& x, double tol = 1e-9);

/// Polarization: replaces x_i^k by e_k(y_{i,1},...,y_{i,d_i}) / C(d_i, k),
/// producing a multiaffine polynomial in sum(d_i) variables.  Output blocks
/// are laid out consecutively: y_{1,1..d_1}, then y_{2,1..d_2}, and so on.
/// Requires degrees.size() == arity, every d_i >= 1, and d_i at least the
/// degree of P in x_i (InputError otherwise).  Restricting each block to a
/// single repeated value recovers P.
ExactPoly polarize(const ExactPoly& P, const std::vector<int>& degrees);

/// Outcome of support_matroid_check.
struct SupportCheck {
  bool ok = false;
  int ground = 0;                 ///< number of variables of P
  std::vector<SetMask> bases;     ///< supports of the monomials of P
  ExchangeCheck exchange;         ///< witness filled in when !ok
};

/// Tests whether the support of a nonzero multiaffine homogeneous
/// polynomial with positive coefficients satisfies the basis-exchange
/// axiom, i.e. forms the bases of a matroid.  Throws InputError when P
/// violates one of those hypotheses; returns the support family plus an
/// exchange witness (B1, B2, element of B1 \ B2) when the axiom fails.
SupportCheck support_matroid_check(const ExactPoly& P);

}  // namespace vamos

#endif  // VAMOS_STABILITY_HPP
