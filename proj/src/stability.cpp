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

#include "vamos/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

namespace vamos {

namespace {

// Restrictions up to this degree are decided by exact Sturm sequences;
// larger ones fall back to companion-matrix eigenvalues.
constexpr int kExactDegreeLimit = 12;

std::string format_complex(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

double imag_excess_of(std::complex<double> z) {
  return std::abs(z.imag()) / (1.0 + std::abs(z));
}

// Most non-real complex root of f, as (root, |Im|/(1+|z|)). Returns excess 0
// when the numeric solver cannot produce one.
std::pair<std::complex<double>, double> worst_nonreal_root(
    const UnivariateExact& f) {
  std::complex<double> worst{0.0, 0.0};
  double excess = 0.0;
  try {
    for (const auto& z : complex_roots_numeric(f)) {
      double e = imag_excess_of(z);
      if (e > excess) {
        excess = e;
        worst = z;
      }
    }
  } catch (const NumericError&) {
    // Leave the witness root empty; the exact check already decided failure.
  }
  return {worst, excess};
}

ProbeReport run_line_probe(const ExactPoly& P, const std::vector<Rational>* e,
                           int trials, std::uint64_t seed, double tol) {
  if (trials < 1) throw InputError("probe needs at least one trial");
  const int n = P.arity();
  const int d = P.total_degree();
  RandomStream rng(seed);
  ProbeReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.tol = tol;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rational> x0(n), v(n);
    for (int i = 0; i < n; ++i) x0[i] = rng.uniform_rational(-10, 10);
    if (e) {
      v = *e;
    } else {
      for (int i = 0; i < n; ++i) v[i] = rng.uniform_rational(1, 10);
    }
    UnivariateExact f = P.restrict_line(x0, v);
    bool fail = false;
    ProbeWitness w;
    if (f.is_zero() || f.degree() < d) {
      if (e) throw InternalError("restriction degree dropped despite P(e) != 0");
      fail = true;
      w.degenerate = true;
      w.imag_excess = std::numeric_limits<double>::infinity();
    } else if (d <= kExactDegreeLimit) {
      if (!real_roots_exact(f).real_rooted) {
        fail = true;
        auto [root, excess] = worst_nonreal_root(f);
        w.root = root;
        w.imag_excess = excess;
      }
    } else {
      auto [root, excess] = worst_nonreal_root(f);
      if (excess > tol) {
        fail = true;
        w.root = root;
        w.imag_excess = excess;
      }
    }
    if (fail) {
      ++rep.failures;
      if (!rep.worst_witness ||
          w.imag_excess > rep.worst_witness->imag_excess) {
        w.x0 = std::move(x0);
        w.v = std::move(v);
        rep.worst_witness = std::move(w);
      }
    }
  }
  return rep;
}

void check_point_arity(const ExactPoly& h, const std::vector<Rational>& e,
                       const std::vector<Rational>& x) {
  if (static_cast<int>(e.size()) != h.arity() ||
      static_cast<int>(x.size()) != h.arity())
    throw InputError("point arity must match polynomial arity");
}

// t -> h(t e - x), with the direction check h(e) != 0.
UnivariateExact spectral_restriction(const ExactPoly& h,
                                     const std::vector<Rational>& e,
                                     const std::vector<Rational>& x) {
  check_point_arity(h, e, x);
  if (h.evaluate(e) == 0) throw InputError("not hyperbolic direction for h");
  std::vector<Rational> minus_x(x.size());
  for (size_t i = 0; i < x.size(); ++i) minus_x[i] = -x[i];
  UnivariateExact f = h.restrict_line(minus_x, e);
  if (f.is_zero()) throw InternalError("spectral restriction vanished");
  return f;
}

void require_real_rooted(const UnivariateExact& f) {
  if (real_roots_exact(f).real_rooted) return;
  std::ostringstream msg;
  msg << "h not hyperbolic w.r.t. e at x";
  auto [root, excess] = worst_nonreal_root(f);
  if (excess > 0.0)
    msg << " (restriction has non-real root near " << format_complex(root)
        << ")";
  throw NumericError(msg.str());
}

// e_k over the `block` consecutive variables starting at `offset`, inside an
// ambient ring of `total` variables.
ExactPoly block_elementary(int total, int offset, int block, int k) {
  ExactPoly out(total);
  for_each_subset_of_size(block, k, [&](SetMask s) {
    Monomial m(total, 0);
    for (int b : elements_of(s)) m[offset + b - 1] = 1;
    out.add_term(m, Rational(1));
  });
  return out;
}

Rational inverse_binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(1) / Rational(b);
}

}  // namespace

ProbeReport probe_stability(const ExactPoly& P, int trials, std::uint64_t seed,
                            double tol) {
  if (P.is_zero()) throw InputError("stability probe needs a nonzero polynomial");
  if (!P.is_homogeneous())
    throw InputError("stability probe needs a homogeneous polynomial");
  return run_line_probe(P, nullptr, trials, seed, tol);
}

ProbeReport probe_hyperbolicity(const ExactPoly& P,
                                const std::vector<Rational>& e, int trials,
                                std::uint64_t seed, double tol) {
  if (P.is_zero())
    throw InputError("hyperbolicity probe needs a nonzero polynomial");
  if (!P.is_homogeneous())
    throw InputError("hyperbolicity probe needs a homogeneous polynomial");
  if (static_cast<int>(e.size()) != P.arity())
    throw InputError("point arity must match polynomial arity");
  if (P.evaluate(e) == 0) throw InputError("not hyperbolic direction for h");
  return run_line_probe(P, &e, trials, seed, tol);
}

int Spectrum::count_with_multiplicity() const {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

Spectrum eigenvalues(const ExactPoly& h, const std::vector<Rational>& e,
                     const std::vector<Rational>& x) {
  Spectrum out;
  out.restriction = spectral_restriction(h, e, x);
  require_real_rooted(out.restriction);
  out.degree = out.restriction.degree();
  out.roots = isolate_real_roots(out.restriction);
  std::reverse(out.roots.begin(), out.roots.end());  // lambda_max first
  return out;
}

int hyp_rank(const ExactPoly& h, const std::vector<Rational>& e,
             const std::vector<Rational>& x) {
  check_point_arity(h, e, x);
  if (h.evaluate(e) == 0) throw InputError("not hyperbolic direction for h");
  // h(e + t x) has nonzero constant term h(e), so the degree is well defined.
  return h.restrict_line(e, x).degree();
}

const char* cone_membership_name(ConeMembership m) {
  switch (m) {
    case ConeMembership::kInterior: return "interior";
    case ConeMembership::kBoundary: return "boundary";
    case ConeMembership::kOutside: return "outside";
  }
  throw InternalError("unknown cone membership value");
}

ConeMembership cone_member(const ExactPoly& h, const std::vector<Rational>& e,
                           const std::vector<Rational>& x, double tol) {
  (void)tol;  // membership of rational points is decided exactly
  UnivariateExact f = spectral_restriction(h, e, x);
  require_real_rooted(f);
  RootSigns signs = real_root_signs(f);
  if (signs.negative > 0) return ConeMembership::kOutside;
  if (signs.zero) return ConeMembership::kBoundary;
  return ConeMembership::kInterior;
}

ExactPoly polarize(const ExactPoly& P, const std::vector<int>& degrees) {
  const int n = P.arity();
  if (static_cast<int>(degrees.size()) != n)
    throw InputError("polarization needs one degree cap per variable");
  std::vector<int> vardeg(n, 0);
  for (const Monomial& m : P.support())
    for (int i = 0; i < n; ++i) vardeg[i] = std::max(vardeg[i], m[i]);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    if (degrees[i] < 1)
      throw InputError("polarization degree caps must be at least 1");
    if (vardeg[i] > degrees[i])
      throw InputError("degree cap below the actual degree of a variable");
    total += degrees[i];
  }
  std::vector<int> offset(n, 0);
  for (int i = 1; i < n; ++i) offset[i] = offset[i - 1] + degrees[i - 1];

  ExactPoly out(total);
  for (const Monomial& m : P.support()) {
    ExactPoly term = ExactPoly::constant(total, P.coefficient(m));
    for (int i = 0; i < n; ++i) {
      int k = m[i];
      if (k == 0) continue;
      term = term * block_elementary(total, offset[i], degrees[i], k)
                        .scaled(inverse_binomial(degrees[i], k));
    }
    out = out + term;
  }
  return out;
}

SupportCheck support_matroid_check(const ExactPoly& P) {
  if (P.is_zero())
    throw InputError("support check needs a nonzero polynomial");
  if (P.arity() > 64)
    throw InputError("support check handles at most 64 variables");
  if (!P.is_multiaffine())
    throw InputError("support check needs a multiaffine polynomial");
  if (!P.is_homogeneous())
    throw InputError("support check needs a homogeneous polynomial");
  if (!P.has_positive_coefficients())
    throw InputError("support check needs positive coefficients");
  SupportCheck out;
  out.ground = P.arity();
  for (const Monomial& m : P.support()) {
    SetMask s = 0;
    for (int i = 0; i < out.ground; ++i)
      if (m[i] == 1) s |= SetMask{1} << i;
    out.bases.push_back(s);
  }
  out.exchange = basis_exchange_check(out.bases);
  out.ok = out.exchange.ok;
  return out;
}

}  // namespace vamos
