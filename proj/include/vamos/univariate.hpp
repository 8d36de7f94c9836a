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

#ifndef VAMOS_UNIVARIATE_HPP
#define VAMOS_UNIVARIATE_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "vamos/rational.hpp"

namespace vamos {

/// Dense univariate polynomial with exact rational coefficients.
/// coef[k] multiplies t^k; the vector never carries trailing zeros, and the
/// zero polynomial is the empty vector (degree() == -1).
class UnivariateExact {
 public:
  UnivariateExact() = default;
  explicit UnivariateExact(std::vector<Rational> coef) : coef_(std::move(coef)) {
    normalize();
  }

  static UnivariateExact constant(const Rational& c) {
    return UnivariateExact(std::vector<Rational>{c});
  }

  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  bool is_zero() const { return coef_.empty(); }
  const std::vector<Rational>& coef() const { return coef_; }
  const Rational& operator[](std::size_t k) const { return coef_[k]; }
  const Rational& leading() const;

  Rational eval(const Rational& t) const;
  double eval_double(double t) const;
  std::complex<double> eval_complex(std::complex<double> t) const;

  UnivariateExact derivative() const;

  UnivariateExact operator+(const UnivariateExact& o) const;
  UnivariateExact operator-(const UnivariateExact& o) const;
  UnivariateExact operator*(const UnivariateExact& o) const;
  UnivariateExact operator-() const;
  UnivariateExact scaled(const Rational& c) const;
  bool operator==(const UnivariateExact& o) const { return coef_ == o.coef_; }
  bool operator!=(const UnivariateExact& o) const { return !(*this == o); }

  /// Substitutes t -> t + shift (exact Taylor shift).
  UnivariateExact shifted(const Rational& shift) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coef_;
};

/// Exact division with remainder: a = q*b + r, deg r < deg b. b must be
/// nonzero.
std::pair<UnivariateExact, UnivariateExact> poly_divrem(
    const UnivariateExact& a, const UnivariateExact& b);

/// Rescales by a positive rational so all coefficients are coprime integers.
/// Sign of the polynomial is preserved. Zero maps to zero.
UnivariateExact primitive_integer_scale(const UnivariateExact& p);

/// Greatest common divisor, returned primitive with positive leading
/// coefficient (or zero if both inputs are zero).
UnivariateExact poly_gcd(UnivariateExact a, UnivariateExact b);

/// f / gcd(f, f'): same distinct roots, all simple. f must be nonzero.
UnivariateExact square_free_part(const UnivariateExact& f);

/// Yun decomposition f = lc * prod_i factor_i^{mult_i} with the factors
/// squarefree, pairwise coprime, primitive-integer and of positive degree.
std::vector<std::pair<UnivariateExact, int>> square_free_decomposition(
    const UnivariateExact& f);

/// Summary of the real-root structure of a nonzero polynomial.
struct RealRootSummary {
  int distinct_real = 0;  // distinct real roots of f
  bool real_rooted = false;  // every complex root of f is real
};

/// Exact real-root count via Sturm sequences on the squarefree part.
RealRootSummary real_roots_exact(const UnivariateExact& f);

/// One real root, either known exactly or pinned to an isolating interval
/// (lo, hi) on which `factor` changes sign. `factor` is the squarefree
/// factor of the original polynomial owning this root.
struct RootInfo {
  UnivariateExact factor;
  Rational lo, hi;    // meaningful when !exact
  bool exact = false;
  Rational value;     // meaningful when exact
  int multiplicity = 1;
  double approx = 0.0;

  Rational lower() const { return exact ? value : lo; }
  Rational upper() const { return exact ? value : hi; }
};

/// Bisects the isolating interval until hi - lo <= width (no-op when exact;
/// may discover the root is rational and flip to exact).
void refine_root(RootInfo& r, const Rational& width);

/// Three-way compare of a real root against a rational point (exact).
int compare_root_to(const RootInfo& r, const Rational& c);

/// All real roots of f with multiplicities, sorted ascending, intervals
/// pairwise disjoint. f must be nonzero.
std::vector<RootInfo> isolate_real_roots(const UnivariateExact& f);

/// Number of real roots of f that are < 0 / == 0 / > 0, multiplicities NOT
/// counted (distinct roots). Exact.
struct RootSigns {
  int negative = 0;
  bool zero = false;
  int positive = 0;
};
RootSigns real_root_signs(const UnivariateExact& f);

/// All complex roots by companion-matrix eigenvalues (double precision),
/// sorted by (re, im). Degree must be >= 1.
std::vector<std::complex<double>> complex_roots_numeric(
    const UnivariateExact& f);

/// 1 + max |a_i / a_d|: every root has absolute value below this.
Rational cauchy_root_bound(const UnivariateExact& f);

}  // namespace vamos

#endif  // VAMOS_UNIVARIATE_HPP
