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

#ifndef VAMOS_EXACTPOLY_HPP
#define VAMOS_EXACTPOLY_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "vamos/rational.hpp"
#include "vamos/univariate.hpp"

namespace vamos {

/// Exponent vector; entry k is the exponent of variable x_{k+1}.
using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// Graded lexicographic order: higher total degree sorts later; ties are
/// broken lexicographically with earlier variables weighted heavier, so
/// x1^2 > x1*x2 > x2^2 within a degree block.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return a < b;  // lexicographic on exponent vectors
  }
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed number of variables. Canonical form: no zero coefficients, every
/// exponent vector has length arity(). Variables are 0-indexed internally
/// and rendered 1-based (x1, x2, ...) in text and JSON.
class ExactPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit ExactPoly(int arity = 0);

  static ExactPoly constant(int arity, const Rational& c);
  static ExactPoly one(int arity) { return constant(arity, Rational(1)); }
  static ExactPoly variable(int arity, int index);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Every exponent is 0 or 1.
  bool is_multiaffine() const;
  bool has_positive_coefficients() const;

  /// Adds c * x^m into the polynomial (merging, dropping zeros).
  void add_term(const Monomial& m, const Rational& c);
  /// Coefficient of x^m (zero when absent).
  Rational coefficient(const Monomial& m) const;
  /// Largest monomial in graded-lex order. Polynomial must be nonzero.
  std::pair<Monomial, Rational> leading_term() const;

  ExactPoly operator+(const ExactPoly& o) const;
  ExactPoly operator-(const ExactPoly& o) const;
  ExactPoly operator*(const ExactPoly& o) const;
  ExactPoly operator-() const;
  ExactPoly scaled(const Rational& c) const;
  ExactPoly pow(int k) const;
  bool operator==(const ExactPoly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const ExactPoly& o) const { return !(*this == o); }

  Rational evaluate(const std::vector<Rational>& x) const;
  double evaluate_double(const std::vector<double>& x) const;
  std::complex<double> evaluate_complex(
      const std::vector<std::complex<double>>& x) const;

  /// Exact univariate restriction t -> P(x0 + t*v).
  UnivariateExact restrict_line(const std::vector<Rational>& x0,
                                const std::vector<Rational>& v) const;

  /// Simultaneous substitution x_i -> assignment[i]; all assignment
  /// polynomials must share one arity, which becomes the result's arity.
  ExactPoly substitute(const std::vector<ExactPoly>& assignment) const;

  /// Relabels variables: exponent of old variable i moves to perm[i].
  /// perm must be a permutation of {0, ..., arity-1}.
  ExactPoly permute_vars(const std::vector<int>& perm) const;

  /// Monomials present, leading term first (descending graded-lex).
  std::vector<Monomial> support() const;

  /// Invariant under every permutation of the variables (checked via
  /// adjacent transpositions).
  bool is_symmetric() const;

  /// Treats a 1-variable polynomial as univariate.
  UnivariateExact to_univariate() const;
  static ExactPoly from_univariate(const UnivariateExact& f);

  std::string to_string() const;

 private:
  void check_monomial(const Monomial& m) const;
  int arity_;
  TermMap terms_;
};

}  // namespace vamos

#endif  // VAMOS_EXACTPOLY_HPP
