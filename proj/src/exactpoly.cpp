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

#include "vamos/exactpoly.hpp"

#include <algorithm>
#include <sstream>

namespace vamos {

ExactPoly::ExactPoly(int arity) : arity_(arity) {
  if (arity < 0) throw InputError("negative arity");
}

ExactPoly ExactPoly::constant(int arity, const Rational& c) {
  ExactPoly p(arity);
  if (c != 0) p.terms_.emplace(Monomial(arity, 0), c);
  return p;
}

ExactPoly ExactPoly::variable(int arity, int index) {
  if (index < 0 || index >= arity)
    throw InputError("variable index out of range");
  ExactPoly p(arity);
  Monomial m(arity, 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

void ExactPoly::check_monomial(const Monomial& m) const {
  if (static_cast<int>(m.size()) != arity_)
    throw InputError("exponent vector length does not match arity");
  for (int e : m)
    if (e < 0) throw InputError("negative exponent");
}

int ExactPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

bool ExactPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = monomial_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) != d) return false;
  return true;
}

bool ExactPoly::is_multiaffine() const {
  for (const auto& [m, c] : terms_)
    for (int e : m)
      if (e > 1) return false;
  return true;
}

bool ExactPoly::has_positive_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (sign_of(c) <= 0) return false;
  return true;
}

void ExactPoly::add_term(const Monomial& m, const Rational& c) {
  check_monomial(m);
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ExactPoly::coefficient(const Monomial& m) const {
  check_monomial(m);
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> ExactPoly::leading_term() const {
  if (terms_.empty()) throw InputError("leading term of zero polynomial");
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
  if (arity_ != o.arity_) throw InputError("arity mismatch in +");
  ExactPoly out(*this);
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
  if (arity_ != o.arity_) throw InputError("arity mismatch in -");
  ExactPoly out(*this);
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
  if (arity_ != o.arity_) throw InputError("arity mismatch in *");
  ExactPoly out(arity_);
  Monomial prod(arity_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < arity_; ++i) prod[i] = ma[i] + mb[i];
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ExactPoly ExactPoly::scaled(const Rational& c) const {
  if (c == 0) return ExactPoly(arity_);
  ExactPoly out(*this);
  for (auto& [m, coef] : out.terms_) coef *= c;
  return out;
}

ExactPoly ExactPoly::pow(int k) const {
  if (k < 0) throw InputError("negative polynomial power");
  ExactPoly acc = one(arity_);
  for (int i = 0; i < k; ++i) acc = acc * (*this);
  return acc;
}

Rational ExactPoly::evaluate(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != arity_)
    throw InputError("evaluation point has wrong dimension");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < arity_; ++i) {
      for (int k = 0; k < m[i]; ++k) term *= x[i];
    }
    acc += term;
  }
  return acc;
}

double ExactPoly::evaluate_double(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != arity_)
    throw InputError("evaluation point has wrong dimension");
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double term = c.get_d();
    for (int i = 0; i < arity_; ++i)
      for (int k = 0; k < m[i]; ++k) term *= x[i];
    acc += term;
  }
  return acc;
}

std::complex<double> ExactPoly::evaluate_complex(
    const std::vector<std::complex<double>>& x) const {
  if (static_cast<int>(x.size()) != arity_)
    throw InputError("evaluation point has wrong dimension");
  std::complex<double> acc = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term = c.get_d();
    for (int i = 0; i < arity_; ++i)
      for (int k = 0; k < m[i]; ++k) term *= x[i];
    acc += term;
  }
  return acc;
}

UnivariateExact ExactPoly::restrict_line(const std::vector<Rational>& x0,
                                         const std::vector<Rational>& v) const {
  if (static_cast<int>(x0.size()) != arity_ ||
      static_cast<int>(v.size()) != arity_)
    throw InputError("restriction point/direction has wrong dimension");
  int dmax = std::max(total_degree(), 0);
  std::vector<Rational> acc(dmax + 1, Rational(0));
  std::vector<Rational> term, next;
  for (const auto& [m, c] : terms_) {
    term.assign(1, c);
    for (int i = 0; i < arity_; ++i) {
      for (int k = 0; k < m[i]; ++k) {
        // multiply by (x0[i] + v[i] * t)
        next.assign(term.size() + 1, Rational(0));
        for (std::size_t j = 0; j < term.size(); ++j) {
          next[j] += term[j] * x0[i];
          next[j + 1] += term[j] * v[i];
        }
        term.swap(next);
      }
    }
    for (std::size_t j = 0; j < term.size(); ++j) acc[j] += term[j];
  }
  return UnivariateExact(std::move(acc));
}

ExactPoly ExactPoly::substitute(const std::vector<ExactPoly>& assignment) const {
  if (static_cast<int>(assignment.size()) != arity_)
    throw InputError("substitution needs one polynomial per variable");
  int out_arity = assignment.empty() ? 0 : assignment[0].arity();
  for (const auto& a : assignment)
    if (a.arity() != out_arity)
      throw InputError("substitution polynomials must share one arity");

  // Memoize powers of each assignment polynomial across terms.
  std::map<std::pair<int, int>, ExactPoly> powers;
  auto power_of = [&](int var, int exp) -> const ExactPoly& {
    auto key = std::make_pair(var, exp);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    ExactPoly p = assignment[var];
    for (int k = 1; k < exp; ++k) p = p * assignment[var];
    return powers.emplace(key, std::move(p)).first->second;
  };

  ExactPoly out(out_arity);
  for (const auto& [m, c] : terms_) {
    ExactPoly term = constant(out_arity, c);
    for (int i = 0; i < arity_; ++i)
      if (m[i] > 0) term = term * power_of(i, m[i]);
    out = out + term;
  }
  return out;
}

ExactPoly ExactPoly::permute_vars(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != arity_)
    throw InputError("permutation length does not match arity");
  std::vector<bool> seen(arity_, false);
  for (int p : perm) {
    if (p < 0 || p >= arity_ || seen[p])
      throw InputError("not a permutation of the variables");
    seen[p] = true;
  }
  ExactPoly out(arity_);
  Monomial moved(arity_);
  for (const auto& [m, c] : terms_) {
    std::fill(moved.begin(), moved.end(), 0);
    for (int i = 0; i < arity_; ++i) moved[perm[i]] = m[i];
    out.terms_.emplace(moved, c);  // bijection: no merging needed
  }
  return out;
}

std::vector<Monomial> ExactPoly::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.push_back(it->first);
  return out;
}

bool ExactPoly::is_symmetric() const {
  std::vector<int> perm(arity_);
  for (int i = 0; i + 1 < arity_; ++i) {
    for (int j = 0; j < arity_; ++j) perm[j] = j;
    std::swap(perm[i], perm[i + 1]);
    if (permute_vars(perm) != *this) return false;
  }
  return true;
}

UnivariateExact ExactPoly::to_univariate() const {
  if (arity_ != 1) throw InputError("to_univariate needs arity 1");
  std::vector<Rational> coef(total_degree() + 1, Rational(0));
  for (const auto& [m, c] : terms_) coef[m[0]] = c;
  return UnivariateExact(std::move(coef));
}

ExactPoly ExactPoly::from_univariate(const UnivariateExact& f) {
  ExactPoly out(1);
  for (int k = 0; k <= f.degree(); ++k)
    if (f.coef()[k] != 0) out.terms_.emplace(Monomial{k}, f.coef()[k]);
  return out;
}

std::string ExactPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (sign_of(c) < 0) os << "-";
      first = false;
    } else {
      os << (sign_of(c) < 0 ? " - " : " + ");
    }
    bool constant_term = (monomial_degree(m) == 0);
    bool unit = (a == 1) && !constant_term;
    if (!unit) os << rational_to_string(a);
    bool printed_var = false;
    for (int i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      if (!unit || printed_var) os << "*";
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      printed_var = true;
    }
  }
  return os.str();
}

}  // namespace vamos
