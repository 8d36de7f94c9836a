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

#include "vamos/univariate.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <sstream>

namespace vamos {

void UnivariateExact::normalize() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

const Rational& UnivariateExact::leading() const {
  if (is_zero()) throw InternalError("leading coefficient of zero polynomial");
  return coef_.back();
}

Rational UnivariateExact::eval(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t k = coef_.size(); k-- > 0;) acc = acc * t + coef_[k];
  return acc;
}

double UnivariateExact::eval_double(double t) const {
  double acc = 0.0;
  for (std::size_t k = coef_.size(); k-- > 0;) acc = acc * t + coef_[k].get_d();
  return acc;
}

std::complex<double> UnivariateExact::eval_complex(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (std::size_t k = coef_.size(); k-- > 0;) acc = acc * t + coef_[k].get_d();
  return acc;
}

UnivariateExact UnivariateExact::derivative() const {
  if (coef_.size() <= 1) return UnivariateExact();
  std::vector<Rational> out(coef_.size() - 1);
  for (std::size_t k = 1; k < coef_.size(); ++k) out[k - 1] = coef_[k] * static_cast<long>(k);
  return UnivariateExact(std::move(out));
}

UnivariateExact UnivariateExact::operator+(const UnivariateExact& o) const {
  std::vector<Rational> out(std::max(coef_.size(), o.coef_.size()), Rational(0));
  for (std::size_t k = 0; k < coef_.size(); ++k) out[k] += coef_[k];
  for (std::size_t k = 0; k < o.coef_.size(); ++k) out[k] += o.coef_[k];
  return UnivariateExact(std::move(out));
}

UnivariateExact UnivariateExact::operator-(const UnivariateExact& o) const {
  std::vector<Rational> out(std::max(coef_.size(), o.coef_.size()), Rational(0));
  for (std::size_t k = 0; k < coef_.size(); ++k) out[k] += coef_[k];
  for (std::size_t k = 0; k < o.coef_.size(); ++k) out[k] -= o.coef_[k];
  return UnivariateExact(std::move(out));
}

UnivariateExact UnivariateExact::operator*(const UnivariateExact& o) const {
  if (is_zero() || o.is_zero()) return UnivariateExact();
  std::vector<Rational> out(coef_.size() + o.coef_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coef_.size(); ++i)
    for (std::size_t j = 0; j < o.coef_.size(); ++j) out[i + j] += coef_[i] * o.coef_[j];
  return UnivariateExact(std::move(out));
}

UnivariateExact UnivariateExact::operator-() const {
  std::vector<Rational> out(coef_);
  for (auto& c : out) c = -c;
  return UnivariateExact(std::move(out));
}

UnivariateExact UnivariateExact::scaled(const Rational& c) const {
  if (c == 0) return UnivariateExact();
  std::vector<Rational> out(coef_);
  for (auto& x : out) x *= c;
  return UnivariateExact(std::move(out));
}

UnivariateExact UnivariateExact::shifted(const Rational& shift) const {
  // Horner composition p(t + shift).
  UnivariateExact acc;
  UnivariateExact lin(std::vector<Rational>{shift, Rational(1)});
  for (std::size_t k = coef_.size(); k-- > 0;) {
    acc = acc * lin + UnivariateExact::constant(coef_[k]);
  }
  return acc;
}

std::string UnivariateExact::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coef_.size(); k-- > 0;) {
    const Rational& c = coef_[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sign_of(c) < 0) os << "-";
      first = false;
    } else {
      os << (sign_of(c) < 0 ? " - " : " + ");
    }
    bool unit = (a == 1) && k > 0;
    if (!unit) os << rational_to_string(a);
    if (k > 0) {
      if (!unit) os << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<UnivariateExact, UnivariateExact> poly_divrem(
    const UnivariateExact& a, const UnivariateExact& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem(a.coef());
  int db = b.degree();
  int dq = static_cast<int>(rem.size()) - 1 - db;
  if (dq < 0) return {UnivariateExact(), a};
  std::vector<Rational> quot(dq + 1, Rational(0));
  const Rational& lead = b.leading();
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] / lead;
    quot[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coef()[j];
  }
  return {UnivariateExact(std::move(quot)), UnivariateExact(std::move(rem))};
}

UnivariateExact primitive_integer_scale(const UnivariateExact& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coef())
    if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coef()) {
    if (c == 0) continue;
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor = make_rational(den_lcm, num_gcd);  // positive
  return p.scaled(factor);
}

UnivariateExact poly_gcd(UnivariateExact a, UnivariateExact b) {
  a = primitive_integer_scale(a);
  b = primitive_integer_scale(b);
  while (!b.is_zero()) {
    UnivariateExact r = poly_divrem(a, b).second;
    a = std::move(b);
    b = primitive_integer_scale(r);
  }
  if (!a.is_zero() && sign_of(a.leading()) < 0) a = -a;
  return a;
}

static UnivariateExact exact_quotient(const UnivariateExact& a,
                                      const UnivariateExact& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw InternalError("division expected to be exact");
  return q;
}

UnivariateExact square_free_part(const UnivariateExact& f) {
  if (f.is_zero()) throw InputError("squarefree part of the zero polynomial");
  if (f.degree() == 0) return UnivariateExact::constant(Rational(1));
  UnivariateExact g = poly_gcd(f, f.derivative());
  return primitive_integer_scale(exact_quotient(f, g));
}

std::vector<std::pair<UnivariateExact, int>> square_free_decomposition(
    const UnivariateExact& f) {
  if (f.is_zero()) throw InputError("squarefree decomposition of zero");
  std::vector<std::pair<UnivariateExact, int>> out;
  if (f.degree() == 0) return out;
  // Yun's algorithm.
  UnivariateExact fp = f.derivative();
  UnivariateExact a = poly_gcd(f, fp);
  UnivariateExact b = exact_quotient(f, a);
  UnivariateExact c = exact_quotient(fp, a);
  UnivariateExact d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UnivariateExact ai = poly_gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(primitive_integer_scale(ai), i);
    b = exact_quotient(b, ai);
    c = exact_quotient(d, ai);
    d = c - b.derivative();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sturm machinery.
// ---------------------------------------------------------------------------

namespace {

struct SturmChain {
  std::vector<UnivariateExact> seq;
};

SturmChain sturm_chain(const UnivariateExact& g) {
  SturmChain ch;
  ch.seq.push_back(primitive_integer_scale(g));
  if (g.degree() >= 1) ch.seq.push_back(primitive_integer_scale(g.derivative()));
  while (ch.seq.size() >= 2 && !ch.seq.back().is_zero() &&
         ch.seq.back().degree() >= 0) {
    const UnivariateExact& p0 = ch.seq[ch.seq.size() - 2];
    const UnivariateExact& p1 = ch.seq.back();
    if (p1.degree() == 0) break;
    UnivariateExact r = poly_divrem(p0, p1).second;
    if (r.is_zero()) break;
    ch.seq.push_back(primitive_integer_scale(-r));
  }
  return ch;
}

int count_flips(const std::vector<int>& signs) {
  int flips = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++flips;
    prev = s;
  }
  return flips;
}

int variations_at(const SturmChain& ch, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(ch.seq.size());
  for (const auto& p : ch.seq) signs.push_back(sign_of(p.eval(x)));
  return count_flips(signs);
}

int variations_at_infinity(const SturmChain& ch, bool positive) {
  std::vector<int> signs;
  signs.reserve(ch.seq.size());
  for (const auto& p : ch.seq) {
    if (p.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sign_of(p.leading());
    if (!positive && (p.degree() % 2 == 1)) s = -s;
    signs.push_back(s);
  }
  return count_flips(signs);
}

/// Distinct real roots of the squarefree g in the open interval (a, b),
/// where g(a) != 0 and g(b) != 0.
int roots_between(const SturmChain& ch, const Rational& a, const Rational& b) {
  return variations_at(ch, a) - variations_at(ch, b);
}

}  // namespace

RealRootSummary real_roots_exact(const UnivariateExact& f) {
  if (f.is_zero())
    throw InputError("real root count of the zero polynomial is undefined");
  RealRootSummary out;
  UnivariateExact g = square_free_part(f);
  if (g.degree() <= 0) {
    out.distinct_real = 0;
    out.real_rooted = true;  // a nonzero constant has no roots at all
    return out;
  }
  SturmChain ch = sturm_chain(g);
  out.distinct_real =
      variations_at_infinity(ch, false) - variations_at_infinity(ch, true);
  out.real_rooted = (out.distinct_real == g.degree());
  return out;
}

Rational cauchy_root_bound(const UnivariateExact& f) {
  if (f.is_zero() || f.degree() < 1)
    throw InputError("root bound needs degree >= 1");
  Rational best = 0;
  for (int k = 0; k < f.degree(); ++k) {
    Rational v = abs(f.coef()[k] / f.leading());
    if (v > best) best = v;
  }
  return best + 1;
}

namespace {

/// Isolates the (simple) real roots of a squarefree primitive factor,
/// appending RootInfo entries with the given multiplicity. May divide out
/// rational roots it stumbles on and recurse.
void isolate_squarefree(UnivariateExact g, int multiplicity,
                        std::vector<RootInfo>& out) {
  // Exact zero root first: keeps all Sturm endpoints off the roots.
  if (g.degree() >= 1 && g.coef()[0] == 0) {
    RootInfo r;
    r.factor = g;
    r.exact = true;
    r.value = 0;
    r.multiplicity = multiplicity;
    out.push_back(r);
    std::vector<Rational> rest(g.coef().begin() + 1, g.coef().end());
    g = UnivariateExact(std::move(rest));
  }
  if (g.degree() < 1) return;
  if (g.degree() == 1) {
    RootInfo r;
    r.factor = g;
    r.exact = true;
    r.value = -g.coef()[0] / g.coef()[1];
    r.multiplicity = multiplicity;
    out.push_back(r);
    return;
  }
  SturmChain ch = sturm_chain(g);
  Rational bound = cauchy_root_bound(g);
  Integer ibound = rational_ceil(bound);
  Rational lo = Rational(-ibound), hi = Rational(ibound);

  struct Seg {
    Rational a, b;
    int count;
  };
  std::vector<Seg> stack;
  int total = roots_between(ch, lo, hi);
  if (total > 0) stack.push_back({lo, hi, total});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 1) {
      RootInfo r;
      r.factor = g;
      r.lo = s.a;
      r.hi = s.b;
      r.multiplicity = multiplicity;
      out.push_back(r);
      continue;
    }
    Rational mid = (s.a + s.b) / 2;
    if (g.eval(mid) == 0) {
      // Rational root found: record it, strip the linear factor, restart on
      // the quotient (cheap; rational roots are rare and degrees small).
      RootInfo r;
      r.factor = g;
      r.exact = true;
      r.value = mid;
      r.multiplicity = multiplicity;
      out.push_back(r);
      UnivariateExact lin(std::vector<Rational>{-mid, Rational(1)});
      isolate_squarefree(primitive_integer_scale(exact_quotient(g, lin)),
                         multiplicity, out);
      return;
    }
    int left = roots_between(ch, s.a, mid);
    int right = s.count - left;
    if (left > 0) stack.push_back({s.a, mid, left});
    if (right > 0) stack.push_back({mid, s.b, right});
  }
}

}  // namespace

void refine_root(RootInfo& r, const Rational& width) {
  if (r.exact) return;
  while (r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / 2;
    Rational v = r.factor.eval(mid);
    if (v == 0) {
      r.exact = true;
      r.value = mid;
      return;
    }
    // Exactly one simple root in (lo, hi), so the sign change tracks it.
    if (sign_of(v) == sign_of(r.factor.eval(r.lo)))
      r.lo = mid;
    else
      r.hi = mid;
  }
}

int compare_root_to(const RootInfo& r, const Rational& c) {
  if (r.exact) return sign_of(Rational(r.value - c));
  if (c <= r.lo) return 1;   // root lies strictly above lo
  if (c >= r.hi) return -1;  // and strictly below hi
  Rational v = r.factor.eval(c);
  if (v == 0) return 0;
  return (sign_of(v) == sign_of(r.factor.eval(r.lo))) ? 1 : -1;
}

std::vector<RootInfo> isolate_real_roots(const UnivariateExact& f) {
  if (f.is_zero()) throw InputError("cannot isolate roots of zero");
  std::vector<RootInfo> roots;
  for (const auto& [factor, mult] : square_free_decomposition(f))
    isolate_squarefree(factor, mult, roots);

  // Distinct roots: shrink intervals until pairwise disjoint, then order.
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        RootInfo &a = roots[i], &b = roots[j];
        while (!(a.upper() < b.lower() || b.upper() < a.lower() ||
                 (a.exact && b.exact))) {
          Rational wa = a.exact ? Rational(0) : Rational(a.hi - a.lo);
          Rational wb = b.exact ? Rational(0) : Rational(b.hi - b.lo);
          if (wa >= wb)
            refine_root(a, wa / 2);
          else
            refine_root(b, wb / 2);
          dirty = true;
        }
        if (a.exact && b.exact && a.value == b.value)
          throw InternalError("duplicate root across squarefree factors");
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootInfo& a, const RootInfo& b) {
    return a.upper() < b.upper();
  });
  for (auto& r : roots) {
    if (!r.exact) refine_root(r, make_rational(1, 1L << 30));
    r.approx = r.exact ? r.value.get_d() : Rational((r.lo + r.hi) / 2).get_d();
  }
  return roots;
}

RootSigns real_root_signs(const UnivariateExact& f) {
  if (f.is_zero()) throw InputError("root signs of the zero polynomial");
  RootSigns out;
  if (f.degree() == 0) return out;
  UnivariateExact g = square_free_part(f);
  if (g.degree() >= 1 && g.coef()[0] == 0) {
    out.zero = true;
    std::vector<Rational> rest(g.coef().begin() + 1, g.coef().end());
    g = UnivariateExact(std::move(rest));
  }
  if (g.degree() < 1) return out;
  SturmChain ch = sturm_chain(g);
  Rational bound = cauchy_root_bound(g) + 1;
  out.negative = roots_between(ch, -bound, Rational(0));
  out.positive = roots_between(ch, Rational(0), bound);
  return out;
}

std::vector<std::complex<double>> complex_roots_numeric(
    const UnivariateExact& f) {
  if (f.is_zero() || f.degree() < 1)
    throw InputError("complex_roots_numeric needs degree >= 1");
  int d = f.degree();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    Rational c = -f.coef()[i] / f.leading();
    companion(i, d - 1) = c.get_d();
    if (i + 1 < d) companion(i + 1, i) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion,
                                             /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericError("companion-matrix eigensolver failed to converge");
  std::vector<std::complex<double>> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = solver.eigenvalues()[i];
  std::sort(roots.begin(), roots.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  return roots;
}

}  // namespace vamos
