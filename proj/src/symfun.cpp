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

#include "vamos/symfun.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace vamos {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InputError("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

Partition Partition::two_power(int r) {
  if (r < 0) throw InputError("negative repeat count in partition");
  return Partition(std::vector<int>(r, 2));
}

Partition Partition::two_power_one_one(int r) {
  if (r < 0) throw InputError("negative repeat count in partition");
  std::vector<int> parts(r, 2);
  parts.push_back(1);
  parts.push_back(1);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw InputError("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

ExactPoly monomial_symmetric(int n, const Partition& lambda) {
  if (n < 1) throw InputError("arity must be positive");
  if (lambda.length() > n) return ExactPoly(n);
  if (lambda.length() == 0) return ExactPoly::one(n);
  Monomial exps(n, 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
  // exps starts at the descending arrangement; prev_permutation walks all
  // distinct rearrangements of the multiset exactly once.
  ExactPoly out(n);
  do {
    out.add_term(exps, 1);
  } while (std::prev_permutation(exps.begin(), exps.end()));
  return out;
}

namespace {

/// Calls fn(indices) for every k-subset of {0,...,n-1} in lexicographic
/// order. k = 0 yields one empty call.
void for_each_combination(int n, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

}  // namespace

ExactPoly elementary_symmetric(int n, int k) {
  if (n < 1) throw InputError("arity must be positive");
  if (k < 0) throw InputError("negative elementary index");
  ExactPoly out(n);
  if (k > n) return out;
  if (k == 0) return ExactPoly::one(n);
  for_each_combination(n, k, [&](const std::vector<int>& idx) {
    Monomial m(n, 0);
    for (int i : idx) m[i] = 1;
    out.add_term(m, 1);
  });
  return out;
}

ExactPoly power_sum(int n, int k) {
  if (n < 1) throw InputError("arity must be positive");
  if (k < 1) throw InputError("power sum needs k >= 1");
  ExactPoly out(n);
  for (int i = 0; i < n; ++i) {
    Monomial m(n, 0);
    m[i] = k;
    out.add_term(m, 1);
  }
  return out;
}

EBasisExpr to_e_basis(const ExactPoly& P) {
  int n = P.arity();
  if (n < 1) throw InputError("to_e_basis needs arity >= 1");
  // Symmetry check that can name a violating transposition.
  std::vector<int> perm(n);
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j < n; ++j) perm[j] = j;
    std::swap(perm[i], perm[i + 1]);
    if (P.permute_vars(perm) != P) {
      std::ostringstream os;
      os << "polynomial is not symmetric: swapping x" << (i + 1) << " and x"
         << (i + 2) << " changes it";
      throw InputError(os.str());
    }
  }

  std::vector<ExactPoly> e(n + 1, ExactPoly(n));
  for (int k = 1; k <= n; ++k) e[k] = elementary_symmetric(n, k);

  ExactPoly rest = P;
  ExactPoly q(n);
  while (!rest.is_zero()) {
    auto [mono, coef] = rest.leading_term();
    for (int i = 0; i + 1 < n; ++i)
      if (mono[i] < mono[i + 1])
        throw InternalError(
            "leading monomial of a symmetric polynomial must be sorted");
    Monomial b(n, 0);
    for (int i = 0; i + 1 < n; ++i) b[i] = mono[i] - mono[i + 1];
    b[n - 1] = mono[n - 1];
    q.add_term(b, coef);
    ExactPoly prod = ExactPoly::constant(n, coef);
    for (int i = 0; i < n; ++i)
      if (b[i] > 0) prod = prod * e[i + 1].pow(b[i]);
    rest = rest - prod;
  }
  return EBasisExpr{std::move(q)};
}

ExactPoly expand_e_basis(const EBasisExpr& Q, int n) {
  std::vector<ExactPoly> assign;
  assign.reserve(Q.expr.arity());
  for (int k = 1; k <= Q.expr.arity(); ++k)
    assign.push_back(elementary_symmetric(n, k));
  return Q.expr.substitute(assign);
}

ExactPoly lift(const ExactPoly& P, int n_out, int homogenize_to) {
  int n = P.arity();
  if (n_out < 0) n_out = n + 1;
  if (n_out < 1) throw InputError("lift needs a positive output arity");
  if (P.is_zero()) return ExactPoly(n_out);
  ExactPoly q = to_e_basis(P).expr;  // arity n, variable j-1 is e_j
  int d = std::max(q.total_degree(), homogenize_to);

  // H(y_0, ..., y_n) = y_0^d q(y_1/y_0, ..., y_n/y_0).
  ExactPoly h(n + 1);
  for (const auto& [b, c] : q.terms()) {
    Monomial m(n + 1, 0);
    int w = monomial_degree(b);
    if (w > d)
      throw InternalError("homogenization degree below a term's degree");
    m[0] = d - w;
    for (int i = 0; i < n; ++i) m[i + 1] = b[i];
    h.add_term(m, c);
  }

  std::vector<ExactPoly> assign;
  assign.reserve(n + 1);
  for (int j = 0; j <= n; ++j)
    assign.push_back(elementary_symmetric(n_out, j + 1).scaled(j + 1));
  return h.substitute(assign);
}

IdentityKind identity_from_name(const std::string& name) {
  if (name == "jensen") return IdentityKind::kJensen;
  if (name == "boost") return IdentityKind::kBoost;
  if (name == "tsos_constant") return IdentityKind::kTsosConstant;
  if (name == "doubled_elementary") return IdentityKind::kDoubledElementary;
  throw InputError("unknown identity: " + name);
}

std::string identity_name(IdentityKind which) {
  switch (which) {
    case IdentityKind::kJensen: return "jensen";
    case IdentityKind::kBoost: return "boost";
    case IdentityKind::kTsosConstant: return "tsos_constant";
    case IdentityKind::kDoubledElementary: return "doubled_elementary";
  }
  throw InternalError("unreachable identity kind");
}

namespace {

ExactPoly jensen_difference(int r, int n) {
  ExactPoly rhs(n);
  for (int k = 0; k <= 2 * r; ++k) {
    ExactPoly prod =
        elementary_symmetric(n, k) * elementary_symmetric(n, 2 * r - k);
    rhs = ((k + r) % 2 == 0) ? rhs + prod : rhs - prod;
  }
  return monomial_symmetric(n, Partition::two_power(r)) - rhs;
}

ExactPoly boost_difference(int r, int n) {
  // The lemma lifts the degree-2 Jensen expression of m_{2^{r-1}}; the
  // minimal e-expression at small r has lower degree, so the ambient
  // homogenization degree 2 is passed explicitly. Input arity is raised to
  // the stable range so the e-expression is the generic one; the resulting
  // identity specializes soundly to any smaller n.
  int n_in = std::max(n, 2 * r - 2);
  n_in = std::max(n_in, 1);
  ExactPoly source = monomial_symmetric(n_in, Partition::two_power(r - 1));
  ExactPoly lifted = lift(source, n, /*homogenize_to=*/2);
  ExactPoly rhs =
      monomial_symmetric(n, Partition::two_power(r)).scaled(Rational(r) * r) +
      monomial_symmetric(n, Partition::two_power_one_one(r - 1)).scaled(2);
  return lifted - rhs;
}

ExactPoly tsos_difference(int r, int n) {
  // (1/2) sum_{|S|=r-1} p_2(x \ S) prod_{i in S} x_i^2 = (r/2) m_{2^r}.
  ExactPoly lhs(n);
  for_each_combination(n, r - 1, [&](const std::vector<int>& s) {
    Monomial base(n, 0);
    std::vector<bool> in_s(n, false);
    for (int i : s) {
      base[i] = 2;
      in_s[i] = true;
    }
    for (int j = 0; j < n; ++j) {
      if (in_s[j]) continue;
      Monomial m = base;
      m[j] += 2;
      lhs.add_term(m, 1);
    }
  });
  lhs = lhs.scaled(make_rational(1, 2));
  ExactPoly rhs = monomial_symmetric(n, Partition::two_power(r))
                      .scaled(make_rational(r, 2));
  return lhs - rhs;
}

ExactPoly doubled_elementary_difference(int r, int n) {
  // e_{2r} of the doubled variable list, computed literally by substitution.
  ExactPoly doubled = elementary_symmetric(2 * n, 2 * r);
  std::vector<ExactPoly> assign;
  assign.reserve(2 * n);
  for (int i = 0; i < 2 * n; ++i)
    assign.push_back(ExactPoly::variable(n, i / 2));
  ExactPoly lhs = doubled.substitute(assign) -
                  monomial_symmetric(n, Partition::two_power(r));
  ExactPoly rhs(n);
  for (int j = 0; r - 2 * j - 1 >= 0; ++j) {
    rhs = rhs + elementary_symmetric(n, r - 2 * j - 1) *
                    elementary_symmetric(n, r + 2 * j + 1);
  }
  return lhs - rhs.scaled(4);
}

}  // namespace

IdentityResult verify_identity(IdentityKind which, int r, int n) {
  if (n < 1) throw InputError("identity check needs arity >= 1");
  int min_r =
      (which == IdentityKind::kTsosConstant ||
       which == IdentityKind::kDoubledElementary)
          ? 2
          : 1;
  if (r < min_r)
    throw InputError("identity " + identity_name(which) + " needs r >= " +
                     std::to_string(min_r));
  ExactPoly diff(n);
  switch (which) {
    case IdentityKind::kJensen: diff = jensen_difference(r, n); break;
    case IdentityKind::kBoost: diff = boost_difference(r, n); break;
    case IdentityKind::kTsosConstant: diff = tsos_difference(r, n); break;
    case IdentityKind::kDoubledElementary:
      diff = doubled_elementary_difference(r, n);
      break;
  }
  return IdentityResult{diff.is_zero(), std::move(diff)};
}

InequalityKind inequality_from_name(const std::string& name) {
  if (name == "laguerre_turan") return InequalityKind::kLaguerreTuran;
  if (name == "newton") return InequalityKind::kNewton;
  if (name == "turan_refined") return InequalityKind::kTuranRefined;
  if (name == "eng") return InequalityKind::kEng;
  throw InputError("unknown inequality: " + name);
}

std::string inequality_name(InequalityKind which) {
  switch (which) {
    case InequalityKind::kLaguerreTuran: return "laguerre_turan";
    case InequalityKind::kNewton: return "newton";
    case InequalityKind::kTuranRefined: return "turan_refined";
    case InequalityKind::kEng: return "eng";
  }
  throw InternalError("unreachable inequality kind");
}

namespace {

/// e_0..e_top of the point, by incremental products of (1 + x_i t).
std::vector<Rational> elementary_values(const std::vector<Rational>& x,
                                        int top) {
  std::vector<Rational> e(top + 1, Rational(0));
  e[0] = 1;
  int filled = 0;
  for (const Rational& xi : x) {
    filled = std::min(filled + 1, top);
    for (int k = filled; k >= 1; --k) e[k] += e[k - 1] * xi;
  }
  return e;
}

Rational gap_value_at(InequalityKind which, int r,
                      const std::vector<Rational>& x) {
  std::vector<Rational> e = elementary_values(x, r + 1);
  auto m2r = [&]() {
    // m_{2^r}(x) = e_r(x_1^2, ..., x_n^2)
    std::vector<Rational> sq(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) sq[i] = x[i] * x[i];
    return elementary_values(sq, r)[r];
  };
  int n = static_cast<int>(x.size());
  switch (which) {
    case InequalityKind::kLaguerreTuran:
      return Rational(r) * e[r] * e[r] - Rational(r + 1) * e[r - 1] * e[r + 1];
    case InequalityKind::kNewton: {
      Rational a = e[r] / binomial(n, r);
      return a * a - (e[r - 1] / binomial(n, r - 1)) *
                         (e[r + 1] / binomial(n, r + 1));
    }
    case InequalityKind::kTuranRefined:
      return Rational(r) * e[r] * e[r] -
             Rational(r + 1) * e[r - 1] * e[r + 1] - m2r();
    case InequalityKind::kEng: {
      Rational ar = make_rational(3 * (r - 1), r + 1);
      Rational cr = make_rational(9 * (r - 1), (r + 1) * (r + 1));
      Rational lhs = ar * e[r - 1] * e[r] - e[r - 2] * e[r + 1];
      return lhs * lhs - cr * e[r - 2] * e[r] * m2r();
    }
  }
  throw InternalError("unreachable inequality kind");
}

ExactPoly gap_polynomial(InequalityKind which, int r, int n) {
  ExactPoly er = elementary_symmetric(n, r);
  ExactPoly er_minus = elementary_symmetric(n, r - 1);
  ExactPoly er_plus = elementary_symmetric(n, r + 1);
  switch (which) {
    case InequalityKind::kLaguerreTuran:
      return (er * er).scaled(r) - (er_minus * er_plus).scaled(r + 1);
    case InequalityKind::kNewton: {
      Rational cr = binomial(n, r), cm = binomial(n, r - 1),
               cp = binomial(n, r + 1);
      if (cm == 0 || cr == 0 || cp == 0)
        throw InputError("newton inequality needs 1 <= r <= n-1");
      return (er * er).scaled(1 / (cr * cr)) -
             (er_minus * er_plus).scaled(1 / (cm * cp));
    }
    case InequalityKind::kTuranRefined:
      return (er * er).scaled(r) - (er_minus * er_plus).scaled(r + 1) -
             monomial_symmetric(n, Partition::two_power(r));
    case InequalityKind::kEng: {
      Rational ar = make_rational(3 * (r - 1), r + 1);
      Rational cr = make_rational(9 * (r - 1), (r + 1) * (r + 1));
      ExactPoly er2 = elementary_symmetric(n, r - 2);
      ExactPoly lhs = (er_minus * er).scaled(ar) - er2 * er_plus;
      return lhs * lhs -
             (er2 * er * monomial_symmetric(n, Partition::two_power(r)))
                 .scaled(cr);
    }
  }
  throw InternalError("unreachable inequality kind");
}

}  // namespace

GapReport inequality_gap(InequalityKind which, int r, int n, int samples,
                         std::uint64_t seed) {
  if (n < 1) throw InputError("inequality check needs arity >= 1");
  int min_r = which == InequalityKind::kEng ? 2 : 1;
  if (r < min_r)
    throw InputError("inequality " + inequality_name(which) + " needs r >= " +
                     std::to_string(min_r));
  if (samples < 0) throw InputError("negative sample count");

  GapReport out;
  out.gap = gap_polynomial(which, r, n);
  SampleStats& st = out.stats;
  st.which = inequality_name(which);
  st.r = r;
  st.n = n;
  st.seed = seed;
  st.samples = samples;
  st.exact_zero_gap = out.gap.is_zero();

  RandomStream rng(seed);
  bool have_min = false;
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform_rational(-10, 10);
    Rational value = gap_value_at(which, r, x);
    if (s < 3 && value != out.gap.evaluate(x))
      throw InternalError("factored gap evaluation disagrees with expansion");
    if (!have_min || value < st.min_value) {
      st.min_value = value;
      st.witness_point = x;
      have_min = true;
    }
  }
  st.nonnegative_on_samples = !have_min || sign_of(st.min_value) >= 0;
  return out;
}

}  // namespace vamos
