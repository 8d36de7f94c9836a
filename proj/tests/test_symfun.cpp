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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vamos/symfun.hpp"

using namespace vamos;

namespace {

// Independent oracle: e_k by bitmask subset enumeration.
ExactPoly oracle_elementary(int n, int k) {
  ExactPoly out(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Monomial m(n, 0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) m[i] = 1;
    out.add_term(m, 1);
  }
  return out;
}

Rational binom(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace

TEST_CASE("partition basics") {
  Partition p({3, 2, 2});
  CHECK(p.weight() == 7);
  CHECK(p.length() == 3);
  CHECK(Partition::two_power(3).parts() == std::vector<int>{2, 2, 2});
  CHECK(Partition::two_power_one_one(2).parts() ==
        std::vector<int>{2, 2, 1, 1});
  CHECK(Partition().weight() == 0);
  CHECK_THROWS_AS(Partition({2, 3}), InputError);
  CHECK_THROWS_AS(Partition({1, 0}), InputError);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(0).size() == 1);  // the empty partition
}

TEST_CASE("basis polynomials") {
  // m_{2,2} over two variables is the single monomial x1^2 x2^2.
  ExactPoly m22 = monomial_symmetric(2, Partition({2, 2}));
  CHECK(m22.num_terms() == 1);
  CHECK(m22.coefficient({2, 2}) == 1);
  // too many parts -> zero
  CHECK(monomial_symmetric(2, Partition({2, 2, 2})).is_zero());
  // empty partition -> constant one
  CHECK(monomial_symmetric(3, Partition()) == ExactPoly::one(3));
  // e_2 over three variables
  CHECK(elementary_symmetric(3, 2) == oracle_elementary(3, 2));
  CHECK(elementary_symmetric(3, 0) == ExactPoly::one(3));
  CHECK(elementary_symmetric(3, 4).is_zero());
  // p_2 over three variables
  ExactPoly p2 = power_sum(3, 2);
  CHECK(p2.num_terms() == 3);
  CHECK(p2.coefficient({0, 2, 0}) == 1);
  CHECK_THROWS_AS(power_sum(3, 0), InputError);
  // orbit sizes: m_{2,1} over 3 variables has 6 terms
  CHECK(monomial_symmetric(3, Partition({2, 1})).num_terms() == 6);
}

TEST_CASE("monomial basis covers all monomials exactly once") {
  // Sum over partitions of d of m_lambda(1,...,1) counts degree-d monomials.
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= 6; ++d) {
      Rational total = 0;
      std::vector<Rational> ones(n, Rational(1));
      for (const Partition& lam : partitions_of(d))
        total += monomial_symmetric(n, lam).evaluate(ones);
      CHECK(total == binom(n + d - 1, d));
    }
  }
}

TEST_CASE("rewriting in the elementary basis") {
  // p_2 = e_1^2 - 2 e_2
  EBasisExpr q = to_e_basis(power_sum(3, 2));
  ExactPoly expected(3);
  expected.add_term({2, 0, 0}, 1);
  expected.add_term({0, 1, 0}, -2);
  CHECK(q.expr == expected);
  // identity case e_3 -> y3
  EBasisExpr q3 = to_e_basis(elementary_symmetric(4, 3));
  ExactPoly y3(4);
  y3.add_term({0, 0, 1, 0}, 1);
  CHECK(q3.expr == y3);
  // m_{2,1} = e_1 e_2 - 3 e_3
  EBasisExpr qm = to_e_basis(monomial_symmetric(3, Partition({2, 1})));
  ExactPoly em(3);
  em.add_term({1, 1, 0}, 1);
  em.add_term({0, 0, 1}, -3);
  CHECK(qm.expr == em);
  // back-substitution reproduces the source
  CHECK(expand_e_basis(qm, 3) == monomial_symmetric(3, Partition({2, 1})));
}

TEST_CASE("e-basis roundtrip on random symmetric polynomials") {
  RandomStream rng(424242);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + static_cast<int>(rng.uniform_int(0, 2));
    ExactPoly p(n);
    for (int d = 1; d <= 5; ++d) {
      auto lams = partitions_of(d);
      const Partition& lam =
          lams[rng.uniform_int(0, static_cast<long>(lams.size()) - 1)];
      p = p + monomial_symmetric(n, lam).scaled(rng.uniform_rational(-5, 5));
    }
    if (p.is_zero()) continue;
    CHECK(expand_e_basis(to_e_basis(p), n) == p);
  }
}

TEST_CASE("non-symmetric input is rejected with a named transposition") {
  ExactPoly p = ExactPoly::variable(3, 0).pow(2) * ExactPoly::variable(3, 1);
  CHECK_THROWS_WITH_AS(
      to_e_basis(p),
      "input error: polynomial is not symmetric: swapping x1 and x2 "
      "changes it",
      InputError);
}

TEST_CASE("lift operator") {
  // lift(p_2) = 4 e_2^2 - 6 e_1 e_3 (independent expansion via oracle e_k)
  ExactPoly lifted = lift(power_sum(2, 2), 3);
  ExactPoly expected = (oracle_elementary(3, 2) * oracle_elementary(3, 2))
                           .scaled(4) -
                       (oracle_elementary(3, 1) * oracle_elementary(3, 3))
                           .scaled(6);
  CHECK(lifted == expected);
  // same object via the monomial-basis spelling m_2 = p_2
  CHECK(lift(monomial_symmetric(2, Partition({2})), 3) == expected);
  // and the claimed right-hand side 4 m_{2,2} + 2 m_{2,1,1} at n=3
  ExactPoly rhs = monomial_symmetric(3, Partition({2, 2})).scaled(4) +
                  monomial_symmetric(3, Partition({2, 1, 1})).scaled(2);
  CHECK(lifted == rhs);
  // degree-0 homogenization
  CHECK(lift(ExactPoly::one(2), 4) == ExactPoly::one(4));
  // default output arity is one more variable
  CHECK(lift(power_sum(2, 2)).arity() == 3);
}

TEST_CASE("identity names roundtrip") {
  for (auto which :
       {IdentityKind::kJensen, IdentityKind::kBoost,
        IdentityKind::kTsosConstant, IdentityKind::kDoubledElementary})
    CHECK(identity_from_name(identity_name(which)) == which);
  CHECK_THROWS_AS(identity_from_name("nope"), InputError);
}

TEST_CASE("jensen identity at r=1 against a hand expansion") {
  // m_2 = e_1^2 - 2 e_2 over two variables.
  auto res = verify_identity(IdentityKind::kJensen, 1, 2);
  CHECK(res.holds);
  CHECK(res.difference.is_zero());
  ExactPoly m2 = monomial_symmetric(2, Partition({2}));
  ExactPoly e1 = oracle_elementary(2, 1), e2 = oracle_elementary(2, 2);
  CHECK(m2 == e1 * e1 - e2.scaled(2));
}

TEST_CASE("identity sweep over a small grid") {
  for (int r = 1; r <= 3; ++r) {
    for (int n = r + 1; n <= 6; ++n) {
      CHECK(verify_identity(IdentityKind::kJensen, r, n).holds);
      CHECK(verify_identity(IdentityKind::kBoost, r, n).holds);
      if (r >= 2) {
        CHECK(verify_identity(IdentityKind::kTsosConstant, r, n).holds);
        CHECK(verify_identity(IdentityKind::kDoubledElementary, r, n).holds);
      }
    }
  }
  // the two lemma-restricted identities reject r = 1
  CHECK_THROWS_AS(verify_identity(IdentityKind::kTsosConstant, 1, 3),
                  InputError);
  CHECK_THROWS_AS(verify_identity(IdentityKind::kDoubledElementary, 1, 3),
                  InputError);
}

TEST_CASE("doubled elementary at the degenerate short-variable case") {
  // r=2, n=2: e_4(x1,x1,x2,x2) = x1^2 x2^2 = m_{2,2}, and e_1 e_3 = 0.
  auto res = verify_identity(IdentityKind::kDoubledElementary, 2, 2);
  CHECK(res.holds);
}

TEST_CASE("tsos constant at r=2, n=3") {
  auto res = verify_identity(IdentityKind::kTsosConstant, 2, 3);
  CHECK(res.holds);
  // independent spelling: (1/2)(p_2^2 - p_4) = m_{2,2}
  ExactPoly p2 = power_sum(3, 2), p4 = power_sum(3, 4);
  CHECK((p2 * p2 - p4).scaled(make_rational(1, 2)) ==
        monomial_symmetric(3, Partition({2, 2})));
}

TEST_CASE("inequality gap polynomials and spot values") {
  // Laguerre-Turan at r=2, n=4, all-ones: 2*36 - 3*16 = 24.
  auto lt = inequality_gap(InequalityKind::kLaguerreTuran, 2, 4, 0, 1);
  std::vector<Rational> ones4(4, Rational(1));
  CHECK(lt.gap.evaluate(ones4) == 24);
  // eng at r=2, n=3, all-ones: (1*3*3 - 1*1)^2 - 1*1*3*3 = 55.
  auto eng = inequality_gap(InequalityKind::kEng, 2, 3, 0, 1);
  std::vector<Rational> ones3(3, Rational(1));
  CHECK(eng.gap.evaluate(ones3) == 55);
  // turan_refined r=1 is identically zero
  auto tr1 = inequality_gap(InequalityKind::kTuranRefined, 1, 5, 100, 7);
  CHECK(tr1.stats.exact_zero_gap);
  CHECK(tr1.gap.is_zero());
  CHECK(tr1.stats.min_value == 0);
  // newton needs r+1 <= n
  CHECK_THROWS_AS(inequality_gap(InequalityKind::kNewton, 4, 4, 0, 1),
                  InputError);
  CHECK_THROWS_AS(inequality_gap(InequalityKind::kEng, 1, 4, 0, 1), InputError);
}

TEST_CASE("inequality sampling is deterministic and nonnegative here") {
  auto a = inequality_gap(InequalityKind::kTuranRefined, 2, 4, 400, 0xC0FFEE);
  auto b = inequality_gap(InequalityKind::kTuranRefined, 2, 4, 400, 0xC0FFEE);
  CHECK(a.stats.min_value == b.stats.min_value);
  CHECK(a.stats.witness_point == b.stats.witness_point);
  CHECK(a.stats.nonnegative_on_samples);
  CHECK(a.stats.samples == 400);
  CHECK(a.stats.witness_point.size() == 4);
  auto c = inequality_gap(InequalityKind::kNewton, 2, 5, 300, 99);
  CHECK(c.stats.nonnegative_on_samples);
  auto d = inequality_gap(InequalityKind::kEng, 3, 5, 300, 99);
  CHECK(d.stats.nonnegative_on_samples);
}

TEST_CASE("lift preserves nonnegativity on samples") {
  // Lift of the r=2 refined-Turan gap, sampled in 5 variables.
  ExactPoly gap = inequality_gap(InequalityKind::kTuranRefined, 2, 4, 0, 1).gap;
  ExactPoly lifted = lift(gap, 5);
  RandomStream rng(31337);
  for (int s = 0; s < 300; ++s) {
    std::vector<Rational> x(5);
    for (auto& xi : x) xi = rng.uniform_rational(-10, 10);
    CHECK(sign_of(lifted.evaluate(x)) >= 0);
  }
}
