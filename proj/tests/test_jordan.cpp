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
#include <array>
#include <optional>
#include <vector>

#include "doctest.h"
#include "vamos/jordan.hpp"
#include "vamos/matroid.hpp"
#include "vamos/rational.hpp"
#include "vamos/setfamily.hpp"

using namespace vamos;

namespace {

CDElement random_cd(RandomStream& rs, int level) {
  std::vector<Rational> coords;
  for (int i = 0; i < (1 << level); ++i)
    coords.push_back(rs.uniform_rational(-2, 2, 4));
  return CDElement(level, std::move(coords));
}

H3Element random_h3(RandomStream& rs, int level) {
  H3Element x = H3Element::zero(level);
  for (int i = 0; i < 3; ++i) {
    x.diag[i] = rs.uniform_rational(-3, 3, 4);
    x.off[i] = random_cd(rs, level);
  }
  return x;
}

/// Right-module inner product sum_i conj(u_i) v_i.
CDElement inner(const std::vector<CDElement>& u,
                const std::vector<CDElement>& v) {
  CDElement s(u[0].level());
  for (std::size_t i = 0; i < u.size(); ++i) s = s + u[i].conj() * v[i];
  return s;
}

bool vec_is_zero(const std::vector<CDElement>& v) {
  for (const CDElement& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Gram-Schmidt over an associative level (0..2): three pairwise
/// right-orthogonal nonzero vectors, or nullopt when a draw degenerates.
std::optional<std::array<std::vector<CDElement>, 3>> random_orthogonal_triple(
    RandomStream& rs, int level) {
  auto draw = [&] {
    std::vector<CDElement> v;
    for (int i = 0; i < 3; ++i) v.push_back(random_cd(rs, level));
    return v;
  };
  auto project_out = [&](const std::vector<CDElement>& w,
                         std::vector<CDElement> v) {
    CDElement coeff = inner(w, v).scaled(Rational(1) / inner(w, w).real());
    for (std::size_t i = 0; i < 3; ++i) v[i] = v[i] - w[i] * coeff;
    return v;
  };
  std::vector<CDElement> w1 = draw();
  if (vec_is_zero(w1)) return std::nullopt;
  std::vector<CDElement> w2 = project_out(w1, draw());
  if (vec_is_zero(w2)) return std::nullopt;
  std::vector<CDElement> w3 = project_out(w2, project_out(w1, draw()));
  if (vec_is_zero(w3)) return std::nullopt;
  return std::array<std::vector<CDElement>, 3>{w1, w2, w3};
}

/// The nine-point quaternionic configuration whose eight dependent triples
/// form the rank-3 matroid with no ninth line.
std::vector<std::vector<CDElement>> nonpappus_vectors() {
  const int L = 2;
  auto q = [&](long c0, long c1, long c2, long c3) {
    return CDElement(L, {Rational(c0), Rational(c1), Rational(c2), Rational(c3)});
  };
  CDElement zero = q(0, 0, 0, 0), one = q(1, 0, 0, 0);
  CDElement i = q(0, 1, 0, 0), j = q(0, 0, 1, 0), k = q(0, 0, 0, 1);
  return {
      {one, zero, zero},           // 1
      {zero, one, zero},           // 2
      {one, i, zero},              // 3
      {zero, zero, one},           // 4
      {one, one, one},             // 5
      {one, one, j},               // 6
      {zero, one, one},            // 7
      {one, i, -k},                // 8
      {one, i + j - k, j},         // 9
  };
}

RepresentationTarget nonpappus_target() {
  RepresentationTarget t;
  t.ground = 9;
  t.rank = 3;
  for (const auto& line : std::vector<std::vector<int>>{{1, 2, 3},
                                                        {4, 5, 6},
                                                        {1, 5, 7},
                                                        {2, 4, 7},
                                                        {1, 6, 8},
                                                        {3, 4, 8},
                                                        {2, 6, 9},
                                                        {3, 5, 9}})
    t.nonbases.push_back(mask_from_elements(line, t.ground));
  return t;
}

}  // namespace

TEST_CASE("cayley-dickson units multiply like quaternions and octonions") {
  CDElement i = CDElement::unit(2, 1), j = CDElement::unit(2, 2),
            k = CDElement::unit(2, 3);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == CDElement::scalar(2, -1));
  CHECK(j * j == CDElement::scalar(2, -1));
  CHECK(i * k == -j);
  CHECK(k * i == j);

  CDElement ci = CDElement::unit(1, 1);
  CHECK(ci * ci == CDElement::scalar(1, -1));

  // Associativity fails at the octonion level on a basis triple.
  CDElement e1 = CDElement::unit(3, 1), e2 = CDElement::unit(3, 2),
            e4 = CDElement::unit(3, 4);
  CHECK((e1 * e2) * e4 != e1 * (e2 * e4));
  CHECK((e1 * e2) * e4 == -(e1 * (e2 * e4)));
}

TEST_CASE("cayley-dickson element validation") {
  CHECK_THROWS_AS(CDElement(4), InputError);
  CHECK_THROWS_AS(CDElement(-1), InputError);
  CHECK_THROWS_AS(CDElement(2, {Rational(1)}), InputError);
  CHECK_THROWS_AS(CDElement::unit(1, 2), InputError);
  CHECK_THROWS_AS(CDElement::unit(2, 1) + CDElement::unit(1, 1), InputError);
  CHECK(cd_level_from_name("H") == 2);
  CHECK(cd_level_name(3) == std::string("O"));
  CHECK_THROWS_AS(cd_level_from_name("Q"), InputError);
}

TEST_CASE("norms are multiplicative and conjugation reverses products") {
  RandomStream rs(2026);
  for (int level = 0; level <= 3; ++level) {
    for (int trial = 0; trial < 250; ++trial) {
      CDElement a = random_cd(rs, level), b = random_cd(rs, level);
      CHECK((a * b).norm() == a.norm() * b.norm());
      CHECK((a * b).conj() == b.conj() * a.conj());
      CHECK(a.conj().conj() == a);
    }
  }
}

TEST_CASE("inverses satisfy x * x^-1 = 1") {
  RandomStream rs(7);
  for (int level = 0; level <= 3; ++level) {
    for (int trial = 0; trial < 50; ++trial) {
      CDElement a = random_cd(rs, level);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == CDElement::scalar(level, 1));
      CHECK(a.inverse() * a == CDElement::scalar(level, 1));
    }
  }
  CHECK_THROWS_AS(CDElement(3).inverse(), InputError);
}

TEST_CASE("level projection truncates and embeds coordinates") {
  CDElement q(2, {Rational(1), Rational(2), Rational(3), Rational(4)});
  CHECK(q.to_level(1) == CDElement(1, {Rational(1), Rational(2)}));
  CHECK(q.to_level(3).to_level(2) == q);
  CHECK(q.to_level(3).coords()[4] == 0);
}

TEST_CASE("freudenthal data of simple elements") {
  for (int level = 0; level <= 3; ++level) {
    FreudenthalData f = freudenthal(H3Element::identity(level));
    CHECK(f.det == 1);
    CHECK(f.trace == 3);
    CHECK(f.sigma == 3);
    // (t - 1)^3
    CHECK(f.char_poly ==
          UnivariateExact({Rational(-1), Rational(3), Rational(-3), Rational(1)}));
  }
  H3Element d = H3Element::diagonal(2, Rational(2), Rational(-3), Rational(5));
  FreudenthalData f = freudenthal(d);
  CHECK(f.det == -30);
  CHECK(f.trace == 4);
  CHECK(f.sigma == 2 * (-3) + 2 * 5 + (-3) * 5);
}

TEST_CASE("jordan product is commutative with unit I") {
  RandomStream rs(11);
  for (int level = 0; level <= 3; ++level) {
    H3Element x = random_h3(rs, level), y = random_h3(rs, level);
    CHECK(jordan_mul(x, y) == jordan_mul(y, x));
    CHECK(jordan_mul(H3Element::identity(level), x) == x);
  }
  CHECK_THROWS_AS(jordan_mul(H3Element::identity(1), H3Element::identity(2)),
                  InputError);
}

TEST_CASE("cayley-hamilton holds exactly at every level") {
  RandomStream rs(42);
  for (int level = 0; level <= 3; ++level) {
    for (int trial = 0; trial < 100; ++trial) {
      H3Element x = random_h3(rs, level);
      CHECK(cayley_hamilton_residual(x) == H3Element::zero(level));
    }
  }
}

TEST_CASE("adjoint identities") {
  RandomStream rs(43);
  for (int level = 0; level <= 3; ++level) {
    for (int trial = 0; trial < 25; ++trial) {
      H3Element x = random_h3(rs, level);
      FreudenthalData f = freudenthal(x);
      CHECK(jordan_mul(x, adjoint(x)) ==
            H3Element::identity(level).scaled(f.det));
    }
  }
  // The adjoint of a rank-one idempotent vanishes.
  H3Element p = rank_one_from_vector(
      {CDElement::scalar(0, 1), CDElement::scalar(0, 1), CDElement::scalar(0, 0)});
  CHECK(adjoint(p) == H3Element::zero(0));
}

TEST_CASE("cross products express joins and incidence") {
  auto real_vec = [](long a, long b, long c) {
    return std::vector<CDElement>{CDElement::scalar(0, a), CDElement::scalar(0, b),
                                  CDElement::scalar(0, c)};
  };
  H3Element p1 = rank_one_from_vector(real_vec(1, 0, 0));
  H3Element p2 = rank_one_from_vector(real_vec(0, 1, 0));
  H3Element on = rank_one_from_vector(real_vec(1, 1, 0));
  H3Element offp = rank_one_from_vector(real_vec(0, 0, 1));
  H3Element line = jordan_cross(p1, p2);
  CHECK(line == H3Element::diagonal(0, 0, 0, 1));
  CHECK(trace_inner(line, on) == 0);
  CHECK(trace_inner(line, offp) == 1);
}

TEST_CASE("spectra of diagonal elements") {
  H3Element x = H3Element::diagonal(2, Rational(2), Rational(3), Rational(0));
  JordanSpectrum s = spectral(x);
  CHECK(s.jrank == 2);
  REQUIRE(s.roots.size() == 3);
  CHECK(compare_root_to(s.roots[0], Rational(3)) == 0);
  CHECK(compare_root_to(s.roots[1], Rational(2)) == 0);
  CHECK(compare_root_to(s.roots[2], Rational(0)) == 0);

  H3Element e11 = H3Element::diagonal(3, Rational(1), Rational(0), Rational(0));
  CHECK(is_idempotent(e11));
  CHECK(jordan_rank(e11) == 1);
  CHECK(jordan_rank(H3Element::zero(1)) == 0);
  CHECK(jordan_rank(H3Element::identity(3)) == 3);
}

TEST_CASE("random spectra satisfy trace and determinant identities") {
  RandomStream rs(99);
  for (int level = 0; level <= 3; ++level) {
    for (int trial = 0; trial < 10; ++trial) {
      H3Element x = random_h3(rs, level);
      JordanSpectrum s = spectral(x);
      int with_mult = 0;
      for (const RootInfo& r : s.roots) with_mult += r.multiplicity;
      CHECK(with_mult == 3);
      // Exact rational roots let us check trace = sum exactly; otherwise
      // fall back to the characteristic coefficients, already covered by
      // construction.
      FreudenthalData f = freudenthal(x);
      Rational lo(0), hi(0);
      for (const RootInfo& r : s.roots) {
        lo += r.lower() * r.multiplicity;
        hi += r.upper() * r.multiplicity;
      }
      CHECK(lo <= f.trace);
      CHECK(f.trace <= hi);
    }
  }
}

TEST_CASE("standard diagonal frame verifies; perturbed one does not") {
  for (int level = 0; level <= 3; ++level) {
    H3Element c1 = H3Element::diagonal(level, 1, 0, 0);
    H3Element c2 = H3Element::diagonal(level, 0, 1, 0);
    H3Element c3 = H3Element::diagonal(level, 0, 0, 1);
    CHECK(frame_verify(c1, c2, c3));
    CHECK_FALSE(frame_verify(c1, c1, c3));
    CHECK_FALSE(frame_verify(c1, c2, c2 + c3));
  }
}

TEST_CASE("random orthogonal frames reconstruct their element") {
  RandomStream rs(1234);
  const std::array<Rational, 3> lambda = {Rational(5), Rational(2),
                                          Rational(-1)};
  for (int level = 0; level <= 2; ++level) {
    int done = 0;
    while (done < 8) {
      auto triple = random_orthogonal_triple(rs, level);
      if (!triple) continue;
      ++done;
      std::array<H3Element, 3> c = {rank_one_from_vector((*triple)[0]),
                                    rank_one_from_vector((*triple)[1]),
                                    rank_one_from_vector((*triple)[2])};
      REQUIRE(frame_verify(c[0], c[1], c[2]));
      H3Element x = c[0].scaled(lambda[0]) + c[1].scaled(lambda[1]) +
                    c[2].scaled(lambda[2]);
      JordanSpectrum s = spectral(x);
      REQUIRE(s.roots.size() == 3);
      for (int i = 0; i < 3; ++i) {
        CHECK(compare_root_to(s.roots[i], lambda[i]) == 0);
        CHECK(s.roots[i].multiplicity == 1);
      }
      // Lagrange interpolation recovers each frame idempotent uniquely.
      for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        H3Element num = jordan_mul(
            x - H3Element::identity(level).scaled(lambda[j]),
            x - H3Element::identity(level).scaled(lambda[k]));
        Rational den = (lambda[i] - lambda[j]) * (lambda[i] - lambda[k]);
        CHECK(num.scaled(Rational(1) / den) == c[i]);
      }
    }
  }
}

TEST_CASE("rank-one construction matches the worked examples") {
  H3Element p = rank_one_from_vector(
      {CDElement::scalar(1, 1), CDElement::scalar(1, 0), CDElement::scalar(1, 0)});
  CHECK(p == H3Element::diagonal(1, 1, 0, 0));

  H3Element q = rank_one_from_vector(
      {CDElement::scalar(0, 1), CDElement::scalar(0, 1), CDElement::scalar(0, 0)});
  CHECK(q.diag[0] == Rational(1, 2));
  CHECK(q.diag[1] == Rational(1, 2));
  CHECK(q.diag[2] == 0);
  CHECK(q.off[0] == CDElement::scalar(0, Rational(1, 2)));

  // Quaternionic vector (1, i, j): the construction self-verifies.
  std::vector<CDElement> v = {CDElement::unit(2, 0), CDElement::unit(2, 1),
                              CDElement::unit(2, 2)};
  H3Element r = rank_one_from_vector(v);
  CHECK(is_idempotent(r));
  CHECK(h3_trace(r) == 1);
  CHECK(jordan_rank(r) == 1);
  CHECK(r.diag[0] == Rational(1, 3));
}

TEST_CASE("rank-one construction handles octonionic vectors") {
  CDElement e1 = CDElement::unit(3, 1), e2 = CDElement::unit(3, 2),
            e4 = CDElement::unit(3, 4);
  H3Element p = rank_one_from_vector({e1, e2, e4});
  CHECK(is_idempotent(p));
  CHECK(jordan_rank(p) == 1);

  RandomStream rs(555);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<CDElement> v = {random_cd(rs, 3), random_cd(rs, 3),
                                random_cd(rs, 3)};
    if (vec_is_zero(v)) continue;
    H3Element q = rank_one_from_vector(v);
    CHECK(is_idempotent(q));
    CHECK(h3_trace(q) == 1);
    CHECK(jordan_rank(q) == 1);
  }
}

TEST_CASE("rank-one construction validates its input") {
  CHECK_THROWS_AS(rank_one_from_vector({CDElement(0), CDElement(0), CDElement(0)}),
                  InputError);
  CHECK_THROWS_AS(rank_one_from_vector({CDElement(0), CDElement(0)}), InputError);
  CHECK_THROWS_AS(
      rank_one_from_vector({CDElement(0), CDElement(1), CDElement(1)}),
      InputError);
}

TEST_CASE("point configurations produce matroid rank tables") {
  auto real_vec = [](long a, long b, long c) {
    return std::vector<CDElement>{CDElement::scalar(0, a), CDElement::scalar(0, b),
                                  CDElement::scalar(0, c)};
  };
  std::vector<H3Element> pts = {
      rank_one_from_vector(real_vec(1, 0, 0)),
      rank_one_from_vector(real_vec(0, 1, 0)),
      rank_one_from_vector(real_vec(1, 1, 0)),
      rank_one_from_vector(real_vec(0, 0, 1)),
  };
  RankTable t = matroid_from_points(pts);
  CHECK(t.rank(mask_from_elements({1, 2, 3}, 4)) == 2);
  CHECK(t.rank(mask_from_elements({1, 2, 4}, 4)) == 3);
  CHECK(t.full_rank() == 3);

  RepresentationTarget target;
  target.ground = 4;
  target.nonbases = {mask_from_elements({1, 2, 3}, 4)};
  CHECK(t == target_rank_table(target));
  CHECK(verify_representation(pts, target).ok);

  // An element failing the idempotent gate is reported by position.
  std::vector<H3Element> bad = pts;
  bad[2] = H3Element::identity(0).scaled(Rational(1, 3));
  CHECK_THROWS_WITH_AS(matroid_from_points(bad),
                       "input error: points are not rank-one idempotents: 3",
                       InputError);
}

TEST_CASE("target rank tables validate their triple lists") {
  RepresentationTarget uniform;
  uniform.ground = 4;
  CHECK(target_rank_table(uniform) == RankTable::uniform(3, 4));

  RepresentationTarget clash;
  clash.ground = 4;
  clash.nonbases = {mask_from_elements({1, 2, 3}, 4),
                    mask_from_elements({1, 2, 4}, 4)};
  CHECK_THROWS_AS(target_rank_table(clash), InputError);

  RepresentationTarget bad_rank;
  bad_rank.ground = 4;
  bad_rank.rank = 2;
  CHECK_THROWS_AS(target_rank_table(bad_rank), InputError);

  RepresentationTarget bad_size;
  bad_size.ground = 4;
  bad_size.nonbases = {mask_from_elements({1, 2}, 4)};
  CHECK_THROWS_AS(target_rank_table(bad_size), InputError);
}

TEST_CASE("nine quaternionic points realize the eight-line configuration") {
  std::vector<H3Element> pts;
  for (const auto& v : nonpappus_vectors()) pts.push_back(rank_one_from_vector(v));
  RepresentationReport report = verify_representation(pts, nonpappus_target());
  CHECK(report.ok);
  CHECK(report.mismatches.empty());

  // The ninth cross triple {7, 8, 9} spans: the configuration is exactly
  // eight lines.
  RankTable t = matroid_from_points(pts);
  CHECK(t.rank(mask_from_elements({7, 8, 9}, 9)) == 3);
}

TEST_CASE("complex truncation of the nine points breaks the representation") {
  std::vector<H3Element> pts;
  for (const auto& v : nonpappus_vectors()) {
    std::vector<CDElement> cut;
    for (const CDElement& x : v) cut.push_back(x.to_level(1));
    pts.push_back(rank_one_from_vector(cut));
  }
  RepresentationReport report = verify_representation(pts, nonpappus_target());
  CHECK_FALSE(report.ok);
  CHECK(!report.mismatches.empty());
  // Points 8 and 9 truncate to the same complex point, so the pair loses a
  // rank.
  bool found_pair = false;
  for (const RankMismatch& m : report.mismatches)
    if (m.subset == mask_from_elements({8, 9}, 9)) {
      found_pair = true;
      CHECK(m.expected == 2);
      CHECK(m.actual == 1);
    }
  CHECK(found_pair);
}
