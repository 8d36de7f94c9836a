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

#include "vamos/jordan.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "vamos/errors.hpp"
#include "vamos/setfamily.hpp"

namespace vamos {

namespace {

constexpr int kMaxLevel = 3;

void check_level(int level) {
  if (level < 0 || level > kMaxLevel)
    throw InputError("algebra level must be between 0 and 3, got " +
                     std::to_string(level));
}

void check_same_level(const CDElement& a, const CDElement& b) {
  if (a.level() != b.level())
    throw InputError("mixed algebra levels: " +
                     std::string(cd_level_name(a.level())) + " vs " +
                     cd_level_name(b.level()));
}

}  // namespace

CDElement::CDElement(int level) : level_(level) {
  check_level(level);
  c_.assign(std::size_t{1} << level, Rational(0));
}

CDElement::CDElement(int level, std::vector<Rational> coords)
    : level_(level), c_(std::move(coords)) {
  check_level(level);
  if (c_.size() != (std::size_t{1} << level))
    throw InputError("level-" + std::to_string(level) + " element needs " +
                     std::to_string(std::size_t{1} << level) +
                     " coordinates, got " + std::to_string(c_.size()));
}

CDElement CDElement::scalar(int level, const Rational& value) {
  CDElement out(level);
  out.c_[0] = value;
  return out;
}

CDElement CDElement::unit(int level, int index) {
  check_level(level);
  if (index < 0 || index >= (1 << level))
    throw InputError("basis index " + std::to_string(index) +
                     " out of range for level " + std::to_string(level));
  CDElement out(level);
  out.c_[static_cast<std::size_t>(index)] = 1;
  return out;
}

bool CDElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& q) { return sign_of(q) == 0; });
}

bool CDElement::is_real() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sign_of(c_[i]) != 0) return false;
  return true;
}

CDElement CDElement::conj() const {
  CDElement out = *this;
  for (std::size_t i = 1; i < out.c_.size(); ++i) out.c_[i] = -out.c_[i];
  return out;
}

Rational CDElement::norm() const {
  Rational s(0);
  for (const Rational& q : c_) s += q * q;
  return s;
}

CDElement CDElement::inverse() const {
  Rational n = norm();
  if (sign_of(n) == 0) throw InputError("inverse of zero algebra element");
  return conj().scaled(Rational(1) / n);
}

CDElement CDElement::scaled(const Rational& r) const {
  CDElement out = *this;
  for (Rational& q : out.c_) q *= r;
  return out;
}

CDElement CDElement::to_level(int level) const {
  check_level(level);
  CDElement out(level);
  std::size_t keep = std::min(c_.size(), out.c_.size());
  for (std::size_t i = 0; i < keep; ++i) out.c_[i] = c_[i];
  return out;
}

CDElement CDElement::operator-() const { return scaled(Rational(-1)); }

CDElement operator+(const CDElement& a, const CDElement& b) {
  check_same_level(a, b);
  CDElement out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

CDElement operator-(const CDElement& a, const CDElement& b) {
  check_same_level(a, b);
  CDElement out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

CDElement operator*(const CDElement& a, const CDElement& b) {
  check_same_level(a, b);
  if (a.level() == 0) {
    CDElement out(0);
    out.c_[0] = a.c_[0] * b.c_[0];
    return out;
  }
  int sub = a.level() - 1;
  std::size_t half = std::size_t{1} << sub;
  auto part = [&](const CDElement& x, bool high) {
    CDElement out(sub);
    for (std::size_t i = 0; i < half; ++i)
      out.c_[i] = x.c_[i + (high ? half : 0)];
    return out;
  };
  CDElement a1 = part(a, false), a2 = part(a, true);
  CDElement b1 = part(b, false), b2 = part(b, true);
  // (a1, a2)(b1, b2) = (a1 b1 - conj(b2) a2, b2 a1 + a2 conj(b1))
  CDElement lo = a1 * b1 - b2.conj() * a2;
  CDElement hi = b2 * a1 + a2 * b1.conj();
  CDElement out(a.level());
  for (std::size_t i = 0; i < half; ++i) {
    out.c_[i] = lo.c_[i];
    out.c_[i + half] = hi.c_[i];
  }
  return out;
}

const char* cd_level_name(int level) {
  check_level(level);
  static const char* const kNames[] = {"R", "C", "H", "O"};
  return kNames[level];
}

int cd_level_from_name(const std::string& name) {
  for (int level = 0; level <= kMaxLevel; ++level)
    if (name == cd_level_name(level)) return level;
  throw InputError("unknown algebra name: " + name +
                   " (expected R, C, H or O)");
}

// ---------------------------------------------------------------------------
// Hermitian 3x3 elements
// ---------------------------------------------------------------------------

H3Element H3Element::zero(int level) {
  check_level(level);
  H3Element out;
  out.level = level;
  out.off = {CDElement(level), CDElement(level), CDElement(level)};
  return out;
}

H3Element H3Element::identity(int level) {
  return diagonal(level, 1, 1, 1);
}

H3Element H3Element::diagonal(int level, const Rational& a, const Rational& b,
                              const Rational& c) {
  H3Element out = zero(level);
  out.diag = {a, b, c};
  return out;
}

H3Element H3Element::scaled(const Rational& r) const {
  H3Element out = *this;
  for (Rational& d : out.diag) d *= r;
  for (CDElement& x : out.off) x = x.scaled(r);
  return out;
}

namespace {

void check_same_level(const H3Element& x, const H3Element& y) {
  if (x.level != y.level)
    throw InputError("mixed algebra levels: " +
                     std::string(cd_level_name(x.level)) + " vs " +
                     cd_level_name(y.level));
}

using Mat3 = std::array<std::array<CDElement, 3>, 3>;

Mat3 to_matrix(const H3Element& x) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    m[i][i] = CDElement::scalar(x.level, x.diag[static_cast<std::size_t>(i)]);
  m[0][1] = x.off[0];
  m[0][2] = x.off[1];
  m[1][2] = x.off[2];
  m[1][0] = x.off[0].conj();
  m[2][0] = x.off[1].conj();
  m[2][1] = x.off[2].conj();
  return m;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b, int level) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CDElement s(level);
      for (int k = 0; k < 3; ++k) s = s + a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

/// Reads a Hermitian matrix back into the compact form; exact symmetry and
/// real-diagonal checks guard against transcription bugs.
H3Element from_matrix(const Mat3& m, int level) {
  H3Element out = H3Element::zero(level);
  for (int i = 0; i < 3; ++i) {
    if (!m[i][i].is_real())
      throw InternalError("hermitian result has a non-real diagonal entry");
    out.diag[static_cast<std::size_t>(i)] = m[i][i].real();
  }
  if (!(m[1][0] == m[0][1].conj()) || !(m[2][0] == m[0][2].conj()) ||
      !(m[2][1] == m[1][2].conj()))
    throw InternalError("hermitian result lost conjugate symmetry");
  out.off = {m[0][1], m[0][2], m[1][2]};
  return out;
}

}  // namespace

H3Element operator+(const H3Element& x, const H3Element& y) {
  check_same_level(x, y);
  H3Element out = x;
  for (int i = 0; i < 3; ++i) {
    out.diag[static_cast<std::size_t>(i)] += y.diag[static_cast<std::size_t>(i)];
    out.off[static_cast<std::size_t>(i)] =
        out.off[static_cast<std::size_t>(i)] + y.off[static_cast<std::size_t>(i)];
  }
  return out;
}

H3Element operator-(const H3Element& x, const H3Element& y) {
  return x + y.scaled(-1);
}

H3Element jordan_mul(const H3Element& x, const H3Element& y) {
  check_same_level(x, y);
  Mat3 a = to_matrix(x), b = to_matrix(y);
  Mat3 ab = mat_mul(a, b, x.level), ba = mat_mul(b, a, x.level);
  Mat3 sym;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      sym[i][j] = (ab[i][j] + ba[i][j]).scaled(Rational(1, 2));
  return from_matrix(sym, x.level);
}

Rational h3_trace(const H3Element& x) {
  return x.diag[0] + x.diag[1] + x.diag[2];
}

Rational trace_inner(const H3Element& x, const H3Element& y) {
  return h3_trace(jordan_mul(x, y));
}

FreudenthalData freudenthal(const H3Element& x) {
  const Rational &a = x.diag[0], &b = x.diag[1], &c = x.diag[2];
  const CDElement &x12 = x.off[0], &x13 = x.off[1], &x23 = x.off[2];
  FreudenthalData out;
  out.trace = a + b + c;
  out.sigma = a * b - x12.norm() + a * c - x13.norm() + b * c - x23.norm();
  CDElement corner = (x12 * x23) * x13.conj();
  out.det = a * b * c - a * x23.norm() - b * x13.norm() - c * x12.norm() +
            2 * corner.real();
  out.char_poly = UnivariateExact(
      {-out.det, out.sigma, -out.trace, Rational(1)});
  return out;
}

H3Element cayley_hamilton_residual(const H3Element& x) {
  FreudenthalData f = freudenthal(x);
  H3Element x2 = jordan_mul(x, x);
  H3Element x3 = jordan_mul(x2, x);
  return x3 - x2.scaled(f.trace) + x.scaled(f.sigma) -
         H3Element::identity(x.level).scaled(f.det);
}

H3Element adjoint(const H3Element& x) {
  FreudenthalData f = freudenthal(x);
  return jordan_mul(x, x) - x.scaled(f.trace) +
         H3Element::identity(x.level).scaled(f.sigma);
}

H3Element jordan_cross(const H3Element& x, const H3Element& y) {
  return adjoint(x + y) - adjoint(x) - adjoint(y);
}

int jordan_rank(const H3Element& x) {
  FreudenthalData f = freudenthal(x);
  // det(I + t x) = 1 + trace t + sigma t^2 + det t^3; the rank is its
  // degree in t.
  int rank = 0;
  if (sign_of(f.trace) != 0) rank = 1;
  if (sign_of(f.sigma) != 0) rank = 2;
  if (sign_of(f.det) != 0) rank = 3;
  if (rank == 0 && !(x == H3Element::zero(x.level)))
    throw InternalError("nonzero hermitian element with zero spectrum");
  return rank;
}

JordanSpectrum spectral(const H3Element& x) {
  JordanSpectrum out;
  FreudenthalData f = freudenthal(x);
  out.char_poly = f.char_poly;
  if (!real_roots_exact(out.char_poly).real_rooted)
    throw InternalError(
        "characteristic polynomial of a hermitian element is not real-rooted");
  out.roots = isolate_real_roots(out.char_poly);
  std::reverse(out.roots.begin(), out.roots.end());
  out.jrank = jordan_rank(x);
  int zero_mult = 0;
  for (const RootInfo& r : out.roots)
    if (compare_root_to(r, Rational(0)) == 0) zero_mult = r.multiplicity;
  if (out.jrank != 3 - zero_mult)
    throw InternalError("rank from det(I + t x) disagrees with the spectrum");
  return out;
}

bool is_idempotent(const H3Element& x) { return jordan_mul(x, x) == x; }

bool frame_verify(const H3Element& c1, const H3Element& c2,
                  const H3Element& c3) {
  const H3Element* cs[3] = {&c1, &c2, &c3};
  for (const H3Element* c : cs)
    if (!is_idempotent(*c)) return false;
  H3Element zero = H3Element::zero(c1.level);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(jordan_mul(*cs[i], *cs[j]) == zero)) return false;
  return (c1 + c2 + c3) == H3Element::identity(c1.level);
}

H3Element rank_one_from_vector(const std::vector<CDElement>& v) {
  if (v.size() != 3)
    throw InputError("rank-one construction needs exactly 3 coordinates, got " +
                     std::to_string(v.size()));
  int level = v[0].level();
  for (const CDElement& x : v)
    if (x.level() != level)
      throw InputError("rank-one construction needs one common algebra level");
  int last = -1;
  for (int i = 0; i < 3; ++i)
    if (!v[static_cast<std::size_t>(i)].is_zero()) last = i;
  if (last < 0)
    throw InputError("rank-one construction needs a nonzero vector");

  // Right-multiplying by conj(v[last]) makes slot `last` equal to
  // n(v[last]) > 0, i.e. real; products u_i conj(u_j) then involve at most
  // two non-real generators and land in an associative subalgebra.
  CDElement pivot = v[static_cast<std::size_t>(last)].conj();
  std::array<CDElement, 3> u = {v[0] * pivot, v[1] * pivot, v[2] * pivot};

  Rational total(0);
  for (const CDElement& x : u) total += x.norm();
  Rational inv = Rational(1) / total;

  H3Element p = H3Element::zero(level);
  for (int i = 0; i < 3; ++i)
    p.diag[static_cast<std::size_t>(i)] =
        u[static_cast<std::size_t>(i)].norm() * inv;
  p.off[0] = (u[0] * u[1].conj()).scaled(inv);
  p.off[1] = (u[0] * u[2].conj()).scaled(inv);
  p.off[2] = (u[1] * u[2].conj()).scaled(inv);

  if (!is_idempotent(p) || h3_trace(p) != 1 || jordan_rank(p) != 1)
    throw InputError(
        "vector does not normalize to a rank-one idempotent; renormalize so "
        "one coordinate is real and retry");
  return p;
}

RankTable matroid_from_points(const std::vector<H3Element>& points) {
  if (points.empty()) throw InputError("point configuration is empty");
  if (points.size() > 16)
    throw InputError("point configurations support at most 16 points, got " +
                     std::to_string(points.size()));
  int level = points[0].level;
  std::string bad;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const H3Element& p = points[i];
    if (p.level != level)
      throw InputError("points mix algebra levels");
    if (!is_idempotent(p) || h3_trace(p) != 1 || jordan_rank(p) != 1) {
      if (!bad.empty()) bad += ", ";
      bad += std::to_string(i + 1);
    }
  }
  if (!bad.empty())
    throw InputError("points are not rank-one idempotents: " + bad);

  int ground = static_cast<int>(points.size());
  std::size_t count = std::size_t{1} << ground;
  // sums[s] built from sums[s without lowest bit] with one addition each.
  std::vector<H3Element> sums(count, H3Element::zero(level));
  std::vector<std::uint8_t> table(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    SetMask low = s & (~s + 1);
    int idx = set_size(low - 1);  // index of the lowest set bit
    sums[s] = sums[s ^ low] + points[static_cast<std::size_t>(idx)];
    table[s] = static_cast<std::uint8_t>(jordan_rank(sums[s]));
  }
  return RankTable(ground, std::move(table));
}

RankTable target_rank_table(const RepresentationTarget& target) {
  if (target.rank != 3)
    throw InputError("only rank-3 targets are supported, got rank " +
                     std::to_string(target.rank));
  if (target.ground < 3 || target.ground > 16)
    throw InputError("target ground size must be between 3 and 16, got " +
                     std::to_string(target.ground));
  SetMask full = full_mask(target.ground);
  std::vector<char> dependent(std::size_t{1} << target.ground, 0);
  for (SetMask t : target.nonbases) {
    if ((t & ~full) != 0 || set_size(t) != 3)
      throw InputError("target dependent sets must be 3-element subsets of "
                       "the ground set");
    dependent[t] = 1;
  }

  std::size_t count = std::size_t{1} << target.ground;
  std::vector<std::uint8_t> table(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    int size = set_size(s);
    if (size <= 2) {
      table[s] = static_cast<std::uint8_t>(size);
      continue;
    }
    // Rank 2 exactly when every triple inside S is dependent (S lies on a
    // line); otherwise the set spans.
    bool flat = true;
    std::vector<int> elems = elements_of(s);
    for (std::size_t i = 0; i < elems.size() && flat; ++i)
      for (std::size_t j = i + 1; j < elems.size() && flat; ++j)
        for (std::size_t k = j + 1; k < elems.size() && flat; ++k) {
          SetMask t = (SetMask{1} << (elems[i] - 1)) |
                      (SetMask{1} << (elems[j] - 1)) |
                      (SetMask{1} << (elems[k] - 1));
          if (!dependent[t]) flat = false;
        }
    table[s] = static_cast<std::uint8_t>(flat ? 2 : 3);
  }
  RankTable out(target.ground, std::move(table));
  PolymatroidReport axioms = check_polymatroid(out);
  if (!axioms.ok)
    throw InputError("dependent-triple list does not define a matroid (" +
                     axioms.axiom + " fails)");
  return out;
}

RepresentationReport verify_representation(const std::vector<H3Element>& points,
                                           const RepresentationTarget& target) {
  if (static_cast<int>(points.size()) != target.ground)
    throw InputError("point count " + std::to_string(points.size()) +
                     " does not match target ground size " +
                     std::to_string(target.ground));
  RankTable actual = matroid_from_points(points);
  RankTable expected = target_rank_table(target);
  RepresentationReport out;
  for (SetMask s = 0; s <= full_mask(target.ground); ++s) {
    int want = expected.rank(s), got = actual.rank(s);
    if (want != got)
      out.mismatches.push_back(RankMismatch{s, want, got});
  }
  out.ok = out.mismatches.empty();
  return out;
}

}  // namespace vamos
