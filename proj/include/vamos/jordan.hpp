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
// Composition algebras R, C, H, O via Cayley-Dickson doubling, Hermitian
// 3x3 Jordan algebras over them, the Freudenthal cubic form with its
// spectral data, rank-one idempotents from coordinate vectors, and the
// rank function of a point configuration checked against a target matroid.

#ifndef VAMOS_JORDAN_HPP
#define VAMOS_JORDAN_HPP

#include <array>
#include <string>
#include <vector>

#include "vamos/matroid.hpp"
#include "vamos/rational.hpp"
#include "vamos/univariate.hpp"

namespace vamos {

/// Element of the Cayley-Dickson algebra at a given doubling level:
/// level 0 = reals, 1 = complex, 2 = quaternions, 3 = octonions.
/// Multiplication follows (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
class CDElement {
 public:
  CDElement() : level_(0), c_(1, Rational(0)) {}
  explicit CDElement(int level);
  CDElement(int level, std::vector<Rational> coords);

  static CDElement scalar(int level, const Rational& value);
  /// Basis element e_index (e_0 is the unit).
  static CDElement unit(int level, int index);

  int level() const { return level_; }
  int dim() const { return 1 << level_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_real() const;  ///< all imaginary coordinates vanish
  const Rational& real() const { return c_[0]; }

  CDElement conj() const;
  /// n(x) = sum of squared coordinates; multiplicative and positive
  /// definite.
  Rational norm() const;
  /// conj(x) / n(x); InputError on zero.
  CDElement inverse() const;
  CDElement scaled(const Rational& r) const;
  /// Projection to another level: truncates coordinates going down (NOT an
  /// algebra map) and zero-pads going up (an embedding).
  CDElement to_level(int level) const;

  CDElement operator-() const;
  friend CDElement operator+(const CDElement& a, const CDElement& b);
  friend CDElement operator-(const CDElement& a, const CDElement& b);
  friend CDElement operator*(const CDElement& a, const CDElement& b);
  bool operator==(const CDElement&) const = default;

 private:
  int level_;
  std::vector<Rational> c_;
};

const char* cd_level_name(int level);           // "R", "C", "H", "O"
int cd_level_from_name(const std::string& name);

/// Hermitian 3x3 element over a Cayley-Dickson algebra: real diagonal
/// (a, b, c) and upper off-diagonal entries x12, x13, x23; the lower
/// triangle is implied by conjugation.
struct H3Element {
  int level = 0;
  std::array<Rational, 3> diag{};
  std::array<CDElement, 3> off{};  ///< (1,2), (1,3), (2,3)

  static H3Element zero(int level);
  static H3Element identity(int level);
  static H3Element diagonal(int level, const Rational& a, const Rational& b,
                            const Rational& c);

  H3Element scaled(const Rational& r) const;
  bool operator==(const H3Element&) const = default;
};

H3Element operator+(const H3Element& x, const H3Element& y);
H3Element operator-(const H3Element& x, const H3Element& y);

/// Jordan product x o y = (xy + yx)/2 via the Hermitian matrix product.
H3Element jordan_mul(const H3Element& x, const H3Element& y);

Rational h3_trace(const H3Element& x);
/// Trace form T(x, y) = trace(x o y).
Rational trace_inner(const H3Element& x, const H3Element& y);

/// The cubic form data: trace, second coefficient sigma, Freudenthal
/// determinant
///   det = abc - a n(x23) - b n(x13) - c n(x12) + 2 Re((x12 x23) conj(x13))
/// (association order fixed as written), and the characteristic polynomial
///   char(t) = t^3 - trace t^2 + sigma t - det.
struct FreudenthalData {
  Rational det;
  Rational trace;
  Rational sigma;
  UnivariateExact char_poly;
};

FreudenthalData freudenthal(const H3Element& x);

/// char(x) evaluated at x in the Jordan algebra (power-associative, so
/// x^3 is unambiguous); zero exactly, by Cayley-Hamilton.
H3Element cayley_hamilton_residual(const H3Element& x);

/// Adjoint x# = x^2 - trace(x) x + sigma(x) I; satisfies x o x# = det(x) I.
H3Element adjoint(const H3Element& x);
/// Freudenthal cross x # y = (x+y)# - x# - y#; joins points / meets lines
/// in the associated projective plane.
H3Element jordan_cross(const H3Element& x, const H3Element& y);

/// Eigenvalues (roots of char, always real here) in descending order, and
/// the Jordan rank = number of nonzero eigenvalues = degree of
/// det(I + t x) in t.
struct JordanSpectrum {
  UnivariateExact char_poly;
  std::vector<RootInfo> roots;  ///< descending, with multiplicities
  int jrank = 0;
};

JordanSpectrum spectral(const H3Element& x);
/// Just the rank, decided from (det, sigma, trace) without root isolation.
int jordan_rank(const H3Element& x);

bool is_idempotent(const H3Element& x);
/// Jordan frame: three idempotents, pairwise products zero, summing to I.
bool frame_verify(const H3Element& c1, const H3Element& c2,
                  const H3Element& c3);

/// Rank-one idempotent from a nonzero coordinate vector v: v is first
/// right-normalized so its last nonzero slot is real (u_i = v_i conj(v_k)),
/// which keeps v v* inside an associative pattern even over the octonions;
/// then P = u u* / trace(u u*).  The result is gated by is_idempotent,
/// trace 1 and rank 1; a failure throws InputError asking for a
/// renormalized input.
H3Element rank_one_from_vector(const std::vector<CDElement>& v);

/// r(S) = jordan_rank(sum of the selected points), exhaustively over all
/// subsets.  Points must be rank-one idempotents (InputError listing the
/// offenders otherwise); at most 16 points.
RankTable matroid_from_points(const std::vector<H3Element>& points);

/// Rank-3 target matroid given by its dependent triples over a simple
/// ground set (no loops, no parallel pairs).
struct RepresentationTarget {
  int ground = 0;
  int rank = 3;
  std::vector<SetMask> nonbases;  ///< 3-element masks
};

/// Rank function of the target: |S| capped at 3, dropping to 2 exactly on
/// the sets all of whose triples are dependent.  The polymatroid axioms
/// are verified; a failure means the triple list is not a matroid and
/// throws InputError.
RankTable target_rank_table(const RepresentationTarget& target);

struct RankMismatch {
  SetMask subset = 0;
  int expected = 0;  ///< target rank
  int actual = 0;    ///< rank from the points
};

struct RepresentationReport {
  bool ok = false;
  std::vector<RankMismatch> mismatches;
};

/// Exhaustive comparison of the point-configuration rank function against
/// the target on every subset.
RepresentationReport verify_representation(const std::vector<H3Element>& points,
                                           const RepresentationTarget& target);

}  // namespace vamos

#endif  // VAMOS_JORDAN_HPP
