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

#ifndef VAMOS_RATIONAL_HPP
#define VAMOS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "vamos/errors.hpp"

namespace vamos {

/// Exact arbitrary-precision rational. All core arithmetic in this toolkit
/// runs on these; doubles appear only in explicitly "numeric" operations.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical (reduced, positive-denominator) form.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" (optional leading '-'). Anything else is an error.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  std::size_t i = 0;
  bool seen_digit = false, seen_slash = false;
  if (text[i] == '-' || text[i] == '+') ++i;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      seen_digit = true;
    } else if (ch == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;  // require digits after the slash too
    } else {
      throw InputError("malformed rational literal: " + text);
    }
  }
  if (!seen_digit) throw InputError("malformed rational literal: " + text);
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw InputError("malformed rational literal: " + text);
  if (q.get_den() == 0) throw InputError("zero denominator in: " + text);
  q.canonicalize();
  return q;
}

/// Canonical text form, inverse of parse_rational.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline int sign_of(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

/// Largest integer <= q.
inline Integer rational_floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Smallest integer >= q.
inline Integer rational_ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// --------------------------------------------------------------------------
// Deterministic seeded randomness.
//
// SplitMix64 is a tiny counter-style generator with full 64-bit state and
// well-studied output quality. Every random quantity in the toolkit is
// derived from integer draws of this stream, so runs are bit-reproducible
// across platforms for a fixed seed.
// --------------------------------------------------------------------------

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

/// Seeded stream of exact random rationals used by all sampling operations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_.next(); }

  /// Uniform integer in [lo, hi]. Modulo bias is < 2^-50 for the spans used
  /// here (a few hundred values) and determinism matters more than the
  /// last ulp of uniformity for these probes.
  long uniform_int(long lo, long hi) {
    if (lo > hi) throw InternalError("uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_.next() % span);
  }

  /// Uniform rational in [lo, hi] on the grid with denominator `denom`:
  /// numerator drawn uniformly from [lo*denom, hi*denom].
  Rational uniform_rational(long lo, long hi, long denom = 16) {
    return make_rational(uniform_int(lo * denom, hi * denom), denom);
  }

 private:
  SplitMix64 gen_;
  std::uint64_t seed_;
};

}  // namespace vamos

#endif  // VAMOS_RATIONAL_HPP
