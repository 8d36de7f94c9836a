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

#ifndef VAMOS_SYMFUN_HPP
#define VAMOS_SYMFUN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vamos/exactpoly.hpp"

namespace vamos {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is allowed (weight 0) and indexes the constant 1.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;

  /// (2, 2, ..., 2) with r twos.
  static Partition two_power(int r);
  /// (2, ..., 2, 1, 1) with r twos and two ones.
  static Partition two_power_one_one(int r);

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// All partitions of d, in a deterministic order.
std::vector<Partition> partitions_of(int d);

/// Monomial symmetric polynomial m_lambda in n variables; zero when the
/// partition has more parts than variables.
ExactPoly monomial_symmetric(int n, const Partition& lambda);

/// Elementary symmetric polynomial e_k in n variables; e_0 = 1; zero for
/// k > n.
ExactPoly elementary_symmetric(int n, int k);

/// Power sum p_k = x1^k + ... + xn^k, k >= 1.
ExactPoly power_sum(int n, int k);

/// Expression of a symmetric polynomial through e_1, ..., e_n: variable i
/// (0-based) of `expr` stands for e_{i+1} of the source variables.
struct EBasisExpr {
  ExactPoly expr;
};

/// Rewrites a symmetric polynomial in the elementary basis via leading-term
/// elimination in graded-lex order. Throws InputError (naming a violating
/// transposition) when P is not symmetric.
EBasisExpr to_e_basis(const ExactPoly& P);

/// Back-substitution e_i -> e_i(x_1..x_n): reproduces the source polynomial.
ExactPoly expand_e_basis(const EBasisExpr& Q, int n);

/// The lift operator: write P = Q(e_1,...,e_m), homogenize Q to degree d
/// with an extra variable y_0 (H = y_0^d Q(y_1/y_0, ...)), then substitute
/// y_j -> (j+1) e_{j+1}(x_1..x_{n_out}) for j = 0..m.
///
/// d defaults to the total degree of Q; homogenize_to overrides it upward
/// (identities proved by lifting fixed-degree expressions need the ambient
/// degree even when the minimal expression has lower degree).
/// n_out defaults to arity(P) + 1 so that no substituted e_k truncates away.
ExactPoly lift(const ExactPoly& P, int n_out = -1, int homogenize_to = -1);

enum class IdentityKind { kJensen, kBoost, kTsosConstant, kDoubledElementary };

IdentityKind identity_from_name(const std::string& name);
std::string identity_name(IdentityKind which);

struct IdentityResult {
  bool holds = false;
  ExactPoly difference;  // exactly zero when holds
};

/// Checks one of the four exact symmetric-function identities at arity n:
///   jensen:             m_{2^r} = sum_{k=0}^{2r} (-1)^{k+r} e_k e_{2r-k}
///   boost:              lift(m_{2^{r-1}}) = r^2 m_{2^r} + 2 m_{2^{r-1}1^2}
///   tsos_constant:      (1/2) sum_{|S|=r-1} p_2(x^S) prod_{i in S} x_i^2
///                         = (r/2) m_{2^r}
///   doubled_elementary: e_{2r}(x1,x1,...,xn,xn) - m_{2^r}
///                         = 4 (e_{r-1}e_{r+1} + e_{r-3}e_{r+3} + ...)
/// r >= 1 (r >= 2 for the last two).
IdentityResult verify_identity(IdentityKind which, int r, int n);

enum class InequalityKind { kLaguerreTuran, kNewton, kTuranRefined, kEng };

InequalityKind inequality_from_name(const std::string& name);
std::string inequality_name(InequalityKind which);

struct SampleStats {
  std::string which;
  int r = 0;
  int n = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  Rational min_value;
  std::vector<Rational> witness_point;  // empty when samples == 0
  bool nonnegative_on_samples = true;
  bool exact_zero_gap = false;
};

struct GapReport {
  ExactPoly gap;
  SampleStats stats;
};

/// Builds the gap polynomial (the side of the inequality that must be >= 0)
/// and samples it at `samples` seeded random rational points with
/// coordinates uniform in [-10, 10]:
///   laguerre_turan: r e_r^2 - (r+1) e_{r-1} e_{r+1}
///   newton:         e_r^2/C(n,r)^2 - e_{r-1}e_{r+1}/(C(n,r-1) C(n,r+1))
///   turan_refined:  r e_r^2 - (r+1) e_{r-1} e_{r+1} - m_{2^r}
///   eng:            (a_r e_{r-1}e_r - e_{r-2}e_{r+1})^2
///                     - C_r e_{r-2} e_r m_{2^r},
///                   a_r = 3(r-1)/(r+1), C_r = 9(r-1)/(r+1)^2
/// Sampling is evaluation-only: a negative sample falsifies, an all-clear
/// run is merely consistent with the inequality.
GapReport inequality_gap(InequalityKind which, int r, int n,
                         int samples = 10000, std::uint64_t seed = 0xC0FFEE);

}  // namespace vamos

#endif  // VAMOS_SYMFUN_HPP
