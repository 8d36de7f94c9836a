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

#ifndef VAMOS_SETFAMILY_HPP
#define VAMOS_SETFAMILY_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "vamos/errors.hpp"

namespace vamos {

/// Subsets of a ground set of at most 64 elements are bitmasks; bit i is
/// ground element i+1 (external element labels are 1-based everywhere).
using SetMask = std::uint64_t;

inline int set_size(SetMask s) { return std::popcount(s); }

inline SetMask full_mask(int ground) {
  if (ground < 0 || ground > 64) throw InputError("ground set size out of range");
  return ground == 64 ? ~SetMask{0} : ((SetMask{1} << ground) - 1);
}

/// 1-based element labels -> mask.
inline SetMask mask_from_elements(const std::vector<int>& elements, int ground) {
  SetMask s = 0;
  for (int e : elements) {
    if (e < 1 || e > ground) throw InputError("element label out of range");
    SetMask bit = SetMask{1} << (e - 1);
    if (s & bit) throw InputError("repeated element label");
    s |= bit;
  }
  return s;
}

/// mask -> sorted 1-based element labels.
inline std::vector<int> elements_of(SetMask s) {
  std::vector<int> out;
  while (s) {
    int i = std::countr_zero(s);
    out.push_back(i + 1);
    s &= s - 1;
  }
  return out;
}

/// Calls fn(mask) for every size-k subset of {bit 0, ..., bit ground-1}
/// in increasing numeric order (Gosper's hack).
inline void for_each_subset_of_size(int ground, int k,
                                    const std::function<void(SetMask)>& fn) {
  if (k < 0 || k > ground) return;
  if (k == 0) {
    fn(0);
    return;
  }
  SetMask limit = full_mask(ground);
  SetMask s = (SetMask{1} << k) - 1;
  while (s <= limit) {
    fn(s);
    SetMask c = s & -s;
    SetMask r = s + c;
    if (r > limit || r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

/// Outcome of the basis-exchange axiom scan.
struct ExchangeCheck {
  bool ok = true;
  // On failure: ordered pair and the element of b1 \ b2 with no exchange.
  SetMask b1 = 0, b2 = 0;
  int element = -1;  // 1-based label
};

/// Verifies the basis-exchange axiom over all ordered pairs of a nonempty
/// equal-cardinality family: for every x in B1 \ B2 some y in B2 \ B1 has
/// (B1 - x) + y in the family.
inline ExchangeCheck basis_exchange_check(const std::vector<SetMask>& family) {
  ExchangeCheck out;
  if (family.empty()) throw InputError("empty family has no bases");
  int size = set_size(family.front());
  for (SetMask b : family)
    if (set_size(b) != size)
      throw InputError("basis family members must share one cardinality");
  std::unordered_set<SetMask> in_family(family.begin(), family.end());
  for (SetMask b1 : family) {
    for (SetMask b2 : family) {
      SetMask only1 = b1 & ~b2;
      SetMask candidates = b2 & ~b1;
      SetMask rest = only1;
      while (rest) {
        SetMask xbit = rest & (-rest);
        rest &= rest - 1;
        bool exchanged = false;
        SetMask ys = candidates;
        while (ys) {
          SetMask ybit = ys & (-ys);
          ys &= ys - 1;
          if (in_family.count((b1 ^ xbit) | ybit)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          out.ok = false;
          out.b1 = b1;
          out.b2 = b2;
          out.element = std::countr_zero(xbit) + 1;
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace vamos

#endif  // VAMOS_SETFAMILY_HPP
