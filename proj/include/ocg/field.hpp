// Copyright 2026 The ocg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OCG_FIELD_HPP
#define OCG_FIELD_HPP

#include <cstdint>
#include <vector>

namespace ocg {

// GF(q) with elements as integer indices: 0 is the zero element and index
// v in [1, q-1] is alpha^(v-1) for a fixed primitive alpha. Addition goes
// through a Zech logarithm table; multiplication is exponent arithmetic.
//
// The defining polynomial is the first primitive monic polynomial over
// GF(p) in ascending order of its coefficient value sum(c_i p^i), so every
// run constructs the same field. For prime q, alpha is the least primitive
// root mod p.
struct Field {
  using Elt = uint16_t;

  uint32_t q = 0;
  uint32_t p = 0;
  int e = 1;
  std::vector<uint32_t> poly;  // c_0..c_e of the defining polynomial, c_e = 1
  std::vector<Elt> zech;       // zech[k] = index of 1 + alpha^k
  std::vector<Elt> int_rep;    // int_rep[m] = index of m * 1, m < p

  static constexpr Elt zero = 0;
  static constexpr Elt one = 1;

  Elt add(Elt a, Elt b) const {
    if (a == zero) return b;
    if (b == zero) return a;
    uint32_t ea = a - 1u, eb = b - 1u;
    if (ea > eb) std::swap(ea, eb);
    Elt s = zech[eb - ea];
    if (s == zero) return zero;
    return static_cast<Elt>((ea + s - 1u) % (q - 1) + 1u);
  }
  Elt neg(Elt a) const {
    if (a == zero || p == 2) return a;
    return static_cast<Elt>((a - 1u + (q - 1) / 2) % (q - 1) + 1u);
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const {
    if (a == zero || b == zero) return zero;
    return static_cast<Elt>((a - 1u + b - 1u) % (q - 1) + 1u);
  }
  Elt inv(Elt a) const;
  Elt pow(Elt a, uint64_t k) const;
  Elt from_int(uint64_t m) const { return int_rep[m % p]; }
  // The primitive element alpha itself; q = 2 has no index-2 element.
  Elt generator() const { return q == 2 ? one : Elt{2}; }
};

// Builds (once) and returns the field with q elements, 2 <= q <= 65536.
// Throws std::invalid_argument when q is not a prime power in range.
const Field& get_field(uint32_t q);

}  // namespace ocg

#endif  // OCG_FIELD_HPP
