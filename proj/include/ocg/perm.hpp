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

#ifndef OCG_PERM_HPP
#define OCG_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ocg {

using Pt = uint16_t;

// A permutation of {0..n-1} as its image array.
using Perm = std::vector<Pt>;

Perm identity_perm(int degree);
bool is_identity(const Perm& a);
bool is_valid_perm(const Perm& a);

// out[i] = b[a[i]]; a first, then b. out must not alias a or b.
void compose_into(Perm& out, const Perm& a, const Perm& b);
Perm compose(const Perm& a, const Perm& b);

void inverse_into(Perm& out, const Perm& a);
Perm inverse(const Perm& a);

// out = g^-1 * x * g, the conjugate of x by g. out must not alias x or g.
void conjugate_into(Perm& out, const Perm& x, const Perm& g);
Perm conjugate(const Perm& x, const Perm& g);

// Pointer forms over a common degree, for loops over packed element stores.
void compose_into(Pt* out, const Pt* a, const Pt* b, int degree);
void conjugate_into(Pt* out, const Pt* x, const Pt* g, int degree);

bool commute(const Perm& a, const Perm& b);
bool commute(const Pt* a, const Pt* b, int degree);

// Least k >= 1 with a^k = identity, as the lcm of cycle lengths.
uint64_t element_order(const Perm& a);
uint64_t element_order(const Pt* a, int degree);

uint64_t perm_hash(const Pt* a, int degree);
uint64_t perm_hash(const Perm& a);

// Disjoint-cycle text with 1-based points, e.g. "(1,2,3)(4,5)"; "()" is the
// identity. Whitespace between tokens is ignored.
Perm parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Perm& a);

}  // namespace ocg

#endif  // OCG_PERM_HPP
