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

#include "ocg/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "ocg/numtheory.hpp"

namespace ocg {

namespace {

// Least primitive root mod p.
uint32_t primitive_root(uint32_t p) {
  if (p == 2) return 1;
  PrimeSet rs = prime_factors(p - 1);
  for (uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 r : rs) {
      if (powmod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

// Multiplies r by x modulo the monic polynomial c_0..c_e over GF(p).
void times_x(std::vector<uint32_t>& r, const std::vector<uint32_t>& poly,
             uint32_t p) {
  int e = static_cast<int>(r.size());
  uint32_t top = r[e - 1];
  for (int i = e - 1; i > 0; --i) r[i] = r[i - 1];
  r[0] = 0;
  if (top == 0) return;
  for (int i = 0; i < e; ++i) {
    r[i] = (r[i] + (p - poly[i] % p) * top) % p;
  }
}

uint32_t code_of(const std::vector<uint32_t>& r, uint32_t p) {
  uint32_t c = 0;
  for (size_t i = r.size(); i-- > 0;) c = c * p + r[i];
  return c;
}

// True when x has multiplicative period exactly q-1 in GF(p)[x]/(poly) with
// poly of degree >= 2: the powers of x then exhaust all nonzero residues,
// which forces the quotient to be a field with x primitive. Requires
// poly(0) != 0 so x is a unit and its power sequence is purely periodic.
bool x_is_primitive(const std::vector<uint32_t>& poly, uint32_t p, uint32_t q) {
  int e = static_cast<int>(poly.size()) - 1;
  std::vector<uint32_t> r(e, 0);
  r[1] = 1;
  const std::vector<uint32_t> start = r;
  for (uint32_t k = 1; k < q - 1; ++k) {
    times_x(r, poly, p);
    if (r == start) return false;  // x^k = 1 with k < q-1
  }
  times_x(r, poly, p);
  return r == start;
}

std::unique_ptr<Field> build_field(uint32_t q) {
  u64 base = 0;
  int exp = 0;
  if (q < 2 || q > 65536 || !is_prime_power(q, &base, &exp)) {
    throw std::invalid_argument("get_field: q must be a prime power in range");
  }
  auto F = std::make_unique<Field>();
  F->q = q;
  F->p = static_cast<uint32_t>(base);
  F->e = exp;

  uint32_t p = F->p;
  int e = F->e;
  if (e == 1) {
    F->poly = {(p - primitive_root(p)) % p, 1};
  } else {
    bool found = false;
    for (uint32_t v = 1; v < q && !found; ++v) {
      std::vector<uint32_t> cand(e + 1, 0);
      uint32_t t = v;
      for (int i = 0; i < e; ++i) {
        cand[i] = t % p;
        t /= p;
      }
      cand[e] = 1;
      if (cand[0] == 0) continue;
      if (x_is_primitive(cand, p, q)) {
        F->poly = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("get_field: no primitive polynomial");
  }

  // Walk alpha^0 .. alpha^(q-2) once to lay down logs, then read off the
  // Zech table from the successor codes.
  std::vector<uint32_t> log_of(q, 0);
  std::vector<uint32_t> code_at(q - 1, 0);
  std::vector<uint32_t> r(e, 0);
  r[0] = 1;
  for (uint32_t k = 0; k < q - 1; ++k) {
    uint32_t c = code_of(r, p);
    code_at[k] = c;
    log_of[c] = k;
    times_x(r, F->poly, p);
  }
  if (code_of(r, p) != 1) {
    throw std::logic_error("get_field: generator period mismatch");
  }
  F->zech.assign(q - 1, Field::zero);
  for (uint32_t k = 0; k < q - 1; ++k) {
    uint32_t c = code_at[k];
    uint32_t c0 = c % p;
    uint32_t plus1 = c - c0 + (c0 + 1) % p;
    F->zech[k] = plus1 == 0 ? Field::zero
                            : static_cast<Field::Elt>(log_of[plus1] + 1);
  }
  F->int_rep.assign(p, Field::zero);
  for (uint32_t m = 1; m < p; ++m) {
    F->int_rep[m] = static_cast<Field::Elt>(log_of[m] + 1);
  }
  return F;
}

}  // namespace

Field::Elt Field::inv(Elt a) const {
  if (a == zero) throw std::domain_error("Field::inv: zero");
  return static_cast<Elt>((q - 1 - (a - 1u)) % (q - 1) + 1u);
}

Field::Elt Field::pow(Elt a, uint64_t k) const {
  if (a == zero) return k == 0 ? one : zero;
  uint64_t ea = (static_cast<uint64_t>(a - 1u) * (k % (q - 1))) % (q - 1);
  return static_cast<Elt>(ea + 1);
}

const Field& get_field(uint32_t q) {
  static std::mutex lock;
  static std::map<uint32_t, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(q);
  if (it == cache.end()) {
    it = cache.emplace(q, build_field(q)).first;
  }
  return *it->second;
}

}  // namespace ocg
