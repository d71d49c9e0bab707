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

#include "ocg/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace ocg {

Perm identity_perm(int degree) {
  Perm a(degree);
  std::iota(a.begin(), a.end(), Pt{0});
  return a;
}

bool is_identity(const Perm& a) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != i) return false;
  }
  return true;
}

bool is_valid_perm(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  for (Pt v : a) {
    if (v >= a.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void compose_into(Perm& out, const Perm& a, const Perm& b) {
  out.resize(a.size());
  compose_into(out.data(), a.data(), b.data(), static_cast<int>(a.size()));
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out;
  compose_into(out, a, b);
  return out;
}

void inverse_into(Perm& out, const Perm& a) {
  out.resize(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<Pt>(i);
}

Perm inverse(const Perm& a) {
  Perm out;
  inverse_into(out, a);
  return out;
}

void conjugate_into(Perm& out, const Perm& x, const Perm& g) {
  out.resize(x.size());
  conjugate_into(out.data(), x.data(), g.data(), static_cast<int>(x.size()));
}

Perm conjugate(const Perm& x, const Perm& g) {
  Perm out;
  conjugate_into(out, x, g);
  return out;
}

void compose_into(Pt* out, const Pt* a, const Pt* b, int degree) {
  for (int i = 0; i < degree; ++i) out[i] = b[a[i]];
}

void conjugate_into(Pt* out, const Pt* x, const Pt* g, int degree) {
  for (int i = 0; i < degree; ++i) out[g[i]] = g[x[i]];
}

bool commute(const Perm& a, const Perm& b) {
  return commute(a.data(), b.data(), static_cast<int>(a.size()));
}

bool commute(const Pt* a, const Pt* b, int degree) {
  for (int i = 0; i < degree; ++i) {
    if (b[a[i]] != a[b[i]]) return false;
  }
  return true;
}

uint64_t element_order(const Perm& a) {
  return element_order(a.data(), static_cast<int>(a.size()));
}

uint64_t element_order(const Pt* a, int degree) {
  std::vector<bool> seen(degree, false);
  uint64_t order = 1;
  for (int i = 0; i < degree; ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    int j = i;
    do {
      seen[j] = true;
      j = a[j];
      ++len;
    } while (j != i);
    order = std::lcm(order, len);
  }
  return order;
}

uint64_t perm_hash(const Pt* a, int degree) {
  // FNV-1a over the image bytes.
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < degree; ++i) {
    h = (h ^ (a[i] & 0xffu)) * 1099511628211ull;
    h = (h ^ (a[i] >> 8)) * 1099511628211ull;
  }
  return h;
}

uint64_t perm_hash(const Perm& a) {
  return perm_hash(a.data(), static_cast<int>(a.size()));
}

Perm parse_cycles(const std::string& text, int degree) {
  if (degree < 1 || degree > 65535) {
    throw std::invalid_argument("parse_cycles: bad degree");
  }
  Perm a = identity_perm(degree);
  std::vector<bool> used(degree, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<Pt> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("parse_cycles: expected point");
      }
      long v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw std::out_of_range("parse_cycles: point exceeds degree");
        ++i;
      }
      if (v < 1) throw std::out_of_range("parse_cycles: points are 1-based");
      if (used[v - 1]) throw std::invalid_argument("parse_cycles: repeated point");
      used[v - 1] = true;
      cycle.push_back(static_cast<Pt>(v - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw std::invalid_argument("parse_cycles: unclosed cycle");
    ++i;  // ')'
    for (size_t k = 0; k + 1 < cycle.size(); ++k) a[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) a[cycle.back()] = cycle.front();
    skip_ws();
  }
  return a;
}

std::string format_cycles(const Perm& a) {
  std::string out;
  std::vector<bool> seen(a.size(), false);
  for (size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == i) continue;
    out += '(';
    size_t j = i;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j + 1);
      seen[j] = true;
      first = false;
      j = a[j];
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace ocg
