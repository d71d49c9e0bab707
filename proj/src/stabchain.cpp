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

#include "ocg/stabchain.hpp"

#include <stdexcept>

namespace ocg {

namespace {

ChainLevel make_level(Pt base_point, int degree) {
  ChainLevel L;
  L.base_point = base_point;
  L.slot.assign(degree, -1);
  L.slot[base_point] = 0;
  L.orbit = {base_point};
  L.trans = {identity_perm(degree)};
  L.trans_inv = {identity_perm(degree)};
  return L;
}

}  // namespace

StabChain StabChain::build(int degree, const std::vector<Perm>& gens,
                           const std::vector<Pt>& forced_base) {
  if (degree < 1 || degree > 65535) {
    throw std::invalid_argument("bsgs_build: degree out of range");
  }
  StabChain c;
  c.degree = degree;

  std::vector<Perm> clean;
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree || !is_valid_perm(g)) {
      throw std::invalid_argument("bsgs_build: malformed generator");
    }
    if (!is_identity(g)) clean.push_back(g);
  }

  std::vector<bool> in_base(degree, false);
  for (Pt b : forced_base) {
    if (b >= degree) {
      throw std::invalid_argument("bsgs_build: forced base point out of range");
    }
    if (in_base[b]) {
      throw std::invalid_argument("bsgs_build: repeated forced base point");
    }
    in_base[b] = true;
    c.base.push_back(b);
  }
  for (const Perm& g : clean) {
    bool fixes_all = true;
    for (Pt b : c.base) {
      if (g[b] != b) {
        fixes_all = false;
        break;
      }
    }
    if (!fixes_all) continue;
    for (int p = 0; p < degree; ++p) {
      if (g[p] != p) {
        c.base.push_back(static_cast<Pt>(p));
        in_base[p] = true;
        break;
      }
    }
  }
  for (Pt b : c.base) c.levels.push_back(make_level(b, degree));

  // Every non-identity generator moves a base point; it acts at the levels
  // whose leading base points it fixes.
  for (const Perm& g : clean) {
    size_t m = 0;
    while (m < c.base.size() && g[c.base[m]] == c.base[m]) ++m;
    c.register_strong(g, 0, m);
  }
  for (size_t i = c.levels.size(); i-- > 0;) c.close_level(i);
  return c;
}

void StabChain::register_strong(const Perm& g, size_t first, size_t last) {
  int id = static_cast<int>(strong.size());
  strong.push_back(g);
  for (size_t k = first; k <= last; ++k) levels[k].gen_ids.push_back(id);
}

void StabChain::extend_orbit(size_t i) {
  ChainLevel& L = levels[i];
  Perm t;
  for (size_t idx = 0; idx < L.orbit.size(); ++idx) {
    for (size_t gi = 0; gi < L.gen_ids.size(); ++gi) {
      const Perm& g = strong[L.gen_ids[gi]];
      Pt q = g[L.orbit[idx]];
      if (L.slot[q] >= 0) continue;
      L.slot[q] = static_cast<int32_t>(L.orbit.size());
      L.orbit.push_back(q);
      compose_into(t, L.trans[idx], g);
      L.trans.push_back(t);
      L.trans_inv.push_back(inverse(t));
    }
  }
}

// Closes level i: completes the orbit, then sifts every Schreier generator
// through the deeper chain, registering nontrivial residues and re-closing
// the levels they touch. Deeper levels only grow during the scan, so pairs
// that already sifted to the identity stay sifted.
void StabChain::close_level(size_t i) {
  extend_orbit(i);
  Perm tmp, schreier;
  SiftScratch s;
  for (size_t idx = 0; idx < levels[i].orbit.size(); ++idx) {
    for (size_t gi = 0; gi < levels[i].gen_ids.size(); ++gi) {
      {
        const ChainLevel& L = levels[i];
        const Perm& g = strong[L.gen_ids[gi]];
        Pt q = g[L.orbit[idx]];
        compose_into(tmp, L.trans[idx], g);
        compose_into(schreier, tmp, L.trans_inv[L.slot[q]]);
      }
      if (is_identity(schreier)) continue;
      size_t stop = sift(schreier, s, i + 1);
      if (is_identity(s.residue)) continue;
      if (stop == levels.size()) {
        for (int p = 0; p < degree; ++p) {
          if (s.residue[p] != p) {
            base.push_back(static_cast<Pt>(p));
            levels.push_back(make_level(static_cast<Pt>(p), degree));
            break;
          }
        }
      }
      register_strong(s.residue, i + 1, stop);
      for (size_t k = stop + 1; k-- > i + 1;) close_level(k);
    }
  }
}

uint64_t StabChain::order() const {
  uint64_t n = 1;
  for (const ChainLevel& L : levels) {
    uint64_t s = L.orbit.size();
    if (n > UINT64_MAX / s) throw std::overflow_error("StabChain::order");
    n *= s;
  }
  return n;
}

size_t StabChain::sift(const Perm& g, SiftScratch& s, size_t from) const {
  s.residue = g;
  for (size_t i = from; i < levels.size(); ++i) {
    const ChainLevel& L = levels[i];
    Pt x = s.residue[L.base_point];
    if (L.slot[x] < 0) return i;
    compose_into(s.tmp, s.residue, L.trans_inv[L.slot[x]]);
    s.residue.swap(s.tmp);
  }
  return levels.size();
}

bool StabChain::contains(const Perm& g, SiftScratch& s) const {
  if (static_cast<int>(g.size()) != degree) return false;
  return sift(g, s) == levels.size() && is_identity(s.residue);
}

bool StabChain::contains(const Perm& g) const {
  SiftScratch s;
  return contains(g, s);
}

std::vector<Perm> StabChain::generators_at(size_t i) const {
  if (i > levels.size()) {
    throw std::out_of_range("generators_at: no such level");
  }
  std::vector<Perm> out;
  if (i == levels.size()) return out;
  out.reserve(levels[i].gen_ids.size());
  for (int id : levels[i].gen_ids) out.push_back(strong[id]);
  return out;
}

}  // namespace ocg
