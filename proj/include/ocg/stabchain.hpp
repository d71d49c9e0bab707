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

#ifndef OCG_STABCHAIN_HPP
#define OCG_STABCHAIN_HPP

#include <cstdint>
#include <vector>

#include "ocg/perm.hpp"

namespace ocg {

// One level of a stabilizer chain: the orbit of base_point under the
// generators fixing all earlier base points, with a transversal.
struct ChainLevel {
  Pt base_point = 0;
  std::vector<Pt> orbit;          // discovery order; orbit[0] == base_point
  std::vector<int32_t> slot;      // point -> orbit index, -1 outside
  std::vector<Perm> trans;        // trans[k] maps base_point to orbit[k]
  std::vector<Perm> trans_inv;
  std::vector<int> gen_ids;       // strong generators active at this level
};

// Reusable buffers so sifting inside element streams stays allocation-free.
struct SiftScratch {
  Perm residue;
  Perm tmp;
};

// Base and strong generating set built by deterministic Schreier-Sims.
// The construction closes every level under Schreier generators, which is
// itself the membership verification: no randomness is involved.
struct StabChain {
  int degree = 0;
  std::vector<Pt> base;
  std::vector<Perm> strong;       // strong[i] moves base[depth(i)] only
  std::vector<ChainLevel> levels;

  // forced_base points become the leading base points in the given order,
  // so generators_at(forced_base.size()) generates their pointwise
  // stabilizer.
  static StabChain build(int degree, const std::vector<Perm>& gens,
                         const std::vector<Pt>& forced_base = {});

  uint64_t order() const;
  bool contains(const Perm& g) const;
  bool contains(const Perm& g, SiftScratch& s) const;

  // Strips g level by level starting at `from`. Returns the level where
  // stripping stopped; s.residue is the unstripped remainder. A residue
  // equal to the identity means g lies in the level-`from` stabilizer group.
  size_t sift(const Perm& g, SiftScratch& s, size_t from = 0) const;

  // Strong generators fixing base[0..i-1]; generators_at(0) generates G.
  std::vector<Perm> generators_at(size_t i) const;

  // Visits every group element exactly once, deterministically, composing
  // one transversal element per step. fn must not retain the reference.
  template <class F>
  void for_each_element(F&& fn) const {
    const Perm id = identity_perm(degree);
    if (levels.empty()) {
      fn(id);
      return;
    }
    std::vector<Perm> prefix(levels.size() + 1, id);
    walk_elements(levels.size(), prefix, fn);
  }

 private:
  void close_level(size_t i);
  void extend_orbit(size_t i);
  void register_strong(const Perm& g, size_t first, size_t last);

  template <class F>
  void walk_elements(size_t lev, std::vector<Perm>& prefix, F&& fn) const {
    if (lev == 0) {
      const Perm& g = prefix[0];
      fn(g);
      return;
    }
    const ChainLevel& L = levels[lev - 1];
    for (size_t k = 0; k < L.trans.size(); ++k) {
      compose_into(prefix[lev - 1], prefix[lev], L.trans[k]);
      walk_elements(lev - 1, prefix, fn);
    }
  }
};

}  // namespace ocg

#endif  // OCG_STABCHAIN_HPP
