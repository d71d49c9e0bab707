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

#ifndef OCG_GROUP_HPP
#define OCG_GROUP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocg/perm.hpp"
#include "ocg/stabchain.hpp"

namespace ocg {

inline constexpr uint64_t kDefaultElementBudget = 50'000'000;

// Thrown when an operation would enumerate more elements than the handle's
// element_budget allows.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupHandle {
  int degree = 0;
  std::vector<Perm> generators;
  StabChain bsgs;
  uint64_t order = 0;
  uint64_t element_budget = kDefaultElementBudget;

  bool contains(const Perm& g) const { return bsgs.contains(g); }
  bool contains(const Perm& g, SiftScratch& s) const {
    return bsgs.contains(g, s);
  }
};

// Builds a verified base and strong generating set. Identity generators are
// dropped from the stored generator list; malformed ones are rejected.
GroupHandle bsgs_build(int degree, const std::vector<Perm>& generators,
                       uint64_t element_budget = kDefaultElementBudget,
                       const std::vector<Pt>& forced_base = {});

void check_enumeration_budget(const GroupHandle& G, const char* where);

// Streams every element of G exactly once in a fixed deterministic order.
template <class F>
void enumerate_elements(const GroupHandle& G, F&& fn) {
  check_enumeration_budget(G, "enumerate_elements");
  G.bsgs.for_each_element(fn);
}

std::vector<Perm> element_list(const GroupHandle& G);

struct ConjugacyClass {
  Perm representative;      // lexicographically least member
  uint64_t size = 0;
  uint64_t element_order = 0;
  GroupHandle centralizer;  // centralizer of the representative
};

// Full class partition of G, sorted by (element order, size, representative).
// Every class carries the centralizer of its representative; the identity
// class carries G itself.
std::vector<ConjugacyClass> conjugacy_classes(const GroupHandle& G);

// Streaming filter over G followed by a BSGS rebuild on the survivors.
GroupHandle centralizer(const GroupHandle& G, const Perm& x);

// Subgroup generated by the given elements of G.
GroupHandle generated_subgroup(const GroupHandle& G,
                               const std::vector<Perm>& gens);

// Streaming filter: g survives when it conjugates every generator of H back
// into H.
GroupHandle normalizer(const GroupHandle& G, const GroupHandle& H);

// Grows a maximal p-power-order cyclic subgroup to a full Sylow p-subgroup
// by repeatedly adjoining a p-element of its normalizer.
GroupHandle sylow_subgroup(const GroupHandle& G, uint64_t p);

// Largest normal p-subgroup: the stable intersection of Sylow p-subgroup
// conjugates under the generators of G. Returns the trivial subgroup when p
// does not divide |G|.
GroupHandle p_core(const GroupHandle& G, uint64_t p);

// Subgroup generated by all elements of odd order.
GroupHandle odd_generated_subgroup(const GroupHandle& G);

// The member of the right coset U*g whose image tuple on U's base points is
// least. Two elements canonicalize to the same representative exactly when
// they lie in one coset.
Perm canonical_right_coset_rep(const GroupHandle& U, const Perm& g);

// All right coset representatives of U in G, in breadth-first order from
// the identity coset. Throws BudgetExceeded past max_index cosets.
std::vector<Perm> right_transversal(const GroupHandle& G,
                                    const GroupHandle& U,
                                    uint64_t max_index);

bool is_abelian(const GroupHandle& G);

// Packed store of distinct permutations of one degree with an open-addressing
// index from image array to id.
struct ElementIndex {
  static constexpr uint32_t npos = 0xffffffffu;

  int degree = 0;
  uint32_t count = 0;
  std::vector<Pt> flat;
  std::vector<uint32_t> table;  // npos marks an empty probe slot

  ElementIndex(int degree, uint64_t expected);
  const Pt* at(uint32_t id) const {
    return flat.data() + static_cast<size_t>(id) * degree;
  }
  Perm perm_at(uint32_t id) const;
  uint32_t find(const Pt* a) const;
  // Inserts a copy of a unless already present; returns its id either way.
  uint32_t insert(const Pt* a);
};

}  // namespace ocg

#endif  // OCG_GROUP_HPP
