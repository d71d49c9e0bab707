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

#include "ocg/group.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "ocg/numtheory.hpp"

namespace ocg {

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;
  std::vector<uint32_t> size;

  explicit UnionFind(uint32_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

bool is_power_of(uint64_t n, uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

GroupHandle handle_from_parts(int degree, std::vector<Perm> gens,
                              StabChain chain, uint64_t budget) {
  GroupHandle H;
  H.degree = degree;
  H.element_budget = budget;
  H.generators = std::move(gens);
  H.order = chain.order();
  H.bsgs = std::move(chain);
  return H;
}

}  // namespace

GroupHandle bsgs_build(int degree, const std::vector<Perm>& generators,
                       uint64_t element_budget,
                       const std::vector<Pt>& forced_base) {
  GroupHandle G;
  G.degree = degree;
  G.element_budget = element_budget;
  G.bsgs = StabChain::build(degree, generators, forced_base);
  for (const Perm& g : generators) {
    if (!is_identity(g)) G.generators.push_back(g);
  }
  G.order = G.bsgs.order();
  return G;
}

void check_enumeration_budget(const GroupHandle& G, const char* where) {
  if (G.order > G.element_budget) {
    throw BudgetExceeded(std::string(where) + ": group order " +
                         std::to_string(G.order) + " exceeds element budget " +
                         std::to_string(G.element_budget));
  }
}

std::vector<Perm> element_list(const GroupHandle& G) {
  check_enumeration_budget(G, "element_list");
  std::vector<Perm> out;
  out.reserve(G.order);
  G.bsgs.for_each_element([&](const Perm& g) { out.push_back(g); });
  return out;
}

ElementIndex::ElementIndex(int degree_, uint64_t expected) : degree(degree_) {
  if (expected > (uint64_t{1} << 31)) {
    throw std::invalid_argument("ElementIndex: too many elements");
  }
  uint64_t slots = 16;
  while (slots < expected * 2) slots <<= 1;
  table.assign(slots, npos);
  flat.reserve(expected * degree);
}

Perm ElementIndex::perm_at(uint32_t id) const {
  return Perm(at(id), at(id) + degree);
}

uint32_t ElementIndex::find(const Pt* a) const {
  uint64_t mask = table.size() - 1;
  for (uint64_t k = perm_hash(a, degree) & mask;; k = (k + 1) & mask) {
    uint32_t id = table[k];
    if (id == npos) return npos;
    if (std::memcmp(at(id), a, degree * sizeof(Pt)) == 0) return id;
  }
}

uint32_t ElementIndex::insert(const Pt* a) {
  if (uint64_t{count} * 2 >= table.size()) {
    std::vector<uint32_t> grown(table.size() * 2, npos);
    uint64_t mask = grown.size() - 1;
    for (uint32_t id = 0; id < count; ++id) {
      uint64_t k = perm_hash(at(id), degree) & mask;
      while (grown[k] != npos) k = (k + 1) & mask;
      grown[k] = id;
    }
    table.swap(grown);
  }
  uint64_t mask = table.size() - 1;
  for (uint64_t k = perm_hash(a, degree) & mask;; k = (k + 1) & mask) {
    uint32_t id = table[k];
    if (id == npos) {
      table[k] = count;
      flat.insert(flat.end(), a, a + degree);
      return count++;
    }
    if (std::memcmp(at(id), a, degree * sizeof(Pt)) == 0) return id;
  }
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupHandle& G) {
  check_enumeration_budget(G, "conjugacy_classes");
  const int deg = G.degree;
  const uint32_t n = static_cast<uint32_t>(G.order);

  struct Pending {
    Perm rep;
    uint64_t size = 0;
    uint64_t ord = 0;
  };
  std::vector<Pending> pend;
  {
    ElementIndex idx(deg, G.order);
    enumerate_elements(G, [&](const Perm& g) { idx.insert(g.data()); });
    if (idx.count != n) {
      throw std::logic_error("conjugacy_classes: enumeration size mismatch");
    }
    UnionFind uf(n);
    Perm w(deg);
    for (uint32_t i = 0; i < n; ++i) {
      for (const Perm& g : G.generators) {
        conjugate_into(w.data(), idx.at(i), g.data(), deg);
        uint32_t j = idx.find(w.data());
        if (j == ElementIndex::npos) {
          throw std::logic_error("conjugacy_classes: conjugate missing");
        }
        uf.unite(i, j);
      }
    }
    std::vector<int32_t> class_of_root(n, -1);
    std::vector<uint32_t> min_id;
    std::vector<uint64_t> csize;
    for (uint32_t i = 0; i < n; ++i) {
      uint32_t r = uf.find(i);
      int32_t c = class_of_root[r];
      if (c < 0) {
        class_of_root[r] = static_cast<int32_t>(min_id.size());
        min_id.push_back(i);
        csize.push_back(uf.size[r]);
        continue;
      }
      if (std::memcmp(idx.at(i), idx.at(min_id[c]), deg * sizeof(Pt)) < 0) {
        min_id[c] = i;
      }
    }
    pend.reserve(min_id.size());
    for (size_t c = 0; c < min_id.size(); ++c) {
      pend.push_back({idx.perm_at(min_id[c]), csize[c],
                      element_order(idx.at(min_id[c]), deg)});
    }
  }
  std::sort(pend.begin(), pend.end(), [](const Pending& a, const Pending& b) {
    if (a.ord != b.ord) return a.ord < b.ord;
    if (a.size != b.size) return a.size < b.size;
    return a.rep < b.rep;
  });

  // One pass collects centralizer generators for every class at once.
  std::vector<std::vector<Perm>> cgens(pend.size());
  std::vector<StabChain> cchain(pend.size());
  std::vector<uint64_t> cord(pend.size(), 1);
  SiftScratch s;
  enumerate_elements(G, [&](const Perm& g) {
    for (size_t c = 0; c < pend.size(); ++c) {
      if (pend[c].ord == 1) continue;
      if (cord[c] * pend[c].size == G.order) continue;
      if (!commute(g.data(), pend[c].rep.data(), deg)) continue;
      if (cchain[c].contains(g, s)) continue;
      cgens[c].push_back(g);
      cchain[c] = StabChain::build(deg, cgens[c]);
      cord[c] = cchain[c].order();
    }
  });

  std::vector<ConjugacyClass> out;
  out.reserve(pend.size());
  for (size_t c = 0; c < pend.size(); ++c) {
    ConjugacyClass cc;
    cc.representative = std::move(pend[c].rep);
    cc.size = pend[c].size;
    cc.element_order = pend[c].ord;
    cc.centralizer = (cc.element_order == 1)
                         ? G
                         : handle_from_parts(deg, std::move(cgens[c]),
                                             std::move(cchain[c]),
                                             G.element_budget);
    if (cc.size * cc.centralizer.order != G.order) {
      throw std::logic_error(
          "conjugacy_classes: class size times centralizer order is off");
    }
    out.push_back(std::move(cc));
  }
  return out;
}

GroupHandle centralizer(const GroupHandle& G, const Perm& x) {
  if (!G.contains(x)) {
    throw std::invalid_argument("centralizer: element outside the group");
  }
  if (is_identity(x)) return G;
  check_enumeration_budget(G, "centralizer");
  std::vector<Perm> gens;
  StabChain chain = StabChain::build(G.degree, {});
  uint64_t ord = 1;
  SiftScratch s;
  G.bsgs.for_each_element([&](const Perm& g) {
    if (ord == G.order) return;
    if (!commute(g.data(), x.data(), G.degree)) return;
    if (chain.contains(g, s)) return;
    gens.push_back(g);
    chain = StabChain::build(G.degree, gens);
    ord = chain.order();
  });
  return handle_from_parts(G.degree, std::move(gens), std::move(chain),
                           G.element_budget);
}

GroupHandle generated_subgroup(const GroupHandle& G,
                               const std::vector<Perm>& gens) {
  for (const Perm& g : gens) {
    if (!G.contains(g)) {
      throw std::invalid_argument("generated_subgroup: element outside the group");
    }
  }
  return bsgs_build(G.degree, gens, G.element_budget);
}

GroupHandle normalizer(const GroupHandle& G, const GroupHandle& H) {
  if (H.degree != G.degree) {
    throw std::invalid_argument("normalizer: degree mismatch");
  }
  for (const Perm& h : H.generators) {
    if (!G.contains(h)) {
      throw std::invalid_argument("normalizer: subgroup not inside the group");
    }
  }
  check_enumeration_budget(G, "normalizer");
  std::vector<Perm> gens = H.generators;
  StabChain chain = StabChain::build(G.degree, gens);
  uint64_t ord = chain.order();
  Perm w(G.degree);
  SiftScratch s;
  G.bsgs.for_each_element([&](const Perm& g) {
    if (ord == G.order) return;
    for (const Perm& h : H.generators) {
      conjugate_into(w.data(), h.data(), g.data(), G.degree);
      if (!H.bsgs.contains(w, s)) return;
    }
    if (chain.contains(g, s)) return;
    gens.push_back(g);
    chain = StabChain::build(G.degree, gens);
    ord = chain.order();
  });
  return handle_from_parts(G.degree, std::move(gens), std::move(chain),
                           G.element_budget);
}

GroupHandle sylow_subgroup(const GroupHandle& G, uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("sylow_subgroup: p must be prime");
  }
  if (G.order % p != 0) {
    throw std::invalid_argument("sylow_subgroup: p does not divide the order");
  }
  check_enumeration_budget(G, "sylow_subgroup");
  const uint64_t target = p_part(G.order, p);

  Perm seed;
  uint64_t best = 1;
  G.bsgs.for_each_element([&](const Perm& g) {
    if (best == target) return;
    uint64_t o = element_order(g.data(), G.degree);
    if (o <= best || !is_power_of(o, p)) return;
    best = o;
    seed = g;
  });
  if (best == 1) throw std::logic_error("sylow_subgroup: no p-element found");

  std::vector<Perm> gens = {seed};
  StabChain chain = StabChain::build(G.degree, gens);
  uint64_t ord = chain.order();
  Perm w(G.degree);
  SiftScratch s;
  while (ord < target) {
    // Some p-element outside P normalizes P whenever P is not yet Sylow.
    bool grew = false;
    G.bsgs.for_each_element([&](const Perm& g) {
      if (grew) return;
      uint64_t o = element_order(g.data(), G.degree);
      if (o == 1 || !is_power_of(o, p)) return;
      if (chain.contains(g, s)) return;
      for (const Perm& h : gens) {
        conjugate_into(w.data(), h.data(), g.data(), G.degree);
        if (!chain.contains(w, s)) return;
      }
      gens.push_back(g);
      chain = StabChain::build(G.degree, gens);
      ord = chain.order();
      grew = true;
    });
    if (!grew) {
      throw std::logic_error("sylow_subgroup: failed to grow the p-subgroup");
    }
  }
  return handle_from_parts(G.degree, std::move(gens), std::move(chain),
                           G.element_budget);
}

GroupHandle p_core(const GroupHandle& G, uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p_core: p must be prime");
  }
  if (G.order % p != 0) {
    return bsgs_build(G.degree, {}, G.element_budget);
  }
  GroupHandle P = sylow_subgroup(G, p);

  ElementIndex idx(G.degree, P.order);
  P.bsgs.for_each_element([&](const Perm& g) { idx.insert(g.data()); });
  std::vector<bool> alive(idx.count, true);

  std::vector<Perm> gen_invs;
  gen_invs.reserve(G.generators.size());
  for (const Perm& g : G.generators) gen_invs.push_back(inverse(g));

  // Replace K by K meet K^g per generator until stable; each step intersects
  // two groups, so K stays a group and settles on the p-core.
  Perm w(G.degree);
  std::vector<uint32_t> to_drop;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm& ginv : gen_invs) {
      to_drop.clear();
      for (uint32_t id = 0; id < idx.count; ++id) {
        if (!alive[id]) continue;
        conjugate_into(w.data(), idx.at(id), ginv.data(), G.degree);
        uint32_t j = idx.find(w.data());
        if (j == ElementIndex::npos || !alive[j]) to_drop.push_back(id);
      }
      for (uint32_t id : to_drop) alive[id] = false;
      if (!to_drop.empty()) changed = true;
    }
  }

  std::vector<Perm> gens;
  for (uint32_t id = 0; id < idx.count; ++id) {
    if (alive[id]) gens.push_back(idx.perm_at(id));
  }
  GroupHandle K = bsgs_build(G.degree, gens, G.element_budget);
  for (const Perm& k : K.generators) {
    for (const Perm& g : G.generators) {
      conjugate_into(w, k, g);
      if (!K.contains(w)) throw std::logic_error("p_core: result not normal");
    }
  }
  return K;
}

GroupHandle odd_generated_subgroup(const GroupHandle& G) {
  check_enumeration_budget(G, "odd_generated_subgroup");
  std::vector<Perm> gens;
  StabChain chain = StabChain::build(G.degree, {});
  uint64_t ord = 1;
  SiftScratch s;
  G.bsgs.for_each_element([&](const Perm& g) {
    if (ord == G.order) return;
    if (element_order(g.data(), G.degree) % 2 == 0) return;
    if (chain.contains(g, s)) return;
    gens.push_back(g);
    chain = StabChain::build(G.degree, gens);
    ord = chain.order();
  });
  return handle_from_parts(G.degree, std::move(gens), std::move(chain),
                           G.element_budget);
}

bool is_abelian(const GroupHandle& G) {
  for (size_t i = 0; i < G.generators.size(); ++i) {
    for (size_t j = i + 1; j < G.generators.size(); ++j) {
      if (!commute(G.generators[i], G.generators[j])) return false;
    }
  }
  return true;
}

Perm canonical_right_coset_rep(const GroupHandle& U, const Perm& g) {
  Perm r = g;
  Perm tmp(r.size());
  for (const ChainLevel& L : U.bsgs.levels) {
    Pt best = L.orbit[0];
    for (Pt t : L.orbit) {
      if (r[t] < r[best]) best = t;
    }
    if (best != L.base_point) {
      compose_into(tmp, L.trans[L.slot[best]], r);
      std::swap(r, tmp);
    }
  }
  return r;
}

std::vector<Perm> right_transversal(const GroupHandle& G,
                                    const GroupHandle& U,
                                    uint64_t max_index) {
  if (U.degree != G.degree) {
    throw std::invalid_argument("right_transversal: degree mismatch");
  }
  for (const Perm& h : U.generators) {
    if (!G.contains(h)) {
      throw std::invalid_argument(
          "right_transversal: subgroup not inside the group");
    }
  }
  if (U.order == 0 || G.order % U.order != 0) {
    throw std::logic_error("right_transversal: order does not divide");
  }
  uint64_t index = G.order / U.order;
  if (index > max_index) {
    throw BudgetExceeded("right_transversal: index " + std::to_string(index) +
                         " exceeds the cap " + std::to_string(max_index));
  }
  ElementIndex seen(G.degree, index);
  std::vector<Perm> out;
  out.push_back(canonical_right_coset_rep(U, identity_perm(G.degree)));
  seen.insert(out.back().data());
  Perm prod(G.degree);
  for (size_t at = 0; at < out.size(); ++at) {
    for (const Perm& s : G.generators) {
      compose_into(prod, out[at], s);
      Perm r = canonical_right_coset_rep(U, prod);
      uint32_t before = seen.count;
      if (seen.insert(r.data()) == before) out.push_back(std::move(r));
    }
  }
  if (out.size() != index) {
    throw std::logic_error("right_transversal: walk found " +
                           std::to_string(out.size()) + " cosets, expected " +
                           std::to_string(index));
  }
  return out;
}

}  // namespace ocg
