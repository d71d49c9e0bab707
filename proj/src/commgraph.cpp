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

#include "ocg/commgraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "ocg/numtheory.hpp"

namespace ocg {

namespace {

// Path halving, union by size.
struct UnionFind {
  std::vector<uint32_t> parent;
  std::vector<uint32_t> weight;

  explicit UnionFind(uint32_t n) : parent(n), weight(n, 1) {
    for (uint32_t i = 0; i < n; ++i) parent[i] = i;
  }
  uint32_t find(uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (weight[a] < weight[b]) std::swap(a, b);
    parent[b] = a;
    weight[a] += weight[b];
  }
};

void check_rho(const std::vector<uint64_t>& rho) {
  for (size_t i = 0; i < rho.size(); ++i) {
    if (rho[i] == 2 || !is_prime(rho[i])) {
      throw std::invalid_argument("vertex_set: rho must contain odd primes");
    }
    if (i > 0 && rho[i - 1] >= rho[i]) {
      throw std::invalid_argument("vertex_set: rho must be strictly ascending");
    }
  }
}

uint32_t checked_vertex(const VertexIndex& X, const Pt* a, const char* where) {
  uint32_t id = X.elements.find(a);
  if (id == ElementIndex::npos) {
    throw std::logic_error(std::string(where) +
                           ": conjugate escapes the vertex set");
  }
  return id;
}

// Canonical numbering by least contained vertex id, plus the per-class
// census every component carries.
ComponentPartition finish_partition(const VertexIndex& X, UnionFind& uf) {
  ComponentPartition P;
  const uint32_t n = X.size();
  P.component_of.assign(n, 0);
  std::vector<uint32_t> comp_of_root(n, ElementIndex::npos);
  for (uint32_t v = 0; v < n; ++v) {
    uint32_t r = uf.find(v);
    if (comp_of_root[r] == ElementIndex::npos) {
      comp_of_root[r] = static_cast<uint32_t>(P.components.size());
      P.components.emplace_back();
    }
    P.component_of[v] = comp_of_root[r];
  }
  std::vector<std::map<uint32_t, uint64_t>> census(P.components.size());
  for (uint32_t v = 0; v < n; ++v) {
    ++census[P.component_of[v]][X.class_of[v]];
  }
  for (size_t k = 0; k < P.components.size(); ++k) {
    ComponentInfo& ci = P.components[k];
    for (const auto& [cls, cnt] : census[k]) {
      uint64_t ord = X.classes[cls].element_order;
      ci.size += cnt;
      ci.fingerprint.push_back({ord, cls, cnt});
      ci.class_ids.push_back(cls);
      if (ci.order_set.empty() || ci.order_set.back() != ord) {
        ci.order_set.push_back(ord);
      }
    }
  }
  return P;
}

}  // namespace

VertexIndex vertex_set(const GroupHandle& G, const std::vector<uint64_t>& rho,
                       const std::vector<ConjugacyClass>& classes) {
  check_rho(rho);
  uint64_t expected = 0;
  for (const ConjugacyClass& c : classes) {
    if (std::binary_search(rho.begin(), rho.end(), c.element_order)) {
      expected += c.size;
    }
  }
  VertexIndex X(G.degree, expected);
  X.rho = rho;
  for (const ConjugacyClass& c : classes) {
    if (std::binary_search(rho.begin(), rho.end(), c.element_order)) {
      X.classes.push_back(c);
    }
  }
  const int d = G.degree;
  Perm scratch(d);
  X.class_first.push_back(0);
  for (uint32_t ci = 0; ci < X.classes.size(); ++ci) {
    const ConjugacyClass& c = X.classes[ci];
    uint32_t first = X.elements.count;
    uint32_t rep = X.elements.insert(c.representative.data());
    if (rep != first) {
      throw std::logic_error("vertex_set: classes overlap");
    }
    X.class_of.push_back(ci);
    std::vector<uint32_t> queue{rep};
    while (!queue.empty()) {
      uint32_t v = queue.back();
      queue.pop_back();
      for (const Perm& g : G.generators) {
        conjugate_into(scratch.data(), X.elements.at(v), g.data(), d);
        uint32_t before = X.elements.count;
        uint32_t w = X.elements.insert(scratch.data());
        if (w != before) continue;
        X.class_of.push_back(ci);
        queue.push_back(w);
      }
    }
    if (X.elements.count - first != c.size) {
      throw std::logic_error("vertex_set: class walk found " +
                             std::to_string(X.elements.count - first) +
                             " members, class size is " +
                             std::to_string(c.size));
    }
    X.class_first.push_back(X.elements.count);
  }
  return X;
}

VertexIndex vertex_set(const GroupHandle& G,
                       const std::vector<uint64_t>& rho) {
  return vertex_set(G, rho, conjugacy_classes(G));
}

ComponentPartition components(const GroupHandle& G, const VertexIndex& X) {
  check_enumeration_budget(G, "components");
  const int d = X.degree;
  UnionFind uf(X.size());
  Perm scratch(d);
  for (size_t c = 0; c < X.classes.size(); ++c) {
    const ConjugacyClass& cls = X.classes[c];
    const uint32_t first = X.class_first[c];
    const uint32_t last = X.class_first[c + 1];

    // Vertices commuting with the representative.
    std::vector<uint32_t> nbrs;
    enumerate_elements(cls.centralizer, [&](const Perm& y) {
      uint64_t o = element_order(y);
      if (!std::binary_search(X.rho.begin(), X.rho.end(), o)) return;
      uint32_t id = checked_vertex(X, y.data(), "components");
      if (id != first) nbrs.push_back(id);
    });

    // Conjugator per class member, found by the same walk vertex_set used.
    std::vector<Pt> conj(size_t(last - first) * d);
    std::vector<uint8_t> have(last - first, 0);
    Pt* rep_slot = conj.data();
    for (int i = 0; i < d; ++i) rep_slot[i] = static_cast<Pt>(i);
    have[0] = 1;
    std::vector<uint32_t> queue{first};
    while (!queue.empty()) {
      uint32_t v = queue.back();
      queue.pop_back();
      const Pt* gv = conj.data() + size_t(v - first) * d;
      for (const Perm& g : G.generators) {
        conjugate_into(scratch.data(), X.elements.at(v), g.data(), d);
        uint32_t w = checked_vertex(X, scratch.data(), "components");
        if (w < first || w >= last) {
          throw std::logic_error("components: class walk left its id range");
        }
        if (have[w - first]) continue;
        compose_into(conj.data() + size_t(w - first) * d, gv, g.data(), d);
        have[w - first] = 1;
        queue.push_back(w);
      }
    }

    // Each member meets the translated neighbor list.
    for (uint32_t v = first; v < last; ++v) {
      const Pt* gv = conj.data() + size_t(v - first) * d;
      for (uint32_t n : nbrs) {
        conjugate_into(scratch.data(), X.elements.at(n), gv, d);
        uf.unite(v, checked_vertex(X, scratch.data(), "components"));
      }
    }
  }
  return finish_partition(X, uf);
}

ComponentPartition components_naive(const VertexIndex& X) {
  const int d = X.degree;
  const uint32_t n = X.size();
  UnionFind uf(n);
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = a + 1; b < n; ++b) {
      if (commute(X.elements.at(a), X.elements.at(b), d)) uf.unite(a, b);
    }
  }
  return finish_partition(X, uf);
}

void classify(ComponentPartition& P, const GroupHandle& G,
              const VertexIndex& X) {
  const int d = X.degree;
  Perm scratch(d);
  std::vector<uint32_t> least(P.components.size(), ElementIndex::npos);
  for (uint32_t v = 0; v < X.size(); ++v) {
    if (least[P.component_of[v]] == ElementIndex::npos) {
      least[P.component_of[v]] = v;
    }
  }
  for (size_t k = 0; k < P.components.size(); ++k) {
    // Conjugation permutes components, so one vertex decides closure.
    bool big = true;
    for (const Perm& g : G.generators) {
      conjugate_into(scratch.data(), X.elements.at(least[k]), g.data(), d);
      uint32_t w = checked_vertex(X, scratch.data(), "classify");
      if (P.component_of[w] != k) {
        big = false;
        break;
      }
    }
    P.components[k].big = big;
  }
  for (const ComponentInfo& ci : P.components) {
    for (const auto& row : ci.fingerprint) {
      bool full = row[2] == X.classes[row[1]].size;
      if (ci.big && !full) {
        throw std::logic_error("classify: big component misses part of class " +
                               std::to_string(row[1]));
      }
      if (!ci.big && full) {
        throw std::logic_error(
            "classify: component holds all of class " + std::to_string(row[1]) +
            " yet moves under conjugation");
      }
    }
    if (!ci.big) continue;
    // A big component is the whole vertex set of its own order set.
    for (uint32_t c = 0; c < X.classes.size(); ++c) {
      if (!std::binary_search(ci.order_set.begin(), ci.order_set.end(),
                              X.classes[c].element_order)) {
        continue;
      }
      if (!std::binary_search(ci.class_ids.begin(), ci.class_ids.end(), c)) {
        throw std::logic_error(
            "classify: big component misses class " + std::to_string(c) +
            " of a matching order");
      }
    }
  }
  P.classified = true;
}

GroupHandle component_stabilizer(const GroupHandle& G, const VertexIndex& X,
                                 const ComponentPartition& P,
                                 uint32_t vertex) {
  const int d = G.degree;
  const Perm x = X.elements.perm_at(vertex);
  const uint32_t target = P.component_of[vertex];
  std::vector<Perm> gens;
  StabChain cur = StabChain::build(d, {});
  SiftScratch s;
  Perm scratch(d);
  enumerate_elements(G, [&](const Perm& g) {
    conjugate_into(scratch.data(), x.data(), g.data(), d);
    uint32_t w = checked_vertex(X, scratch.data(), "component_stabilizer");
    if (P.component_of[w] != target) return;
    if (cur.contains(g, s)) return;
    gens.push_back(g);
    cur = StabChain::build(d, gens);
  });
  GroupHandle H;
  H.degree = d;
  H.generators = std::move(gens);
  H.order = cur.order();
  H.bsgs = std::move(cur);
  H.element_budget = G.element_budget;
  return H;
}

bool class_connected(const GroupHandle& G, const ConjugacyClass& cls) {
  check_enumeration_budget(G, "class_connected");
  const int d = G.degree;
  Perm scratch(d);

  // Index the class, keeping a conjugator per member.
  ElementIndex members(d, cls.size);
  members.insert(cls.representative.data());
  std::vector<Pt> conj(size_t(cls.size) * d);
  for (int i = 0; i < d; ++i) conj[i] = static_cast<Pt>(i);
  std::vector<uint32_t> queue{0};
  while (!queue.empty()) {
    uint32_t v = queue.back();
    queue.pop_back();
    for (const Perm& g : G.generators) {
      conjugate_into(scratch.data(), members.at(v), g.data(), d);
      uint32_t before = members.count;
      uint32_t w = members.insert(scratch.data());
      if (w != before) continue;
      if (w >= cls.size) {
        throw std::logic_error("class_connected: class walk overran");
      }
      compose_into(conj.data() + size_t(w) * d,
                   conj.data() + size_t(v) * d, g.data(), d);
      queue.push_back(w);
    }
  }
  if (members.count != cls.size) {
    throw std::logic_error("class_connected: class walk found " +
                           std::to_string(members.count) + " members");
  }

  // Class members commuting with the representative.
  std::vector<uint32_t> nbrs;
  enumerate_elements(cls.centralizer, [&](const Perm& y) {
    uint32_t id = members.find(y.data());
    if (id != ElementIndex::npos && id != 0) nbrs.push_back(id);
  });
  if (nbrs.empty()) return cls.size <= 1;

  std::vector<uint8_t> visited(cls.size, 0);
  visited[0] = 1;
  uint64_t reached = 1;
  queue.assign(1, 0);
  while (!queue.empty()) {
    uint32_t v = queue.back();
    queue.pop_back();
    const Pt* gv = conj.data() + size_t(v) * d;
    for (uint32_t n : nbrs) {
      conjugate_into(scratch.data(), members.at(n), gv, d);
      uint32_t w = members.find(scratch.data());
      if (w == ElementIndex::npos) {
        throw std::logic_error("class_connected: neighbor left the class");
      }
      if (visited[w]) continue;
      visited[w] = 1;
      ++reached;
      queue.push_back(w);
    }
  }
  return reached == cls.size;
}

PrimeLinkGraph prime_link_graph(const std::vector<ConjugacyClass>& classes,
                                uint64_t group_order) {
  PrimeLinkGraph PL;
  PL.primes = odd_prime_factors(group_order);
  const size_t m = PL.primes.size();
  PL.edge.assign(m, std::vector<uint8_t>(m, 0));
  for (const ConjugacyClass& c : classes) {
    auto it = std::lower_bound(PL.primes.begin(), PL.primes.end(),
                               c.element_order);
    if (it == PL.primes.end() || *it != c.element_order) continue;
    size_t i = size_t(it - PL.primes.begin());
    for (uint64_t r2 : odd_prime_factors(c.centralizer.order)) {
      auto jt = std::lower_bound(PL.primes.begin(), PL.primes.end(), r2);
      PL.edge[i][size_t(jt - PL.primes.begin())] = 1;
    }
  }
  UnionFind uf(static_cast<uint32_t>(m));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (PL.edge[i][j]) uf.unite(static_cast<uint32_t>(i),
                                  static_cast<uint32_t>(j));
    }
  }
  PL.component_of.resize(m);
  for (size_t i = 0; i < m; ++i) {
    PL.component_of[i] = uf.find(static_cast<uint32_t>(i));
  }
  return PL;
}

PrimeLinkGraph prime_link_graph(const GroupHandle& G) {
  return prime_link_graph(conjugacy_classes(G), G.order);
}

std::vector<uint64_t> PrimeLinkGraph::prime_component(uint64_t r) const {
  auto it = std::lower_bound(primes.begin(), primes.end(), r);
  if (it == primes.end() || *it != r) {
    throw std::invalid_argument("prime_component: " + std::to_string(r) +
                                " is not an odd prime divisor");
  }
  uint32_t root = component_of[size_t(it - primes.begin())];
  std::vector<uint64_t> out;
  for (size_t i = 0; i < primes.size(); ++i) {
    if (component_of[i] == root) out.push_back(primes[i]);
  }
  return out;
}

}  // namespace ocg
