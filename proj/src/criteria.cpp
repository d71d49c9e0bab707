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

#include "ocg/criteria.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "ocg/numtheory.hpp"

namespace ocg {

namespace {

void require_odd_prime_divisor(const GroupHandle& G, uint64_t p,
                               const char* who) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
  }
  if (G.order % p != 0) {
    throw std::invalid_argument(std::string(who) +
                                ": p does not divide the group order");
  }
}

void require_subgroup(const GroupHandle& G, const GroupHandle& H,
                      const char* who, const char* name) {
  if (H.degree != G.degree) {
    throw std::invalid_argument(std::string(who) + ": " + name +
                                " acts on the wrong number of points");
  }
  for (const Perm& g : H.generators) {
    if (!G.contains(g)) {
      throw std::invalid_argument(std::string(who) + ": " + name +
                                  " is not a subgroup");
    }
  }
}

bool graph_connected(const GroupHandle& G, uint64_t p,
                     const std::vector<ConjugacyClass>* classes) {
  VertexIndex X = classes ? vertex_set(G, {p}, *classes)
                          : vertex_set(G, {p});
  if (X.size() == 0) return false;
  return components(G, X).components.size() == 1;
}

// Thins `raw` to an irredundant generating sequence and returns the group
// it generates.
GroupHandle generated_by(const GroupHandle& G, const std::vector<Perm>& raw) {
  std::vector<Perm> gens;
  GroupHandle H = bsgs_build(G.degree, gens, G.element_budget);
  for (const Perm& g : raw) {
    if (H.contains(g)) continue;
    gens.push_back(g);
    H = bsgs_build(G.degree, gens, G.element_budget);
  }
  return H;
}

// Order of A meet B by membership filter on the smaller side.
uint64_t intersection_order(const GroupHandle& A, const GroupHandle& B) {
  const GroupHandle& small = A.order <= B.order ? A : B;
  const GroupHandle& large = A.order <= B.order ? B : A;
  uint64_t n = 0;
  SiftScratch s;
  enumerate_elements(small, [&](const Perm& g) {
    if (large.contains(g, s)) ++n;
  });
  return n;
}

CriterionReport p_local_impl(const GroupHandle& G, uint64_t p,
                             const std::vector<ConjugacyClass>* classes) {
  require_odd_prime_divisor(G, p, "p_local_criterion");
  CriterionReport rep;
  rep.criterion = "p_local";
  GroupHandle core = p_core(G, p);
  rep.verdict = core.order > 1;
  rep.numbers["p"] = p;
  rep.numbers["p_core_order"] = core.order;
  rep.subgroups["p_core"] = std::move(core);
  if (rep.verdict) {
    if (!graph_connected(G, p, classes)) {
      throw std::logic_error(
          "p_local_criterion: nontrivial p-core under a disconnected graph");
    }
    rep.note = "nontrivial p-core; connectivity of the order-p graph checked";
  } else {
    rep.note = "trivial p-core; no conclusion about connectivity";
  }
  return rep;
}

CriterionReport bender_impl(const GroupHandle& G, uint64_t p,
                            const std::vector<ConjugacyClass>* classes) {
  require_odd_prime_divisor(G, p, "bender_equivalence");
  CriterionReport rep;
  rep.criterion = "bender_equivalence";
  bool connected = graph_connected(G, p, classes);
  CriterionReport gen = generation_criterion(G, p);
  if (connected != gen.verdict) {
    throw std::logic_error(
        "bender_equivalence: connectivity and generation disagree");
  }
  rep.verdict = connected;
  rep.numbers["p"] = p;
  rep.numbers["connected"] = connected ? 1 : 0;
  rep.numbers["generated_order"] = gen.numbers.at("generated_order");
  rep.subgroups = std::move(gen.subgroups);
  if (connected) {
    rep.note =
        "connected, and the Sylow subgroup's subgroup normalizers generate "
        "the whole group";
    return rep;
  }
  GroupHandle core = p_core(G, p);
  if (core.order != 1) {
    throw std::logic_error(
        "bender_equivalence: disconnected graph over a nontrivial p-core");
  }
  const GroupHandle& U = rep.subgroups.at("generated");
  if (!strongly_p_embedded(G, U, p)) {
    throw std::logic_error(
        "bender_equivalence: the proper normalizer-generated subgroup is "
        "not strongly p-embedded");
  }
  rep.numbers["strongly_embedded"] = 1;
  rep.note =
      "disconnected; the normalizer-generated subgroup is proper and "
      "strongly p-embedded";
  return rep;
}

CriterionReport amalgam_impl(const GroupHandle& G, const GroupHandle& A,
                             const GroupHandle& B, uint64_t p,
                             const std::vector<ConjugacyClass>* classes) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("amalgam_criterion: p must be an odd prime");
  }
  require_subgroup(G, A, "amalgam_criterion", "A");
  require_subgroup(G, B, "amalgam_criterion", "B");
  CriterionReport rep;
  rep.criterion = "amalgam";
  rep.numbers["p"] = p;

  std::vector<Perm> joint = A.generators;
  joint.insert(joint.end(), B.generators.begin(), B.generators.end());
  GroupHandle J = generated_subgroup(G, joint);
  bool generates = J.order == G.order;
  rep.numbers["joint_order"] = J.order;

  const GroupHandle& small = A.order <= B.order ? A : B;
  const GroupHandle& other = A.order <= B.order ? B : A;
  bool shared_p = false;
  SiftScratch s;
  enumerate_elements(small, [&](const Perm& g) {
    if (shared_p) return;
    if (element_order(g) % p == 0 && other.contains(g, s)) shared_p = true;
  });

  bool a_connected = graph_connected(A, p, nullptr);
  bool b_connected = graph_connected(B, p, nullptr);
  rep.numbers["generates"] = generates ? 1 : 0;
  rep.numbers["shared_p_element"] = shared_p ? 1 : 0;
  rep.numbers["a_connected"] = a_connected ? 1 : 0;
  rep.numbers["b_connected"] = b_connected ? 1 : 0;
  rep.subgroups["joint"] = std::move(J);

  rep.verdict = generates && shared_p && a_connected && b_connected;
  if (!rep.verdict) {
    std::string missed;
    if (!generates) missed += "the parts do not generate the group; ";
    if (!shared_p) missed += "no shared p-element; ";
    if (!a_connected) missed += "order-p graph of A disconnected; ";
    if (!b_connected) missed += "order-p graph of B disconnected; ";
    missed.resize(missed.size() - 2);
    rep.note = missed;
    return rep;
  }
  if (!graph_connected(G, p, classes)) {
    throw std::logic_error(
        "amalgam_criterion: hypotheses hold but the order-p graph is "
        "disconnected");
  }
  rep.note = "hypotheses hold; connectivity of the order-p graph checked";
  return rep;
}

}  // namespace

CriterionReport p_local_criterion(const GroupHandle& G, uint64_t p) {
  return p_local_impl(G, p, nullptr);
}

CriterionReport p_local_criterion(const GroupHandle& G, uint64_t p,
                                  const std::vector<ConjugacyClass>& classes) {
  return p_local_impl(G, p, &classes);
}

CriterionReport generation_criterion(const GroupHandle& G, uint64_t p) {
  require_odd_prime_divisor(G, p, "generation_criterion");
  GroupHandle P = sylow_subgroup(G, p);
  if (P.order > kMaxSylowForEnumeration) {
    throw std::invalid_argument(
        "generation_criterion: Sylow subgroup too large to enumerate");
  }
  const int d = G.degree;

  std::vector<Perm> elts = element_list(P);
  ElementIndex idx(d, P.order);
  for (const Perm& e : elts) idx.insert(e.data());
  uint32_t identity_id = idx.find(identity_perm(d).data());

  // Every subgroup is a join of cyclic subgroups, so closing the cyclic ones
  // under pairwise join enumerates all of them. A subgroup is its sorted
  // member id list.
  std::set<std::vector<uint32_t>> seen;
  std::vector<std::vector<uint32_t>> subs;
  Perm tmp(d);
  for (uint32_t i = 0; i < idx.count; ++i) {
    if (i == identity_id) continue;
    std::vector<uint32_t> cyc{identity_id};
    Perm pow = idx.perm_at(i);
    while (!is_identity(pow)) {
      cyc.push_back(idx.find(pow.data()));
      compose_into(tmp, pow, elts[i]);
      std::swap(pow, tmp);
    }
    std::sort(cyc.begin(), cyc.end());
    if (seen.insert(cyc).second) subs.push_back(std::move(cyc));
  }

  std::vector<char> in(idx.count, 0);
  auto join = [&](const std::vector<uint32_t>& A,
                  const std::vector<uint32_t>& B) {
    std::fill(in.begin(), in.end(), 0);
    std::vector<uint32_t> members;
    auto add = [&](uint32_t id) {
      if (!in[id]) {
        in[id] = 1;
        members.push_back(id);
      }
    };
    for (uint32_t a : A) add(a);
    for (uint32_t b : B) add(b);
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = 0; j < members.size(); ++j) {
        compose_into(tmp.data(), idx.at(members[i]), idx.at(members[j]), d);
        add(idx.find(tmp.data()));
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };
  for (size_t a = 0; a < subs.size(); ++a) {
    for (size_t b = 0; b < a; ++b) {
      std::vector<uint32_t> joined = join(subs[a], subs[b]);
      if (seen.insert(joined).second) subs.push_back(std::move(joined));
    }
  }

  // The full Sylow subgroup first: its normalizer alone often decides the
  // verdict. Then by ascending size, so cheap normalizers come early.
  std::sort(subs.begin(), subs.end(),
            [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
              bool fa = a.size() == idx.count;
              bool fb = b.size() == idx.count;
              if (fa != fb) return fa;
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  std::vector<Perm> ugens;
  GroupHandle U = bsgs_build(d, ugens, G.element_budget);
  uint64_t used = 0;
  for (const std::vector<uint32_t>& sub : subs) {
    if (U.order == G.order) break;
    ++used;
    std::vector<Perm> ygens;
    GroupHandle Y = bsgs_build(d, ygens, G.element_budget);
    for (uint32_t id : sub) {
      if (Y.order == sub.size()) break;
      Perm cand = idx.perm_at(id);
      if (is_identity(cand) || Y.contains(cand)) continue;
      ygens.push_back(std::move(cand));
      Y = bsgs_build(d, ygens, G.element_budget);
    }
    if (Y.order != sub.size()) {
      throw std::logic_error(
          "generation_criterion: a joined member set is not a subgroup");
    }
    GroupHandle N = normalizer(G, Y);
    for (const Perm& g : N.generators) {
      if (U.contains(g)) continue;
      ugens.push_back(g);
      U = bsgs_build(d, ugens, G.element_budget);
    }
  }

  CriterionReport rep;
  rep.criterion = "generation";
  rep.verdict = U.order == G.order;
  rep.numbers["p"] = p;
  rep.numbers["sylow_order"] = P.order;
  rep.numbers["subgroup_count"] = subs.size();
  rep.numbers["normalizers_used"] = used;
  rep.numbers["generated_order"] = U.order;
  rep.note = rep.verdict
                 ? "subgroup normalizers generate the whole group"
                 : "subgroup normalizers generate a proper subgroup";
  rep.subgroups["sylow"] = std::move(P);
  rep.subgroups["generated"] = std::move(U);
  return rep;
}

bool strongly_p_embedded(const GroupHandle& G, const GroupHandle& U,
                         uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("strongly_p_embedded: p must be prime");
  }
  require_subgroup(G, U, "strongly_p_embedded", "U");
  if (U.order == G.order) {
    throw std::invalid_argument("strongly_p_embedded: U must be proper");
  }
  if (U.order % p != 0) {
    throw std::invalid_argument(
        "strongly_p_embedded: p must divide the order of U");
  }

  std::vector<Perm> torsion;
  enumerate_elements(U, [&](const Perm& u) {
    if (element_order(u) == p) torsion.push_back(u);
  });

  // p divides |U meet U^g| exactly when some order-p element of U lands
  // back in U under g, and that condition only depends on the coset Ug.
  std::vector<Perm> reps = right_transversal(G, U, kMaxEmbeddingIndex);
  SiftScratch s;
  Perm moved(G.degree);
  for (const Perm& r : reps) {
    if (U.contains(r, s)) continue;
    for (const Perm& w : torsion) {
      conjugate_into(moved, w, r);
      if (U.contains(moved, s)) return false;
    }
  }
  return true;
}

CriterionReport bender_equivalence(const GroupHandle& G, uint64_t p) {
  return bender_impl(G, p, nullptr);
}

CriterionReport bender_equivalence(
    const GroupHandle& G, uint64_t p,
    const std::vector<ConjugacyClass>& classes) {
  return bender_impl(G, p, &classes);
}

bool sylow_cyclic(const GroupHandle& G, uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("sylow_cyclic: p must be prime");
  }
  if (G.order == 0 || G.order % p != 0) {
    throw std::invalid_argument(
        "sylow_cyclic: p does not divide the group order");
  }
  uint64_t part = p_part(G.order, p);
  if (part == p) return true;
  GroupHandle P = sylow_subgroup(G, p);
  bool found = false;
  enumerate_elements(P, [&](const Perm& g) {
    if (!found && element_order(g) == part) found = true;
  });
  return found;
}

CriterionReport amalgam_criterion(const GroupHandle& G, const GroupHandle& A,
                                  const GroupHandle& B, uint64_t p) {
  return amalgam_impl(G, A, B, p, nullptr);
}

CriterionReport amalgam_criterion(
    const GroupHandle& G, const GroupHandle& A, const GroupHandle& B,
    uint64_t p, const std::vector<ConjugacyClass>& classes) {
  return amalgam_impl(G, A, B, p, &classes);
}

CriterionReport uabg_criterion(const GroupHandle& G, const GroupHandle& U,
                               const GroupHandle& A, const GroupHandle& B,
                               const Perm& g, const Perm& x) {
  require_subgroup(G, U, "uabg_criterion", "U");
  if (static_cast<int>(g.size()) != G.degree ||
      static_cast<int>(x.size()) != G.degree) {
    throw std::invalid_argument(
        "uabg_criterion: g and x must act on the group's points");
  }
  if (!G.contains(g)) {
    throw std::invalid_argument("uabg_criterion: g is not in the group");
  }
  if (!G.contains(x)) {
    throw std::invalid_argument("uabg_criterion: x is not in the group");
  }
  if (A.degree != G.degree || B.degree != G.degree) {
    throw std::invalid_argument(
        "uabg_criterion: A and B act on the wrong number of points");
  }

  CriterionReport rep;
  rep.criterion = "uabg";
  rep.numbers["u_order"] = U.order;

  std::string missed;
  auto contained = [](const GroupHandle& H, const GroupHandle& K) {
    for (const Perm& h : H.generators) {
      if (!K.contains(h)) return false;
    }
    return true;
  };
  if (!contained(A, U)) missed += "A is not contained in U; ";
  if (!contained(B, U)) missed += "B is not contained in U; ";
  bool commuting = true;
  for (const Perm& a : A.generators) {
    for (const Perm& b : B.generators) {
      if (!commute(a, b)) commuting = false;
    }
  }
  if (!commuting) missed += "A and B do not commute elementwise; ";
  uint64_t meet = intersection_order(A, B);
  rep.numbers["meet_order"] = meet;
  if (A.order / meet * B.order != U.order) {
    missed += "the product of A and B does not fill U; ";
  }
  bool moved_inside = true;
  Perm conj(G.degree);
  for (const Perm& a : A.generators) {
    conjugate_into(conj, a, g);
    if (!B.contains(conj)) moved_inside = false;
  }
  if (!moved_inside) missed += "the conjugate of A by g is not inside B; ";
  if (!A.contains(x)) missed += "x is not in A; ";
  uint64_t ox = element_order(x);
  rep.numbers["x_order"] = ox;
  if (ox == 2 || !is_prime(ox)) {
    missed += "the order of x is not an odd prime; ";
  }
  if (U.contains(g)) missed += "g lies in U; ";

  if (!missed.empty()) {
    missed.resize(missed.size() - 2);
    rep.verdict = false;
    rep.note = missed;
    return rep;
  }

  // Class of x, walked breadth first under generator conjugation.
  GroupHandle Cx = centralizer(G, x);
  uint64_t class_size = G.order / Cx.order;
  if (class_size > 2'000'000) {
    throw BudgetExceeded("uabg_criterion: class of x is too large to index");
  }
  ElementIndex cls(G.degree, class_size);
  cls.insert(x.data());
  std::vector<uint32_t> queue{0};
  Perm scratch(G.degree);
  for (size_t head = 0; head < queue.size(); ++head) {
    Perm v = cls.perm_at(queue[head]);
    for (const Perm& gen : G.generators) {
      conjugate_into(scratch, v, gen);
      uint32_t before = cls.count;
      if (cls.insert(scratch.data()) == before) queue.push_back(before);
    }
  }
  if (cls.count != class_size) {
    throw std::logic_error("uabg_criterion: class walk missed members");
  }

  // Vertices of the graph on (class of x) meet U.
  std::vector<Perm> verts;
  enumerate_elements(U, [&](const Perm& u) {
    if (cls.find(u.data()) != ElementIndex::npos) verts.push_back(u);
  });
  rep.numbers["class_size"] = class_size;
  rep.numbers["vertices_in_u"] = verts.size();

  Perm xg = conjugate(x, g);
  size_t from = verts.size(), to = verts.size();
  for (size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] == x) from = i;
    if (verts[i] == xg) to = i;
  }
  if (from == verts.size() || to == verts.size()) {
    throw std::logic_error(
        "uabg_criterion: x or its conjugate fell outside the vertex set");
  }
  std::vector<char> reached(verts.size(), 0);
  std::vector<size_t> bfs{from};
  reached[from] = 1;
  for (size_t head = 0; head < bfs.size(); ++head) {
    for (size_t j = 0; j < verts.size(); ++j) {
      if (reached[j]) continue;
      if (commute(verts[bfs[head]], verts[j])) {
        reached[j] = 1;
        bfs.push_back(j);
      }
    }
  }
  if (!reached[to]) {
    throw std::logic_error(
        "uabg_criterion: x and its conjugate fall in different components");
  }

  std::vector<Perm> egens = U.generators;
  egens.push_back(g);
  GroupHandle E = generated_subgroup(G, egens);
  if (E.order <= U.order) {
    throw std::logic_error(
        "uabg_criterion: adjoining g did not grow the subgroup");
  }
  rep.numbers["extended_order"] = E.order;
  rep.verdict = true;
  rep.note =
      "x joins its conjugate inside the class graph on U, and adjoining g "
      "grows the component stabilizer past U";
  rep.elements["x_conjugate"] = std::move(xg);
  rep.subgroups["extended"] = std::move(E);
  return rep;
}

CriterionReport abelian_criterion(const GroupHandle& G, const Perm& x,
                                  const std::vector<GroupHandle>& family) {
  if (static_cast<int>(x.size()) != G.degree) {
    throw std::invalid_argument(
        "abelian_criterion: x must act on the group's points");
  }
  if (!G.contains(x)) {
    throw std::invalid_argument("abelian_criterion: x is not in the group");
  }
  uint64_t ox = element_order(x);
  if (ox == 2 || !is_prime(ox)) {
    throw std::invalid_argument(
        "abelian_criterion: the order of x is not an odd prime");
  }
  for (const GroupHandle& A : family) {
    require_subgroup(G, A, "abelian_criterion", "a family member");
    if (!is_abelian(A)) {
      throw std::invalid_argument(
          "abelian_criterion: a family member is not abelian");
    }
    if (!A.contains(x)) {
      throw std::invalid_argument(
          "abelian_criterion: a family member does not contain x");
    }
  }

  std::vector<Perm> raw;
  for (const GroupHandle& A : family) {
    GroupHandle N = normalizer(G, A);
    raw.insert(raw.end(), N.generators.begin(), N.generators.end());
  }
  GroupHandle U = generated_by(G, raw);

  CriterionReport rep;
  rep.criterion = "abelian_normalizers";
  rep.numbers["x_order"] = ox;
  rep.numbers["family_size"] = family.size();
  rep.numbers["generated_order"] = U.order;
  rep.verdict = U.order == G.order;
  if (rep.verdict) {
    GroupHandle C = centralizer(G, x);
    ConjugacyClass cls;
    cls.representative = x;
    cls.size = G.order / C.order;
    cls.element_order = ox;
    cls.centralizer = std::move(C);
    rep.numbers["class_size"] = cls.size;
    if (!class_connected(G, cls)) {
      throw std::logic_error(
          "abelian_criterion: normalizers generate the group but the class "
          "is disconnected");
    }
    rep.note = "normalizers generate the group; class connectivity checked";
  } else {
    rep.note =
        "normalizers generate a proper subgroup; the criterion is "
        "inconclusive";
  }
  rep.subgroups["generated"] = std::move(U);
  return rep;
}

CriterionReport nonabelian_centralizer_scan(const GroupHandle& G,
                                            const VertexIndex& X,
                                            const ComponentPartition& P) {
  if (X.degree != G.degree) {
    throw std::invalid_argument(
        "nonabelian_centralizer_scan: vertex set belongs to another group");
  }
  if (!P.classified) {
    throw std::invalid_argument(
        "nonabelian_centralizer_scan: partition is unclassified");
  }
  CriterionReport rep;
  rep.criterion = "nonabelian_centralizer_scan";
  uint64_t big = 0;
  for (size_t k = 0; k < P.components.size(); ++k) {
    const ComponentInfo& comp = P.components[k];
    if (!comp.big) continue;
    ++big;
    bool found = false;
    for (uint32_t ci : comp.class_ids) {
      const ConjugacyClass& cls = X.classes[ci];
      if (!is_abelian(cls.centralizer)) {
        std::string key = "component_" + std::to_string(k);
        rep.elements[key + "_witness"] = cls.representative;
        rep.numbers[key + "_centralizer_order"] = cls.centralizer.order;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error(
          "nonabelian_centralizer_scan: a big component carries only "
          "abelian centralizers");
    }
  }
  rep.verdict = true;
  rep.numbers["big_components"] = big;
  rep.note = big ? "every big component carries a nonabelian centralizer"
                 : "no big components; vacuously true";
  return rep;
}

CriterionReport small_component_corollary(const GroupHandle& G,
                                          const VertexIndex& X,
                                          const ComponentPartition& P) {
  if (X.degree != G.degree) {
    throw std::invalid_argument(
        "small_component_corollary: vertex set belongs to another group");
  }
  if (!P.classified) {
    throw std::invalid_argument(
        "small_component_corollary: partition is unclassified");
  }
  bool any_big = false;
  for (const ComponentInfo& comp : P.components) any_big |= comp.big;
  if (!any_big) {
    throw std::invalid_argument(
        "small_component_corollary: partition has no big component");
  }

  CriterionReport rep;
  rep.criterion = "small_component_corollary";
  rep.verdict = true;
  uint64_t checked = 0, allowlisted = 0;
  std::map<uint64_t, bool> cyclic_by_prime;
  for (size_t ci = 0; ci < X.classes.size(); ++ci) {
    // A class of vertices sits either inside one big component or entirely
    // across small ones, so its first vertex decides.
    if (P.components[P.component_of[X.class_first[ci]]].big) continue;
    const ConjugacyClass& cls = X.classes[ci];
    uint64_t r = cls.element_order;
    // The Tits group, order 17971200, genuinely fails both conclusions at
    // r = 5; it is the single known exception and is skipped by name.
    if (G.order == 17971200 && r == 5) {
      ++allowlisted;
      continue;
    }
    ++checked;
    bool core_abelian = is_abelian(odd_generated_subgroup(cls.centralizer));
    auto it = cyclic_by_prime.find(r);
    if (it == cyclic_by_prime.end()) {
      it = cyclic_by_prime.emplace(r, sylow_cyclic(G, r)).first;
    }
    bool cyclic = it->second;
    if (!core_abelian || !cyclic) {
      rep.verdict = false;
      rep.elements["violation_witness"] = cls.representative;
      rep.numbers["violation_order"] = r;
      rep.note = !core_abelian
                     ? "a small-component centralizer has a nonabelian "
                       "odd-generated part"
                     : "a small-component prime has noncyclic Sylow "
                       "subgroups";
      break;
    }
  }
  rep.numbers["classes_checked"] = checked;
  rep.numbers["allowlisted_classes"] = allowlisted;
  if (rep.verdict) {
    rep.note = allowlisted
                   ? "all small-component classes pass; the Tits group "
                     "pattern was allowlisted by name"
                   : "all small-component classes pass";
  }
  return rep;
}

}  // namespace ocg
