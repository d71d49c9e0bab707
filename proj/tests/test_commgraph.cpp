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

#include <algorithm>
#include <map>

#include <doctest.h>

#include "ocg/catalog.hpp"
#include "ocg/commgraph.hpp"
#include "ocg/group.hpp"
#include "ocg/numtheory.hpp"
#include "ocg/perm.hpp"

using namespace ocg;

namespace {

GroupHandle psl27() {
  return bsgs_build(8, {parse_cycles("(1,2,3,4,5,6,7)", 8),
                        parse_cycles("(1,8)(2,7)(3,4)(5,6)", 8)});
}

GroupHandle frobenius21() {
  return bsgs_build(7, {parse_cycles("(1,2,3,4,5,6,7)", 7),
                        parse_cycles("(2,3,5)(4,7,6)", 7)});
}

GroupHandle mathieu11() {
  GroupSpec spec;
  spec.name = "m11";
  spec.family = GroupSpec::Family::File;
  spec.path = OCG_SOURCE_DIR "/data/m11.grp";
  return load_group(spec);
}

// Size multiset of the components, ascending.
std::map<uint64_t, int> size_census(const ComponentPartition& P) {
  std::map<uint64_t, int> out;
  for (const ComponentInfo& ci : P.components) ++out[ci.size];
  return out;
}

}  // namespace

TEST_CASE("vertex sets count elements class by class") {
  GroupHandle a5 = alternating(5);
  VertexIndex X = vertex_set(a5, {3, 5});
  CHECK(X.size() == 44);
  CHECK(X.classes.size() == 3);  // one class of 3-cycles, two of 5-cycles
  uint64_t threes = 0, fives = 0;
  for (uint32_t v = 0; v < X.size(); ++v) {
    uint64_t o = X.classes[X.class_of[v]].element_order;
    if (o == 3) ++threes;
    if (o == 5) ++fives;
  }
  CHECK(threes == 20);
  CHECK(fives == 24);

  CHECK(vertex_set(a5, {}).size() == 0);
  CHECK(vertex_set(psl27(), {3, 7}).size() == 104);

  CHECK_THROWS_AS(vertex_set(a5, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(vertex_set(a5, {5, 3}), std::invalid_argument);
  CHECK_THROWS_AS(vertex_set(a5, {9}), std::invalid_argument);
}

TEST_CASE("vertex lookups land on the inserted elements") {
  GroupHandle a5 = alternating(5);
  VertexIndex X = vertex_set(a5, {3, 5});
  for (uint32_t v = 0; v < X.size(); ++v) {
    Perm x = X.elements.perm_at(v);
    CHECK(X.vertex_of(x) == v);
    CHECK(element_order(x) == X.classes[X.class_of[v]].element_order);
  }
  CHECK(X.vertex_of(identity_perm(5)) == ElementIndex::npos);
}

TEST_CASE("alternating 5 splits into sixteen small components") {
  GroupHandle a5 = alternating(5);
  VertexIndex X = vertex_set(a5, {3, 5});
  ComponentPartition P = components(a5, X);
  REQUIRE(P.components.size() == 16);
  auto census = size_census(P);
  CHECK(census[2] == 10);
  CHECK(census[4] == 6);
  classify(P, a5, X);
  for (const ComponentInfo& ci : P.components) CHECK(!ci.big);

  // Each size-4 component is one Sylow 5-subgroup minus the identity and
  // meets both classes of 5-elements in two members each.
  for (const ComponentInfo& ci : P.components) {
    if (ci.size != 4) continue;
    REQUIRE(ci.fingerprint.size() == 2);
    CHECK(ci.order_set == std::vector<uint64_t>{5});
    CHECK(ci.fingerprint[0][2] == 2);
    CHECK(ci.fingerprint[1][2] == 2);
  }
}

TEST_CASE("sweep and naive oracle agree on the small suite groups") {
  auto check_group = [](const GroupHandle& G) {
    REQUIRE(G.order <= 5000);
    VertexIndex X = vertex_set(G, odd_prime_factors(G.order));
    ComponentPartition fast = components(G, X);
    ComponentPartition naive = components_naive(X);
    CHECK(fast.component_of == naive.component_of);
    CHECK(fast.components.size() == naive.components.size());
  };
  check_group(alternating(5));
  check_group(alternating(6));
  check_group(alternating(7));
  check_group(psl27());
  check_group(projective_special_linear(2, 8));
  check_group(projective_special_linear(2, 11));
  check_group(projective_special_linear(2, 13));
  check_group(frobenius21());
}

TEST_CASE("alternating 8 has one big component holding orders 3 and 5") {
  GroupHandle a8 = alternating(8);
  VertexIndex X = vertex_set(a8, {3, 5, 7});
  ComponentPartition P = components(a8, X);
  classify(P, a8, X);
  int big_count = 0;
  uint64_t sevens = 0;
  for (const ComponentInfo& ci : P.components) {
    if (ci.big) {
      ++big_count;
      CHECK(ci.order_set == std::vector<uint64_t>{3, 5});
      CHECK(ci.size == 2576);
    } else {
      CHECK(ci.order_set == std::vector<uint64_t>{7});
      CHECK(ci.size == 6);
      // Both classes of 7-cycles meet every Sylow 7-subgroup in 3 powers.
      REQUIRE(ci.fingerprint.size() == 2);
      CHECK(ci.fingerprint[0][2] == 3);
      CHECK(ci.fingerprint[1][2] == 3);
      sevens += ci.size;
    }
  }
  CHECK(big_count == 1);
  CHECK(sevens == 5760);
  CHECK(P.components.size() == 961);
}

TEST_CASE("a normal Sylow subgroup forms a big component") {
  GroupHandle f21 = frobenius21();
  VertexIndex X = vertex_set(f21, {3, 7});
  ComponentPartition P = components(f21, X);
  classify(P, f21, X);
  int big_count = 0;
  for (const ComponentInfo& ci : P.components) {
    if (ci.big) {
      ++big_count;
      CHECK(ci.order_set == std::vector<uint64_t>{7});
      CHECK(ci.size == 6);
    } else {
      CHECK(ci.order_set == std::vector<uint64_t>{3});
      CHECK(ci.size == 2);
    }
  }
  CHECK(big_count == 1);
  CHECK(P.components.size() == 8);
  CHECK(components_naive(X).component_of == P.component_of);
}

TEST_CASE("mathieu 11 has only small components") {
  GroupHandle m11 = mathieu11();
  VertexIndex X = vertex_set(m11, {3, 5, 11});
  CHECK(X.size() == 3464);
  ComponentPartition P = components(m11, X);
  classify(P, m11, X);
  for (const ComponentInfo& ci : P.components) CHECK(!ci.big);
}

TEST_CASE("component stabilizers cut out exactly the preserving elements") {
  GroupHandle a5 = alternating(5);
  VertexIndex X = vertex_set(a5, {3, 5});
  ComponentPartition P = components(a5, X);

  uint32_t v5 = ElementIndex::npos;
  for (uint32_t v = 0; v < X.size(); ++v) {
    if (X.classes[X.class_of[v]].element_order == 5) {
      v5 = v;
      break;
    }
  }
  REQUIRE(v5 != ElementIndex::npos);
  GroupHandle H = component_stabilizer(a5, X, P, v5);
  CHECK(H.order == 10);  // six conjugate components of the 5-elements

  Perm x = X.elements.perm_at(v5);
  uint64_t inside = 0;
  enumerate_elements(a5, [&](const Perm& g) {
    bool same =
        P.component_of[X.vertex_of(conjugate(x, g))] == P.component_of[v5];
    CHECK(same == H.contains(g));
    if (same) ++inside;
  });
  CHECK(inside == H.order);

  GroupHandle psl = psl27();
  VertexIndex X7 = vertex_set(psl, {3, 7});
  ComponentPartition P7 = components(psl, X7);
  uint32_t v7 = X7.class_first[X7.classes.size() - 1];
  CHECK(X7.classes[X7.class_of[v7]].element_order == 7);
  GroupHandle H7 = component_stabilizer(psl, X7, P7, v7);
  CHECK(H7.order == 21);  // the Sylow 7-normalizer
  CHECK(H7.order < psl.order);
}

TEST_CASE("class connectivity matches the known desk cases") {
  GroupHandle a8 = alternating(8);
  std::vector<ConjugacyClass> cls8 = conjugacy_classes(a8);
  bool found = false;
  for (const ConjugacyClass& c : cls8) {
    if (c.element_order == 3 && c.size == 112) {
      CHECK(class_connected(a8, c));
      found = true;
    }
  }
  CHECK(found);

  GroupHandle a5 = alternating(5);
  for (const ConjugacyClass& c : conjugacy_classes(a5)) {
    if (c.element_order == 5) CHECK(!class_connected(a5, c));
    if (c.element_order == 3) CHECK(!class_connected(a5, c));
  }

  GroupHandle psl = psl27();
  for (const ConjugacyClass& c : conjugacy_classes(psl)) {
    if (c.element_order == 7) CHECK(!class_connected(psl, c));
  }
}

TEST_CASE("prime link graphs read off centralizer orders") {
  PrimeLinkGraph a5 = prime_link_graph(alternating(5));
  CHECK(a5.primes == std::vector<uint64_t>{3, 5});
  CHECK(a5.prime_component(3) == std::vector<uint64_t>{3});
  CHECK(a5.prime_component(5) == std::vector<uint64_t>{5});

  // A 3-cycle in Alt(8) centralizes a 5-cycle, and conversely.
  PrimeLinkGraph a8 = prime_link_graph(alternating(8));
  CHECK(a8.primes == std::vector<uint64_t>{3, 5, 7});
  CHECK(a8.prime_component(3) == std::vector<uint64_t>{3, 5});
  CHECK(a8.prime_component(7) == std::vector<uint64_t>{7});
  CHECK_THROWS_AS(a8.prime_component(11), std::invalid_argument);
}

TEST_CASE("big components agree with the prime link component") {
  GroupHandle a8 = alternating(8);
  std::vector<ConjugacyClass> cls = conjugacy_classes(a8);
  VertexIndex X = vertex_set(a8, odd_prime_factors(a8.order), cls);
  ComponentPartition P = components(a8, X);
  classify(P, a8, X);
  PrimeLinkGraph PL = prime_link_graph(cls, a8.order);
  for (const ComponentInfo& ci : P.components) {
    if (!ci.big) continue;
    CHECK(ci.order_set == PL.prime_component(ci.order_set[0]));
  }
}

TEST_CASE("connected elements stay connected in the central quotient") {
  for (uint32_t q : {5u, 7u, 9u}) {
    GroupHandle sl = special_linear_vectors(2, q);
    CHECK(sl.order == uint64_t(q) * (q - 1) * (q + 1));
    GroupHandle psl = projective_special_linear(2, q);

    std::vector<uint64_t> rho = odd_prime_factors(sl.order);
    VertexIndex XS = vertex_set(sl, rho);
    VertexIndex XP = vertex_set(psl, rho);
    ComponentPartition PS = components(sl, XS);
    ComponentPartition PP = components(psl, XP);

    std::map<uint32_t, uint32_t> image_comp;
    for (uint32_t v = 0; v < XS.size(); ++v) {
      Perm bar = scalar_class_quotient(2, q, XS.elements.perm_at(v));
      uint32_t w = XP.vertex_of(bar);
      REQUIRE(w != ElementIndex::npos);
      auto [it, fresh] = image_comp.emplace(PS.component_of[v],
                                            PP.component_of[w]);
      CHECK(it->second == PP.component_of[w]);
    }
  }
}

TEST_CASE("scalar class quotients reject block-breaking input") {
  GroupHandle sl = special_linear_vectors(2, 5);
  for (const Perm& g : sl.generators) {
    Perm bar = scalar_class_quotient(2, 5, g);
    CHECK(projective_special_linear(2, 5).contains(bar));
  }
  Perm bad = identity_perm(24);
  std::swap(bad[0], bad[4]);  // swaps vectors from two projective points
  CHECK_THROWS_AS(scalar_class_quotient(2, 5, bad), std::invalid_argument);
}
