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

#include <map>
#include <set>

#include <doctest.h>

#include "ocg/group.hpp"
#include "ocg/perm.hpp"

using namespace ocg;

namespace {

GroupHandle alternating(int n) {
  std::vector<Perm> gens = {parse_cycles("(1,2,3)", n)};
  std::string big = "(";
  for (int k = (n % 2 == 0) ? 2 : 1; k <= n; ++k) {
    if (big.size() > 1) big += ',';
    big += std::to_string(k);
  }
  big += ')';
  gens.push_back(parse_cycles(big, n));
  return bsgs_build(n, gens);
}

GroupHandle symmetric(int n) {
  std::vector<Perm> gens;
  std::string big = "(";
  for (int k = 1; k <= n; ++k) {
    if (big.size() > 1) big += ',';
    big += std::to_string(k);
  }
  big += ')';
  gens.push_back(parse_cycles(big, n));
  gens.push_back(parse_cycles("(1,2)", n));
  return bsgs_build(n, gens);
}

GroupHandle psl27() {
  return bsgs_build(8, {parse_cycles("(1,2,3,4,5,6,7)", 8),
                        parse_cycles("(1,8)(2,7)(3,4)(5,6)", 8)});
}

GroupHandle mathieu11() {
  return bsgs_build(11, {parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11),
                         parse_cycles("(3,7,11,8)(4,10,5,6)", 11)});
}

// Frobenius group of order 21: the 7-cycle together with tripling mod 7.
GroupHandle frobenius21() {
  return bsgs_build(7, {parse_cycles("(1,2,3,4,5,6,7)", 7),
                        parse_cycles("(2,3,5)(4,7,6)", 7)});
}

}  // namespace

TEST_CASE("group handles carry verified orders") {
  CHECK(alternating(5).order == 60);
  CHECK(alternating(6).order == 360);
  CHECK(alternating(8).order == 20160);
  CHECK(symmetric(4).order == 24);
  CHECK(psl27().order == 168);
  CHECK(mathieu11().order == 7920);
  CHECK(frobenius21().order == 21);
  CHECK(bsgs_build(4, {}).order == 1);
}

TEST_CASE("element enumeration respects the budget") {
  GroupHandle G = alternating(6);
  std::set<Perm> seen;
  enumerate_elements(G, [&](const Perm& g) {
    CHECK(G.contains(g));
    seen.insert(g);
  });
  CHECK(seen.size() == 360);

  GroupHandle tight = bsgs_build(5, alternating(5).generators, 10);
  CHECK(tight.order == 60);
  CHECK_THROWS_AS(enumerate_elements(tight, [](const Perm&) {}),
                  BudgetExceeded);
  CHECK_THROWS_AS(conjugacy_classes(tight), BudgetExceeded);
}

TEST_CASE("membership and element order agree across small groups") {
  for (const GroupHandle& G : {alternating(7), psl27(), mathieu11()}) {
    uint64_t count = 0;
    enumerate_elements(G, [&](const Perm& g) {
      ++count;
      CHECK(G.order % element_order(g) == 0);
    });
    CHECK(count == G.order);
  }
}

TEST_CASE("conjugacy classes of the alternating group on five points") {
  GroupHandle G = alternating(5);
  auto classes = conjugacy_classes(G);
  REQUIRE(classes.size() == 5);
  std::vector<std::pair<uint64_t, uint64_t>> shape;
  for (const auto& c : classes) shape.push_back({c.element_order, c.size});
  std::vector<std::pair<uint64_t, uint64_t>> expect = {
      {1, 1}, {2, 15}, {3, 20}, {5, 12}, {5, 12}};
  CHECK(shape == expect);

  // Representatives are the least members of their classes.
  std::vector<Perm> elems = element_list(G);
  for (const auto& c : classes) {
    Perm least;
    uint64_t hits = 0;
    for (const Perm& x : elems) {
      bool same = false;
      for (const Perm& g : elems) {
        if (conjugate(x, g) == c.representative) {
          same = true;
          break;
        }
      }
      if (!same) continue;
      ++hits;
      if (least.empty() || x < least) least = x;
    }
    CHECK(hits == c.size);
    CHECK(least == c.representative);
  }
}

TEST_CASE("class data satisfies the counting identities") {
  for (const GroupHandle& G : {alternating(6), psl27(), symmetric(4)}) {
    auto classes = conjugacy_classes(G);
    uint64_t total = 0;
    for (const auto& c : classes) {
      total += c.size;
      CHECK(c.size * c.centralizer.order == G.order);
      CHECK(c.centralizer.contains(c.representative));
      CHECK(element_order(c.representative) == c.element_order);
      CHECK(G.order % c.size == 0);
    }
    CHECK(total == G.order);
  }
}

TEST_CASE("the eleven point Mathieu group has ten classes") {
  auto classes = conjugacy_classes(mathieu11());
  CHECK(classes.size() == 10);
  std::multiset<uint64_t> orders;
  for (const auto& c : classes) orders.insert(c.element_order);
  CHECK(orders == std::multiset<uint64_t>{1, 2, 3, 4, 5, 6, 8, 8, 11, 11});
}

TEST_CASE("centralizers match a direct commuting count") {
  GroupHandle alt8 = alternating(8);
  GroupHandle C = centralizer(alt8, parse_cycles("(1,2,3)", 8));
  CHECK(C.order == 180);
  for (const Perm& g : C.generators) {
    CHECK(commute(g, parse_cycles("(1,2,3)", 8)));
  }

  CHECK(centralizer(alternating(5), identity_perm(5)).order == 60);

  GroupHandle G = symmetric(4);
  Perm x = parse_cycles("(1,2,3,4)", 4);
  GroupHandle Cx = centralizer(G, x);
  uint64_t direct = 0;
  enumerate_elements(G, [&](const Perm& g) {
    if (commute(g, x)) ++direct;
  });
  CHECK(Cx.order == direct);
  CHECK_THROWS_AS(centralizer(G, parse_cycles("(1,2,3,4,5)", 5)),
                  std::invalid_argument);
}

TEST_CASE("generated subgroups sit inside their parent") {
  GroupHandle alt6 = alternating(6);
  GroupHandle H = generated_subgroup(
      alt6, {parse_cycles("(1,2,3)", 6), parse_cycles("(4,5,6)", 6)});
  CHECK(H.order == 9);
  CHECK(is_abelian(H));

  GroupHandle again = generated_subgroup(alt6, H.generators);
  CHECK(again.order == 9);
  CHECK(generated_subgroup(alt6, {}).order == 1);
  CHECK_THROWS_AS(generated_subgroup(alt6, {parse_cycles("(1,2)", 6)}),
                  std::invalid_argument);
}

TEST_CASE("normalizers of cyclic subgroups match the classical values") {
  GroupHandle alt5 = alternating(5);
  GroupHandle five = generated_subgroup(alt5, {parse_cycles("(1,2,3,4,5)", 5)});
  CHECK(normalizer(alt5, five).order == 10);

  GroupHandle L = psl27();
  GroupHandle seven = sylow_subgroup(L, 7);
  CHECK(seven.order == 7);
  CHECK(normalizer(L, seven).order == 21);

  CHECK(normalizer(alt5, alt5).order == 60);
}

TEST_CASE("sylow subgroups have full prime power order") {
  GroupHandle alt5 = alternating(5);
  CHECK(sylow_subgroup(alt5, 2).order == 4);
  CHECK(sylow_subgroup(alt5, 3).order == 3);
  CHECK(sylow_subgroup(alt5, 5).order == 5);
  CHECK(sylow_subgroup(symmetric(4), 2).order == 8);
  CHECK(sylow_subgroup(mathieu11(), 3).order == 9);
  CHECK(sylow_subgroup(psl27(), 2).order == 8);

  // Order eighty-one forces two growth steps past any cyclic seed.
  GroupHandle alt9 = alternating(9);
  GroupHandle P = sylow_subgroup(alt9, 3);
  CHECK(P.order == 81);
  enumerate_elements(P, [&](const Perm& g) {
    uint64_t o = element_order(g);
    CHECK((o == 1 || o == 3 || o == 9));
  });

  CHECK_THROWS_AS(sylow_subgroup(alt5, 7), std::invalid_argument);
  CHECK_THROWS_AS(sylow_subgroup(alt5, 4), std::invalid_argument);
}

TEST_CASE("p cores detect the largest normal p subgroup") {
  CHECK(p_core(symmetric(4), 2).order == 4);
  CHECK(p_core(frobenius21(), 7).order == 7);
  CHECK(p_core(frobenius21(), 3).order == 1);
  GroupHandle alt5 = alternating(5);
  CHECK(p_core(alt5, 2).order == 1);
  CHECK(p_core(alt5, 3).order == 1);
  CHECK(p_core(alt5, 5).order == 1);
  CHECK(p_core(alt5, 7).order == 1);
  CHECK(p_core(symmetric(3), 3).order == 3);

  GroupHandle eight = sylow_subgroup(symmetric(4), 2);
  CHECK(p_core(eight, 2).order == 8);
}

TEST_CASE("odd order elements generate the expected subgroup") {
  CHECK(odd_generated_subgroup(symmetric(3)).order == 3);
  CHECK(odd_generated_subgroup(symmetric(4)).order == 12);
  CHECK(odd_generated_subgroup(alternating(5)).order == 60);
  GroupHandle klein = generated_subgroup(
      symmetric(4), {parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)});
  CHECK(odd_generated_subgroup(klein).order == 1);
}

TEST_CASE("abelian detection distinguishes the small cases") {
  GroupHandle klein = generated_subgroup(
      symmetric(4), {parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)});
  CHECK(is_abelian(klein));
  CHECK_FALSE(is_abelian(symmetric(3)));
  GroupHandle six = bsgs_build(5, {parse_cycles("(1,2)(3,4,5)", 5)});
  CHECK(six.order == 6);
  CHECK(is_abelian(six));
  CHECK(is_abelian(bsgs_build(3, {})));
}
