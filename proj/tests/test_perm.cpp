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
#include <random>
#include <set>
#include <unordered_set>

#include <doctest.h>

#include "ocg/perm.hpp"
#include "ocg/stabchain.hpp"

using namespace ocg;

namespace {

Perm random_perm(int degree, std::mt19937& rng) {
  Perm a = identity_perm(degree);
  std::shuffle(a.begin(), a.end(), rng);
  return a;
}

}  // namespace

TEST_CASE("cycle notation round trips") {
  Perm a = parse_cycles("(1,2,3)(4,5)", 6);
  CHECK(a == Perm{1, 2, 0, 4, 3, 5});
  CHECK(format_cycles(a) == "(1,2,3)(4,5)");
  CHECK(parse_cycles("()", 4) == identity_perm(4));
  CHECK(format_cycles(identity_perm(4)) == "()");
  CHECK(parse_cycles(" (1, 2) (3, 4) ", 5) == parse_cycles("(1,2)(3,4)", 5));

  CHECK_THROWS_AS(parse_cycles("(1,2,1)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,5)", 3), std::out_of_range);
  CHECK_THROWS_AS(parse_cycles("(0,1)", 3), std::out_of_range);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), std::invalid_argument);

  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Perm g = random_perm(12, rng);
    CHECK(parse_cycles(format_cycles(g), 12) == g);
  }
}

TEST_CASE("composition applies the left factor first") {
  Perm a = parse_cycles("(1,2)", 3);
  Perm b = parse_cycles("(2,3)", 3);
  CHECK(compose(a, b) == parse_cycles("(1,3,2)", 3));
  CHECK(compose(b, a) == parse_cycles("(1,2,3)", 3));

  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    Perm g = random_perm(10, rng);
    Perm h = random_perm(10, rng);
    Perm k = random_perm(10, rng);
    CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
    CHECK(compose(g, inverse(g)) == identity_perm(10));
    CHECK(compose(inverse(g), g) == identity_perm(10));
    CHECK(conjugate(g, h) == compose(compose(inverse(h), g), h));
    CHECK(commute(g, h) == (compose(g, h) == compose(h, g)));
  }
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(element_order(identity_perm(5)) == 1);
  CHECK(element_order(parse_cycles("(1,2,3)", 8)) == 3);
  CHECK(element_order(parse_cycles("(1,2)(3,4,5)", 5)) == 6);
  CHECK(element_order(parse_cycles("(1,2,3,4)(5,6,7,8,9,10)", 10)) == 12);

  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    Perm g = random_perm(11, rng);
    uint64_t n = element_order(g);
    Perm p = g;
    for (uint64_t k = 1; k < n; ++k) {
      CHECK_FALSE(is_identity(p));
      p = compose(p, g);
    }
    CHECK(is_identity(p));
  }
}

TEST_CASE("perm hashing separates distinct permutations of one degree") {
  std::mt19937 rng(17);
  std::set<Perm> seen;
  std::unordered_set<uint64_t> hashes;
  while (seen.size() < 500) seen.insert(random_perm(9, rng));
  for (const Perm& g : seen) hashes.insert(perm_hash(g));
  CHECK(hashes.size() == seen.size());
}

TEST_CASE("stabilizer chains recover known group orders") {
  std::vector<Perm> alt5 = {parse_cycles("(1,2,3,4,5)", 5),
                            parse_cycles("(1,2,3)", 5)};
  CHECK(StabChain::build(5, alt5).order() == 60);

  std::vector<Perm> sym4 = {parse_cycles("(1,2,3,4)", 4),
                            parse_cycles("(1,2)", 4)};
  CHECK(StabChain::build(4, sym4).order() == 24);

  // Projective line over the 7-element field: translation and negated
  // inversion generate the simple group of order 168.
  std::vector<Perm> psl27 = {parse_cycles("(1,2,3,4,5,6,7)", 8),
                             parse_cycles("(1,8)(2,7)(3,4)(5,6)", 8)};
  CHECK(StabChain::build(8, psl27).order() == 168);

  CHECK(StabChain::build(6, {}).order() == 1);
  CHECK(StabChain::build(6, {identity_perm(6)}).order() == 1);
}

TEST_CASE("chain membership separates a group from its complement") {
  std::vector<Perm> alt5 = {parse_cycles("(1,2,3,4,5)", 5),
                            parse_cycles("(1,2,3)", 5)};
  StabChain c = StabChain::build(5, alt5);
  CHECK(c.contains(identity_perm(5)));
  CHECK(c.contains(parse_cycles("(1,3,5)", 5)));
  CHECK_FALSE(c.contains(parse_cycles("(1,2)", 5)));
  CHECK_FALSE(c.contains(parse_cycles("(1,2,3,4)", 5)));

  size_t count = 0;
  c.for_each_element([&](const Perm& g) {
    CHECK(c.contains(g));
    ++count;
  });
  CHECK(count == 60);
}

TEST_CASE("element walk visits every element exactly once") {
  std::vector<Perm> sym4 = {parse_cycles("(1,2,3,4)", 4),
                            parse_cycles("(1,2)", 4)};
  StabChain c = StabChain::build(4, sym4);
  std::set<Perm> seen;
  c.for_each_element([&](const Perm& g) { seen.insert(g); });
  CHECK(seen.size() == 24);

  StabChain trivial = StabChain::build(5, {});
  size_t n = 0;
  trivial.for_each_element([&](const Perm& g) {
    CHECK(is_identity(g));
    ++n;
  });
  CHECK(n == 1);
}

TEST_CASE("forced base points expose a pointwise stabilizer") {
  std::vector<Perm> sym5 = {parse_cycles("(1,2,3,4,5)", 5),
                            parse_cycles("(1,2)", 5)};
  StabChain c = StabChain::build(5, sym5, {0, 1});
  CHECK(c.order() == 120);
  CHECK(c.base[0] == 0);
  CHECK(c.base[1] == 1);

  std::vector<Perm> stab = c.generators_at(2);
  for (const Perm& g : stab) {
    CHECK(g[0] == 0);
    CHECK(g[1] == 1);
  }
  CHECK(StabChain::build(5, stab).order() == 6);
}

TEST_CASE("malformed generators are rejected") {
  CHECK_THROWS_AS(StabChain::build(3, {Perm{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(StabChain::build(3, {Perm{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(StabChain::build(0, {}), std::invalid_argument);
  std::vector<Perm> alt5 = {parse_cycles("(1,2,3,4,5)", 5),
                            parse_cycles("(1,2,3)", 5)};
  CHECK_THROWS_AS(StabChain::build(5, alt5, {5}), std::invalid_argument);
  CHECK_THROWS_AS(StabChain::build(5, alt5, {2, 2}), std::invalid_argument);
}
