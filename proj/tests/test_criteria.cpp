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

#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "ocg/catalog.hpp"
#include "ocg/commgraph.hpp"
#include "ocg/criteria.hpp"
#include "ocg/group.hpp"
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

GroupHandle load_data(const std::string& name) {
  GroupSpec spec;
  spec.name = name;
  spec.family = GroupSpec::Family::File;
  spec.path = std::string(OCG_SOURCE_DIR "/data/") + name + ".grp";
  return load_group(spec);
}

// Alternating group on the degree-many points {lo..lo+6}.
GroupHandle seven_point_stabilizer(int degree, int lo) {
  std::string three = "(" + std::to_string(lo) + "," + std::to_string(lo + 1) +
                      "," + std::to_string(lo + 2) + ")";
  std::string seven = "(";
  for (int k = 0; k < 7; ++k) {
    seven += std::to_string(lo + k);
    seven += k + 1 < 7 ? "," : ")";
  }
  return bsgs_build(degree,
                    {parse_cycles(three, degree), parse_cycles(seven, degree)});
}

bool note_mentions(const CriterionReport& rep, const std::string& phrase) {
  return rep.note.find(phrase) != std::string::npos;
}

// Stored witness subgroups must rebuild to the recorded orders.
void check_witnesses(const CriterionReport& rep) {
  for (const auto& [name, H] : rep.subgroups) {
    CAPTURE(name);
    CHECK(bsgs_build(H.degree, H.generators).order == H.order);
  }
}

}  // namespace

TEST_CASE("p-core criterion separates normal from fused Sylow subgroups") {
  GroupHandle f21 = frobenius21();
  CriterionReport hit = p_local_criterion(f21, 7);
  CHECK(hit.verdict);
  CHECK(hit.numbers.at("p_core_order") == 7);
  check_witnesses(hit);

  CriterionReport miss = p_local_criterion(alternating(5), 3);
  CHECK(!miss.verdict);
  CHECK(miss.numbers.at("p_core_order") == 1);

  // A 3-group is its own 3-core, so its order-3 graph must come back
  // connected or the criterion throws.
  GroupHandle wreath = sylow_subgroup(alternating(9), 3);
  REQUIRE(wreath.order == 81);
  CriterionReport own = p_local_criterion(wreath, 3);
  CHECK(own.verdict);
  CHECK(own.numbers.at("p_core_order") == 81);

  GroupHandle a5 = alternating(5);
  CHECK_THROWS_AS(p_local_criterion(a5, 2), std::invalid_argument);
  CHECK_THROWS_AS(p_local_criterion(a5, 9), std::invalid_argument);
  CHECK_THROWS_AS(p_local_criterion(a5, 7), std::invalid_argument);
}

TEST_CASE("generation criterion computes the normalizer-generated subgroup") {
  CriterionReport l27 = generation_criterion(psl27(), 7);
  CHECK(!l27.verdict);
  CHECK(l27.numbers.at("sylow_order") == 7);
  CHECK(l27.numbers.at("subgroup_count") == 1);
  CHECK(l27.numbers.at("generated_order") == 21);
  CHECK(l27.subgroups.at("generated").order == 21);
  check_witnesses(l27);

  CriterionReport a8 = generation_criterion(alternating(8), 3);
  CHECK(a8.verdict);
  CHECK(a8.numbers.at("sylow_order") == 9);
  CHECK(a8.numbers.at("subgroup_count") == 5);
  CHECK(a8.numbers.at("generated_order") == 20160);
}

TEST_CASE("unitary 3 3 keeps a proper local subgroup at the prime three") {
  // The normalizers land inside the stabilizer of an isotropic point, which
  // has index 28.
  GroupHandle u33 = projective_special_unitary(3, 3);
  CriterionReport rep = generation_criterion(u33, 3);
  CHECK(!rep.verdict);
  CHECK(rep.numbers.at("generated_order") == 216);
  CHECK(strongly_p_embedded(u33, rep.subgroups.at("generated"), 3));
}

TEST_CASE("generation criterion rejects oversized Sylow subgroups") {
  std::vector<Perm> cycles;
  for (int k = 0; k < 7; ++k) {
    std::string c = "(" + std::to_string(3 * k + 1) + "," +
                    std::to_string(3 * k + 2) + "," +
                    std::to_string(3 * k + 3) + ")";
    cycles.push_back(parse_cycles(c, 21));
  }
  GroupHandle big = bsgs_build(21, cycles);
  REQUIRE(big.order == 2187);
  CHECK_THROWS_AS(generation_criterion(big, 3), std::invalid_argument);
}

TEST_CASE("strongly embedded subgroups pass the transversal sweep") {
  GroupHandle l27 = psl27();
  GroupHandle n7 = normalizer(l27, sylow_subgroup(l27, 7));
  REQUIRE(n7.order == 21);
  CHECK(strongly_p_embedded(l27, n7, 7));

  GroupHandle a8 = alternating(8);
  GroupHandle c3 = centralizer(a8, parse_cycles("(1,2,3)", 8));
  REQUIRE(c3.order == 180);
  CHECK(!strongly_p_embedded(a8, c3, 3));

  // A normal subgroup intersects every conjugate in itself.
  GroupHandle s5 = bsgs_build(5, {parse_cycles("(1,2)", 5),
                                  parse_cycles("(1,2,3,4,5)", 5)});
  GroupHandle a5 = alternating(5);
  REQUIRE(s5.order == 120);
  CHECK(!strongly_p_embedded(s5, a5, 3));

  CHECK_THROWS_AS(strongly_p_embedded(l27, l27, 7), std::invalid_argument);
  CHECK_THROWS_AS(strongly_p_embedded(l27, n7, 5), std::invalid_argument);
}

TEST_CASE("bender equivalence pins the frozen local subgroup orders") {
  CriterionReport l27 = bender_equivalence(psl27(), 7);
  CHECK(!l27.verdict);
  CHECK(l27.numbers.at("generated_order") == 21);
  CHECK(l27.numbers.at("strongly_embedded") == 1);
  check_witnesses(l27);

  GroupHandle a8 = alternating(8);
  std::vector<ConjugacyClass> cls8 = conjugacy_classes(a8);
  CHECK(bender_equivalence(a8, 3, cls8).verdict);

  // Order-5 elements of an eight-point alternating group centralize only
  // their own powers, so the single-prime graph at 5 falls apart even
  // though the order-5 vertices sit inside a big mixed component.
  CriterionReport a85 = bender_equivalence(a8, 5, cls8);
  CHECK(!a85.verdict);
  CHECK(a85.numbers.at("generated_order") == 60);

  GroupHandle m11 = load_data("m11");
  CriterionReport eleven = bender_equivalence(m11, 11);
  CHECK(!eleven.verdict);
  CHECK(eleven.numbers.at("generated_order") == 55);
  CriterionReport three = bender_equivalence(m11, 3);
  CHECK(!three.verdict);
  CHECK(three.numbers.at("generated_order") == 144);
}

TEST_CASE("bender equivalence stays consistent across the desk suite") {
  struct Pair {
    GroupHandle G;
    std::vector<uint64_t> primes;
    std::vector<bool> connected;
  };
  std::vector<Pair> sweep;
  sweep.push_back({alternating(5), {3, 5}, {false, false}});
  sweep.push_back({alternating(6), {3, 5}, {false, false}});
  sweep.push_back({alternating(7), {3, 5, 7}, {true, false, false}});
  sweep.push_back({psl27(), {3, 7}, {false, false}});
  sweep.push_back(
      {projective_special_linear(2, 8), {3, 7}, {false, false}});
  sweep.push_back(
      {projective_special_linear(2, 9), {3, 5}, {false, false}});
  sweep.push_back(
      {projective_special_linear(2, 11), {3, 5, 11}, {false, false, false}});
  sweep.push_back(
      {projective_special_linear(2, 13), {3, 7, 13}, {false, false, false}});
  for (const Pair& pair : sweep) {
    for (size_t i = 0; i < pair.primes.size(); ++i) {
      CAPTURE(pair.G.order);
      CAPTURE(pair.primes[i]);
      CriterionReport rep = bender_equivalence(pair.G, pair.primes[i]);
      CHECK(rep.verdict == pair.connected[i]);
    }
  }
}

TEST_CASE("sylow cyclicity reads off maximal element orders") {
  CHECK(sylow_cyclic(alternating(5), 5));
  CHECK(!sylow_cyclic(alternating(9), 3));
  CHECK(sylow_cyclic(projective_special_linear(3, 3), 13));
  CHECK(sylow_cyclic(projective_special_linear(2, 8), 3));

  GroupHandle a5 = alternating(5);
  CHECK_THROWS_AS(sylow_cyclic(a5, 7), std::invalid_argument);
  CHECK_THROWS_AS(sylow_cyclic(a5, 4), std::invalid_argument);
}

TEST_CASE("amalgam criterion certifies connectivity from two parts") {
  GroupHandle a8 = alternating(8);
  GroupHandle first = seven_point_stabilizer(8, 1);
  GroupHandle last = seven_point_stabilizer(8, 2);
  REQUIRE(first.order == 2520);
  REQUIRE(last.order == 2520);

  CriterionReport good = amalgam_criterion(a8, first, last, 3);
  CHECK(good.verdict);
  CHECK(good.numbers.at("joint_order") == 20160);
  check_witnesses(good);

  CriterionReport stuck = amalgam_criterion(a8, first, first, 3);
  CHECK(!stuck.verdict);
  CHECK(note_mentions(stuck, "do not generate"));

  // Two five-point stabilizers join a six-point alternating group, but
  // their own order-3 graphs are already disconnected.
  GroupHandle a6 = alternating(6);
  GroupHandle p1 = bsgs_build(6, {parse_cycles("(1,2,3)", 6),
                                  parse_cycles("(1,2,3,4,5)", 6)});
  GroupHandle p2 = bsgs_build(6, {parse_cycles("(2,3,4)", 6),
                                  parse_cycles("(2,3,4,5,6)", 6)});
  CriterionReport apart = amalgam_criterion(a6, p1, p2, 3);
  CHECK(!apart.verdict);
  CHECK(note_mentions(apart, "disconnected"));
}

TEST_CASE("mathieu 22 splits over two alternating amalgam parts") {
  GroupHandle m22 = load_data("m22");
  GroupHandle a = load_data("m22_amalgam_a");
  GroupHandle b = load_data("m22_amalgam_b");
  REQUIRE(m22.order == 443520);
  REQUIRE(a.order == 2520);
  REQUIRE(b.order == 2520);
  CriterionReport rep = amalgam_criterion(m22, a, b, 3);
  CHECK(rep.verdict);
  CHECK(rep.numbers.at("joint_order") == 443520);
}

TEST_CASE("uabg criterion grows the component stabilizer") {
  GroupHandle a5 = alternating(5);
  Perm x = parse_cycles("(1,2,3)", 5);
  GroupHandle u = generated_subgroup(a5, {x});
  Perm g = parse_cycles("(1,2)(4,5)", 5);

  CriterionReport good = uabg_criterion(a5, u, u, u, g, x);
  CHECK(good.verdict);
  CHECK(good.numbers.at("extended_order") == 6);
  CHECK(good.numbers.at("vertices_in_u") == 2);
  CHECK(element_order(good.elements.at("x_conjugate")) == 3);
  check_witnesses(good);

  Perm away = parse_cycles("(1,4)(2,5)", 5);
  CriterionReport outside = uabg_criterion(a5, u, u, u, away, x);
  CHECK(!outside.verdict);
  CHECK(note_mentions(outside, "not inside B"));

  CriterionReport inside = uabg_criterion(a5, u, u, u, x, x);
  CHECK(!inside.verdict);
  CHECK(note_mentions(inside, "g lies in U"));

  CriterionReport missing =
      uabg_criterion(a5, u, u, u, g, parse_cycles("(1,2,4)", 5));
  CHECK(!missing.verdict);
  CHECK(note_mentions(missing, "x is not in A"));
}

TEST_CASE("symplectic six over two feeds the uabg criterion") {
  GroupHandle sp = symplectic(6, 2);
  GroupHandle u = load_data("sp6_2_uabg_u");
  GroupHandle a = load_data("sp6_2_uabg_a");
  GroupHandle b = load_data("sp6_2_uabg_b");
  Perm g = load_data("sp6_2_uabg_g").generators.at(0);
  Perm x = load_data("sp6_2_uabg_x").generators.at(0);
  REQUIRE(sp.order == 1451520);
  REQUIRE(u.order == 4320);

  CriterionReport rep = uabg_criterion(sp, u, a, b, g, x);
  CHECK(rep.verdict);
  CHECK(rep.numbers.at("extended_order") > 4320);
  CHECK(rep.numbers.at("x_order") == 3);
}

TEST_CASE("abelian normalizer families connect classes") {
  GroupHandle f21 = frobenius21();
  Perm seven = parse_cycles("(1,2,3,4,5,6,7)", 7);
  GroupHandle c7 = generated_subgroup(f21, {seven});
  CriterionReport normal = abelian_criterion(f21, seven, {c7});
  CHECK(normal.verdict);
  CHECK(normal.numbers.at("class_size") == 3);

  GroupHandle a5 = alternating(5);
  Perm x = parse_cycles("(1,2,3)", 5);
  GroupHandle c3 = generated_subgroup(a5, {x});
  CriterionReport open = abelian_criterion(a5, x, {c3});
  CHECK(!open.verdict);
  CHECK(note_mentions(open, "inconclusive"));
  CHECK(open.numbers.at("generated_order") == 6);

  GroupHandle twisted =
      generated_subgroup(a5, {x, parse_cycles("(1,2)(4,5)", 5)});
  CHECK_THROWS_AS(abelian_criterion(a5, x, {twisted}), std::invalid_argument);
  GroupHandle elsewhere =
      generated_subgroup(a5, {parse_cycles("(1,4,5)", 5)});
  CHECK_THROWS_AS(abelian_criterion(a5, x, {elsewhere}),
                  std::invalid_argument);
}

TEST_CASE("unitary 3 4 connects an order five class through two tori") {
  GroupHandle u34 = projective_special_unitary(3, 4);
  Perm x = load_data("psu3_4_abelian_x").generators.at(0);
  GroupHandle a1 = load_data("psu3_4_abelian_a1");
  GroupHandle a2 = load_data("psu3_4_abelian_a2");
  REQUIRE(u34.order == 62400);
  REQUIRE(a1.order == 25);
  REQUIRE(a2.order == 25);

  CriterionReport rep = abelian_criterion(u34, x, {a1, a2});
  CHECK(rep.verdict);
  CHECK(rep.numbers.at("class_size") == 208);
}

TEST_CASE("centralizer scans certify big components") {
  GroupHandle a8 = alternating(8);
  VertexIndex X = vertex_set(a8, {3, 5, 7});
  ComponentPartition P = components(a8, X);
  classify(P, a8, X);
  CriterionReport rep = nonabelian_centralizer_scan(a8, X, P);
  CHECK(rep.verdict);
  CHECK(rep.numbers.at("big_components") == 1);
  CHECK(rep.numbers.at("component_0_centralizer_order") == 180);
  CHECK(element_order(rep.elements.at("component_0_witness")) == 3);

  GroupHandle a5 = alternating(5);
  VertexIndex X5 = vertex_set(a5, {3, 5});
  ComponentPartition P5 = components(a5, X5);
  classify(P5, a5, X5);
  CriterionReport none = nonabelian_centralizer_scan(a5, X5, P5);
  CHECK(none.verdict);
  CHECK(none.numbers.at("big_components") == 0);

  ComponentPartition raw = components(a5, X5);
  CHECK_THROWS_AS(nonabelian_centralizer_scan(a5, X5, raw),
                  std::invalid_argument);
}

TEST_CASE("small component corollary holds where big components exist") {
  GroupHandle a8 = alternating(8);
  VertexIndex X = vertex_set(a8, {3, 5, 7});
  ComponentPartition P = components(a8, X);
  classify(P, a8, X);
  CriterionReport rep = small_component_corollary(a8, X, P);
  CHECK(rep.verdict);
  CHECK(rep.numbers.at("classes_checked") == 2);
  CHECK(rep.numbers.at("allowlisted_classes") == 0);

  GroupHandle m12 = load_data("m12");
  VertexIndex Xm = vertex_set(m12, {3, 5, 11});
  ComponentPartition Pm = components(m12, Xm);
  classify(Pm, m12, Xm);
  CriterionReport sporadic = small_component_corollary(m12, Xm, Pm);
  CHECK(sporadic.verdict);
  CHECK(sporadic.numbers.at("classes_checked") >= 3);

  GroupHandle l33 = projective_special_linear(3, 3);
  VertexIndex Xl = vertex_set(l33, {3, 13});
  ComponentPartition Pl = components(l33, Xl);
  classify(Pl, l33, Xl);
  bool found_big = false;
  for (const ComponentInfo& comp : Pl.components) {
    if (!comp.big) continue;
    found_big = true;
    CHECK(comp.order_set == std::vector<uint64_t>{3});
  }
  REQUIRE(found_big);
  CHECK(small_component_corollary(l33, Xl, Pl).verdict);

  GroupHandle a5 = alternating(5);
  VertexIndex X5 = vertex_set(a5, {3, 5});
  ComponentPartition P5 = components(a5, X5);
  classify(P5, a5, X5);
  CHECK_THROWS_AS(small_component_corollary(a5, X5, P5),
                  std::invalid_argument);
}

TEST_CASE("connected graphs force noncyclic Sylows or a nontrivial core") {
  struct Pair {
    GroupHandle G;
    std::vector<uint64_t> primes;
  };
  std::vector<Pair> sweep;
  sweep.push_back({alternating(5), {3, 5}});
  sweep.push_back({alternating(6), {3, 5}});
  sweep.push_back({alternating(7), {3, 5, 7}});
  sweep.push_back({alternating(8), {3, 5, 7}});
  sweep.push_back({frobenius21(), {3, 7}});
  sweep.push_back({psl27(), {3, 7}});
  sweep.push_back({projective_special_linear(2, 8), {3, 7}});
  bool nonvacuous = false;
  for (const Pair& pair : sweep) {
    for (uint64_t p : pair.primes) {
      VertexIndex X = vertex_set(pair.G, {p});
      if (X.size() == 0) continue;
      if (components(pair.G, X).components.size() != 1) continue;
      CAPTURE(pair.G.order);
      CAPTURE(p);
      bool cyclic = sylow_cyclic(pair.G, p);
      bool cored = p_core(pair.G, p).order > 1;
      CHECK((!cyclic || cored));
      if (cyclic) nonvacuous = true;
    }
  }
  // The Frobenius group supplies a connected graph over a cyclic Sylow.
  CHECK(nonvacuous);
}
