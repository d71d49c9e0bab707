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

#ifndef OCG_CRITERIA_HPP
#define OCG_CRITERIA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ocg/commgraph.hpp"
#include "ocg/group.hpp"
#include "ocg/perm.hpp"

namespace ocg {

// Outcome of one criterion run. Witness material (orders, subgroups,
// elements) is kept so a verdict can be re-checked without rerunning the
// computation that found it.
struct CriterionReport {
  std::string criterion;
  bool verdict = false;
  std::map<std::string, uint64_t> numbers;
  std::map<std::string, GroupHandle> subgroups;
  std::map<std::string, Perm> elements;
  std::string note;
};

// A nontrivial normal p-subgroup forces the commuting graph on the order-p
// elements to be connected; when the verdict is true the connectivity is
// recomputed and checked.
CriterionReport p_local_criterion(const GroupHandle& G, uint64_t p);
CriterionReport p_local_criterion(const GroupHandle& G, uint64_t p,
                                  const std::vector<ConjugacyClass>& classes);

// U = subgroup generated by the normalizers of all nontrivial subgroups of
// one fixed Sylow p-subgroup P; verdict is U = G. Subgroups of P are
// enumerated by joining cyclic subgroups, which caps |P| at 1024.
CriterionReport generation_criterion(const GroupHandle& G, uint64_t p);

inline constexpr uint64_t kMaxSylowForEnumeration = 1024;
inline constexpr uint64_t kMaxEmbeddingIndex = 100000;

// True iff p divides |U| but no |U meet U^g| for g outside U. Quantified
// over a right transversal since the intersection depends only on the
// coset; index capped at kMaxEmbeddingIndex.
bool strongly_p_embedded(const GroupHandle& G, const GroupHandle& U,
                         uint64_t p);

// Runs the connectivity and generation criteria independently and insists
// they agree; when both fail it further checks that the p-core is trivial
// and that the generated U is strongly p-embedded. Disagreement is a
// std::logic_error, never a verdict.
CriterionReport bender_equivalence(const GroupHandle& G, uint64_t p);
CriterionReport bender_equivalence(const GroupHandle& G, uint64_t p,
                                   const std::vector<ConjugacyClass>& classes);

// True iff some element order equals the full p-part of |G|.
bool sylow_cyclic(const GroupHandle& G, uint64_t p);

// Checks <A,B> = G, a p-element in the intersection, and connectivity of
// the order-p commuting graphs of A and B; when all hold, connectivity of
// the order-p graph of G is asserted and verified.
CriterionReport amalgam_criterion(const GroupHandle& G, const GroupHandle& A,
                                  const GroupHandle& B, uint64_t p);
CriterionReport amalgam_criterion(const GroupHandle& G, const GroupHandle& A,
                                  const GroupHandle& B, uint64_t p,
                                  const std::vector<ConjugacyClass>& classes);

// Commuting-product configuration: U = AB with [A,B] = 1 and A^g inside B
// moves x to a conjugate x^g in the same component of the graph on
// x^G meet U, so the component stabilizer grows past U. Hypothesis
// failures are reported in the verdict; a failed conclusion after valid
// hypotheses is a std::logic_error.
CriterionReport uabg_criterion(const GroupHandle& G, const GroupHandle& U,
                               const GroupHandle& A, const GroupHandle& B,
                               const Perm& g, const Perm& x);

// Sufficient condition only: if the normalizers of the supplied abelian
// subgroups through x generate G, the class of x is connected (asserted and
// verified). A false verdict is inconclusive.
CriterionReport abelian_criterion(const GroupHandle& G, const Perm& x,
                                  const std::vector<GroupHandle>& family);

// For every big component of a simple group, finds a class whose
// centralizer is nonabelian; absence contradicts the Fitting-subgroup
// alternative and is a std::logic_error.
CriterionReport nonabelian_centralizer_scan(const GroupHandle& G,
                                            const VertexIndex& X,
                                            const ComponentPartition& P);

// For each prime r realized only in small components of a simple group with
// a big component: the odd-generated part of every centralizer is abelian
// and the Sylow r-subgroups are cyclic. The one documented exception
// pattern is allowlisted by (order, r) and named in the note.
CriterionReport small_component_corollary(const GroupHandle& G,
                                          const VertexIndex& X,
                                          const ComponentPartition& P);

}  // namespace ocg

#endif  // OCG_CRITERIA_HPP
