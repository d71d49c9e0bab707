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

#ifndef OCG_CATALOG_HPP
#define OCG_CATALOG_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ocg/field.hpp"
#include "ocg/group.hpp"

namespace ocg {

// Alternating group on n points, 3 <= n <= 12.
GroupHandle alternating(int n,
                        uint64_t element_budget = kDefaultElementBudget);

// Image of SL_n(q) acting on the (q^n-1)/(q-1) projective points, which is
// PSL_n(q). Generated from elementary transvections, then the generator set
// is thinned while the order is pinned against the product formula.
GroupHandle projective_special_linear(
    int n, uint32_t q, uint64_t element_budget = kDefaultElementBudget);

// Image of SU_n(q) < SL_n(q^2) on the projective points of GF(q^2)^n. The
// hermitian form is x_1 y_n^q + ... + x_n y_1^q; generators are the unitary
// transvections along isotropic points. n = 3 with q = 2 is rejected since
// its transvections do not generate.
GroupHandle projective_special_unitary(
    int n, uint32_t q, uint64_t element_budget = kDefaultElementBudget);

// Image of Sp_d(q), d = 2m, on the projective points of GF(q)^d, generated
// by symplectic transvections.
GroupHandle symplectic(int d, uint32_t q,
                       uint64_t element_budget = kDefaultElementBudget);

// SL_n(q) in its faithful action on the q^n - 1 nonzero vectors of the
// natural module. Vector v sits at id sum_i v_i q^i - 1, the order
// scalar_class_quotient expects.
GroupHandle special_linear_vectors(
    int n, uint32_t q, uint64_t element_budget = kDefaultElementBudget);

// Action induced on the projective points by a permutation of the nonzero
// vectors, in the same point order the projective constructors use. Throws
// when the input does not respect the scalar classes.
Perm scalar_class_quotient(int n, uint32_t q, const Perm& vector_perm);

struct GroupSpec {
  enum class Family { Alternating, Linear, Unitary, Symplectic, File };
  std::string name;
  Family family = Family::File;
  int n = 0;
  uint32_t q = 0;
  std::string path;
  std::optional<uint64_t> expected_order;
  std::optional<bool> expected_simple;
};

// Parsed form of the line-oriented group file format: `name`, `degree`,
// optional `order`, optional `simple`, other headers kept verbatim, then one
// generator per line in disjoint-cycle notation with 1-based points.
struct GroupFile {
  std::string name;
  int degree = 0;
  std::optional<uint64_t> order;
  std::optional<bool> simple;
  std::map<std::string, std::string> extra;
  std::vector<Perm> generators;
  // Written as leading `#` lines (provenance notes); not read back.
  std::vector<std::string> comments;
};

GroupFile parse_group_file(std::istream& in, const std::string& what);
GroupFile read_group_file(const std::string& path);
void write_group_file(std::ostream& out, const GroupFile& f);

// Builds the group a spec names. A recorded order (in the spec or in the
// file's `order` header) must match the constructed BSGS order, otherwise
// the load fails; this is the integrity check for shipped data files.
GroupHandle load_group(const GroupSpec& spec,
                       uint64_t element_budget = kDefaultElementBudget);

// Permutations induced by n x n matrices (row-major field indices) on the
// projective orbit of `start`, discovered breadth first from the
// canonicalized start point. The whole projective space is never enumerated,
// so this also serves actions whose ambient space is far larger than the
// orbit. Throws when the orbit outgrows max_orbit.
std::vector<Perm> projective_orbit_action(
    const Field& F, int n, const std::vector<std::vector<Field::Elt>>& mats,
    const std::vector<Field::Elt>& start, size_t max_orbit);

// Permutation of one n x n matrix on the full projective point set, in the
// same canonical point order the classical-group constructors use. Tools
// that emit auxiliary permutations (witness subgroups, extra elements) rely
// on this to stay aligned with the constructors' point labels.
Perm projective_matrix_action(const Field& F, int n,
                              const std::vector<Field::Elt>& mat);

}  // namespace ocg

#endif  // OCG_CATALOG_HPP
