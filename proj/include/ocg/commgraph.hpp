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

#ifndef OCG_COMMGRAPH_HPP
#define OCG_COMMGRAPH_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "ocg/group.hpp"
#include "ocg/perm.hpp"

namespace ocg {

// Vertex set of the commuting graph: the elements of G whose order lies in
// rho, tagged with their conjugacy class. Vertices are numbered class by
// class, each class walked breadth first from its representative under
// generator conjugation, so ids of one class are contiguous and every run
// produces the same numbering.
struct VertexIndex {
  int degree = 0;
  std::vector<uint64_t> rho;            // ascending odd primes
  std::vector<ConjugacyClass> classes;  // the classes with order in rho
  std::vector<uint32_t> class_first;    // classes[c] owns ids [class_first[c], class_first[c+1])
  std::vector<uint32_t> class_of;       // vertex id -> index into classes
  ElementIndex elements;

  VertexIndex(int degree_, uint64_t expected)
      : degree(degree_), elements(degree_, expected) {}

  uint32_t size() const { return elements.count; }
  // ElementIndex::npos when x is not a vertex.
  uint32_t vertex_of(const Perm& x) const {
    return elements.find(x.data());
  }
};

// rho must be ascending, odd primes only, no repeats.
VertexIndex vertex_set(const GroupHandle& G, const std::vector<uint64_t>& rho);
VertexIndex vertex_set(const GroupHandle& G, const std::vector<uint64_t>& rho,
                       const std::vector<ConjugacyClass>& classes);

// One connected component. fingerprint rows are (element order, class index,
// member count); rows appear in ascending class index order, which is also
// ascending (order, class index) order.
struct ComponentInfo {
  uint64_t size = 0;
  std::vector<uint64_t> order_set;   // ascending distinct element orders
  std::vector<uint32_t> class_ids;   // ascending distinct class indices
  std::vector<std::array<uint64_t, 3>> fingerprint;
  bool big = false;
};

// Components are numbered by least contained vertex id, so two runs over the
// same VertexIndex agree component by component.
struct ComponentPartition {
  std::vector<uint32_t> component_of;  // vertex id -> component id
  std::vector<ComponentInfo> components;
  bool classified = false;
};

// Connected components via one centralizer computation per class: the
// neighbors of x^g are exactly the conjugates by g of the vertices
// commuting with x.
ComponentPartition components(const GroupHandle& G, const VertexIndex& X);

// All-pairs commuting test; the reference algorithm for cross-checks.
ComponentPartition components_naive(const VertexIndex& X);

// Sets the big flag of each component (closure under conjugation by every
// generator) and checks the partition against the class structure: a big
// component must contain every vertex whose order it touches, a small one
// must meet every class it touches in a proper fraction. Violations throw
// std::logic_error.
void classify(ComponentPartition& P, const GroupHandle& G,
              const VertexIndex& X);

// Stabilizer in G of the component containing the given vertex: all g with
// x^g in the same component as x. Streaming filter over G.
GroupHandle component_stabilizer(const GroupHandle& G, const VertexIndex& X,
                                 const ComponentPartition& P, uint32_t vertex);

// Connectivity of the commuting graph restricted to the single class x^G.
bool class_connected(const GroupHandle& G, const ConjugacyClass& cls);

// Graph on the odd primes dividing |G|, with a directed edge r1 -> r2 when
// r2 divides the centralizer order of some element of order r1.
// prime_component reads the symmetrized reachability.
struct PrimeLinkGraph {
  std::vector<uint64_t> primes;            // ascending
  std::vector<std::vector<uint8_t>> edge;  // edge[i][j]: direct edge i -> j
  std::vector<uint32_t> component_of;      // symmetrized reachability class

  std::vector<uint64_t> prime_component(uint64_t r) const;
};

PrimeLinkGraph prime_link_graph(const GroupHandle& G);
PrimeLinkGraph prime_link_graph(const std::vector<ConjugacyClass>& classes,
                                uint64_t group_order);

}  // namespace ocg

#endif  // OCG_COMMGRAPH_HPP
