// Copyright 2026 The Ree Workbench Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REE_GROUPS_HPP_
#define REE_GROUPS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ree/field.hpp"

namespace ree {

// A permutation of [0, n) as a dense image array.
using Perm = std::vector<std::uint32_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

Perm identity_perm(std::size_t n);
// compose(g, h) applies h first: compose(g, h)[x] == g[h[x]].
Perm compose(const Perm& g, const Perm& h);
Perm inverse(const Perm& g);
// g h g^-1
Perm conjugate(const Perm& g, const Perm& h);
std::size_t perm_order(const Perm& g);
bool is_identity(const Perm& g);
// Cycle notation with 0-based points, "()" for the identity.
std::string to_cycles(const Perm& g);
// Throws InvalidArgument unless g is a bijection of [0, g.size()).
void check_perm(const Perm& g);

inline constexpr std::size_t kMaxGroupOrder = 100000;

// A finite permutation group with all of its elements materialized.
//
// Elements are produced by breadth-first closure from the generators, so the
// element order is deterministic. elements()[0] is the identity.
class PermGroup {
 public:
  // Throws ResourceError when the closure grows past `cap` elements.
  static PermGroup closure(std::size_t degree, std::vector<Perm> generators,
                           std::size_t cap = kMaxGroupOrder);
  // The subgroup formed by the given elements, which must be closed.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Perm& g) const;
  bool contains(const Perm& g) const { return index_.count(g) != 0; }

 private:
  PermGroup() = default;
  void index_elements();

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

// A small generating set: elements are taken greedily, in element order,
// whenever they are not in the span of those already taken.
std::vector<Perm> greedy_generators(const PermGroup& group);

std::vector<std::uint32_t> orbit(const PermGroup& g, std::uint32_t seed);
std::vector<std::vector<std::uint32_t>> orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);
// Transitive on ordered pairs of distinct points.
bool is_2_transitive(const PermGroup& g);

PermGroup point_stabilizer(const PermGroup& g, std::uint32_t point);
// Elements mapping `set` onto itself.
PermGroup set_stabilizer(const PermGroup& g, const std::vector<std::uint32_t>& set);
// The action of g on a subset closed under g, relabeled to [0, subset.size()).
// Throws InvalidArgument when the subset is not invariant.
PermGroup restrict_action(const PermGroup& g, const std::vector<std::uint32_t>& subset);

std::vector<Perm> involutions(const PermGroup& g);
std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x);
// Elements of order exactly k.
std::size_t count_elements_of_order(const PermGroup& g, std::size_t k);
bool is_abelian(const PermGroup& g);
bool is_elementary_abelian_2(const PermGroup& g);

// All Sylow 2-subgroups. Requires the 2-part of |g| to be at most 64.
std::vector<PermGroup> sylow2(const PermGroup& g);

// Order 12, three involutions, no element of order 6.
bool is_A4(const PermGroup& g);
// True iff some subgroup is isomorphic to A4 (searched over 2-generated
// subgroups of order 12).
bool has_A4_subgroup(const PermGroup& g);

struct Primitivity {
  bool primitive = false;
  // A nontrivial block system when not primitive, blocks sorted.
  std::vector<std::vector<std::uint32_t>> blocks;
};
// Minimal blocks through pairs {0, x}. Throws InvalidArgument when g is not
// transitive.
Primitivity primitivity(const PermGroup& g);
// True iff the partition is preserved by every generator.
bool is_block_system(const PermGroup& g, const std::vector<std::vector<std::uint32_t>>& blocks);

// The permutation group induced by conjugation on a conjugation-invariant
// list of elements.
PermGroup conjugation_action(const PermGroup& g, const std::vector<Perm>& elements);

struct CommutingGraph {
  std::vector<Perm> vertices;
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::size_t edge_count = 0;
};
CommutingGraph commuting_graph(const std::vector<Perm>& involutions);
// Connected components, each sorted, ordered by least vertex.
std::vector<std::vector<std::uint32_t>> components(const CommutingGraph& graph);
bool is_clique(const CommutingGraph& graph, const std::vector<std::uint32_t>& vertices);

// PSL(2, q) on the q + 1 points of the projective line: 0..q-1 are field
// codes, q is infinity.
PermGroup psl2(const Field& field);
PermGroup cyclic_group(std::size_t n);
// Dihedral group of order 2n acting on an n-gon.
PermGroup dihedral_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);

}  // namespace ree

#endif  // REE_GROUPS_HPP_
