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

#ifndef REE_DESIGN_HPP_
#define REE_DESIGN_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ree/conic.hpp"
#include "ree/groups.hpp"

namespace ree {

using Block = std::vector<std::uint32_t>;

// A finite incidence structure: points 0..v-1 and a list of blocks, each a
// sorted set of points. Block order is preserved as given.
class IncidenceDesign {
 public:
  // Sorts each block; throws InvalidArgument for out-of-range entries,
  // repeated points inside a block, or repeated blocks.
  IncidenceDesign(std::uint32_t v, std::vector<Block> blocks);

  // Interchange format: a line `v b`, then b lines of 0-based point indices.
  static IncidenceDesign parse(std::istream& in);
  static IncidenceDesign read_file(const std::string& path);
  std::string to_text() const;
  void write_file(const std::string& path) const;
  // 64-bit FNV-1a of to_text(), as 16 hex digits.
  std::string digest() const;

  std::uint32_t num_points() const { return v_; }
  std::uint32_t num_blocks() const { return static_cast<std::uint32_t>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::uint32_t b) const { return blocks_.at(b); }
  const std::vector<std::uint32_t>& blocks_through(std::uint32_t p) const { return through_.at(p); }
  bool contains(std::uint32_t block, std::uint32_t point) const;
  std::optional<std::uint32_t> find_block(const Block& sorted) const;

  // True iff any two points share at most one block and every block has at
  // least two points.
  bool is_partial_linear_space() const { return linear_; }
  // The unique block through two distinct points of a partial linear space,
  // or -1.
  std::int32_t block_through(std::uint32_t a, std::uint32_t b) const;

  // Point x becomes perm[x]; block order is kept.
  IncidenceDesign relabeled(const Perm& perm) const;
  IncidenceDesign without_block(std::uint32_t b) const;

  std::vector<std::string> point_labels;
  std::vector<std::string> block_labels;

 private:
  std::uint32_t v_;
  std::vector<Block> blocks_;
  std::vector<std::vector<std::uint32_t>> through_;
  std::vector<std::int32_t> pair_block_;
  bool linear_ = false;
};

IncidenceDesign fano_plane();

struct ValidationReport {
  bool ok = true;
  std::string message;
  // A block index (wrong size) or a t-subset (wrong coverage) on failure.
  std::vector<std::uint32_t> witness;
};
// Checks the t-(v, k, lambda) conditions; t must be 1, 2 or 3.
ValidationReport validate(const IncidenceDesign& d, std::uint32_t t, std::uint32_t k,
                          std::uint32_t lambda);

// Points are the external lines of the conic (in context order), blocks the
// external points: block i holds the external lines through
// ctx.external_points[i]. Throws InternalError unless the result is a
// 2-(28, 4, 1) design.
IncidenceDesign build_ree_unital(const HyperovalContext& ctx);

// The permutation of blocks induced by a point permutation, or nullopt when
// the point permutation is not an automorphism onto `to`.
std::optional<Perm> block_permutation(const IncidenceDesign& from, const IncidenceDesign& to,
                                      const Perm& point_map);
inline std::optional<Perm> block_permutation(const IncidenceDesign& d, const Perm& point_map) {
  return block_permutation(d, d, point_map);
}

struct BacktrackLimits {
  std::uint64_t node_budget = 50'000'000;
  std::size_t max_elements = kMaxGroupOrder;
};

// Full automorphism group on points by backtracking with forward checking.
// Requires a partial linear space with at most 64 points. Throws
// ResourceError when the node budget or element cap is exceeded.
PermGroup automorphism_group(const IncidenceDesign& d, const BacktrackLimits& limits = {});
// A point bijection carrying blocks of `a` onto blocks of `b`, or nullopt.
std::optional<Perm> find_isomorphism(const IncidenceDesign& a, const IncidenceDesign& b,
                                     const BacktrackLimits& limits = {});

struct Configuration {
  std::vector<std::uint32_t> blocks;  // sorted
  // Intersection points of block pairs (i, j), i < j, in lexicographic order.
  std::vector<std::uint32_t> points;
};

// All sets of `size` pairwise intersecting blocks, no three through a common
// point. Requires a partial linear space.
std::vector<Configuration> general_position_configurations(const IncidenceDesign& d,
                                                           std::size_t size);
inline std::vector<Configuration> onan_configurations(const IncidenceDesign& d) {
  return general_position_configurations(d, 4);
}
inline std::vector<Configuration> super_onan_configurations(const IncidenceDesign& d) {
  return general_position_configurations(d, 5);
}

}  // namespace ree

#endif  // REE_DESIGN_HPP_
