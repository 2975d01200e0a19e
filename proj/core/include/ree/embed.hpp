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

#ifndef REE_EMBED_HPP_
#define REE_EMBED_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ree/conic.hpp"
#include "ree/design.hpp"

namespace ree {

// Design points go to plane points, design blocks to plane lines.
struct Embedding {
  std::shared_ptr<const Plane> plane;
  std::vector<Plane::Index> point_map;
  std::vector<Plane::Index> block_map;
};

struct EmbeddingCheck {
  bool ok = false;
  std::string message;
  // A violated (point, block) pair, or the two colliding indices.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};
// Injectivity of both maps and P in B <=> phi(P) on phi(B) for every pair.
EmbeddingCheck verify(const IncidenceDesign& d, const Embedding& e);

// The design built by build_ree_unital(ctx) sent into the plane of ctx by
// duality: external line [a:b:c] becomes the point (a:b:c), external point
// (x:y:z) becomes the line [x:y:z].
Embedding dual_embedding(const HyperovalContext& ctx);

// The image of the embedding under a collineation of its plane.
Embedding transform(const Embedding& e, const Collineation& g);

// Coordinates pushed through subfield_embed into `target`. Throws
// InvalidArgument when the source field is not a subfield of the target's.
Embedding lift(const Embedding& e, std::shared_ptr<const Plane> target);
// True iff every image point and line has all coordinates in the image of
// the subfield embedding from `sub`.
bool inside_subplane(const Embedding& e, const Field& sub);

struct AdmissibilityResult {
  bool ok = false;
  std::string message;
  // One collineation per tested automorphism, in order.
  std::vector<Collineation> betas;
};
// For each automorphism alpha, looks for a collineation beta with
// phi(alpha(P)) = beta(phi(P)) for every design point, trying every
// Frobenius exponent on a frame of four image points.
AdmissibilityResult admissibility(const IncidenceDesign& d, const Embedding& e,
                                  const std::vector<Perm>& automorphisms);
// The ten lines dual to the hyperoval points; the dual embedding's image
// points are exactly the points on none of them.
std::vector<Plane::Index> dual_hyperoval(const HyperovalContext& ctx);
bool preserves_lines(const Plane& plane, const Collineation& g, const std::vector<Plane::Index>& lines);

// Number of images of the conic X^2 + YZ = 0 under a generated PGL(3, q), any q.
std::size_t conic_orbit_size(const Plane& plane);

struct SearchConfig {
  // 0: no reduction; 1: a flag is fixed; 2: an O'Nan configuration of four
  // blocks goes to the lines X+Y+Z=0, X=0, Y=0, Z=0.
  int level = 2;
  std::uint64_t node_budget = 1'000'000'000;
  unsigned threads = 1;
  // Stop after this many embeddings (0 = all).
  std::size_t max_solutions = 0;
};

enum class SearchStatus { kComplete, kInconclusive };

struct SearchResult {
  SearchStatus status = SearchStatus::kComplete;
  std::vector<Embedding> embeddings;
  int level = 0;  // effective level
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> depth_profile;
  std::uint64_t trace_hash = 0;
  // True when max_solutions cut the search short.
  bool truncated = false;
};

// Backtracking over point images with block images forced as joins. The
// design must be a partial linear space with at most 64 points and the
// plane order at most 16. Level 2 falls back to level 1 when the design has
// no O'Nan configuration.
SearchResult search(const IncidenceDesign& d, std::shared_ptr<const Plane> plane, const SearchConfig& cfg);

struct Transporter {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t automorphism = 0;  // index into the automorphism group
  Collineation beta;
};
inline constexpr std::size_t kNoOrbit = static_cast<std::size_t>(-1);
struct Classification {
  // Orbit representatives by least index and orbit membership.
  std::vector<std::size_t> orbit_of;
  std::size_t orbit_count = 0;
  // For each embedding other than its representative, a transporter from
  // the representative, re-verified on every point and block.
  std::vector<Transporter> transporters;
};
// Orbits of embeddings under (collineation, automorphism) pairs: beta o e_1
// = e_2 o alpha. Semilinear collineations are used iff `semilinear`.
Classification classify(const IncidenceDesign& d, const std::vector<Embedding>& embeddings,
                        const PermGroup& aut, bool semilinear);

// Fixed points of each involution of aut, as a block index.
std::vector<std::uint32_t> involution_blocks(const IncidenceDesign& d, const std::vector<Perm>& involutions);

nlohmann::json embedding_json(const IncidenceDesign& d, const Embedding& e);
nlohmann::json certificate_json(const IncidenceDesign& d, const Plane& plane, const SearchConfig& cfg,
                                const SearchResult& r);

}  // namespace ree

#endif  // REE_EMBED_HPP_
