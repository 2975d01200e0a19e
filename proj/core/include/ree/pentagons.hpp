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

#ifndef REE_PENTAGONS_HPP_
#define REE_PENTAGONS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ree/conic.hpp"
#include "ree/design.hpp"

namespace ree {

// A, C1, C2, C3, C4 of the fundamental pentagon over the canonical GF(8).
std::array<ProjPoint, 5> fundamental_points(const Field& gf8);

// <Gamma, Phi>: the elations tau_c with tr(c) = 0 together with Frobenius.
CollineationGroup fundamental_group(const Plane& plane);

// Five points in general position, off the hyperoval, joined pairwise by
// external lines.
bool is_external_pentagon(const HyperovalContext& ctx, const std::array<Plane::Index, 5>& points);

struct Pentagon {
  std::array<Plane::Index, 5> points{};  // sorted
  // Labels transported from the fundamental pentagon: apex plays A, c[i]
  // plays C(i+1).
  Plane::Index apex = 0;
  std::array<Plane::Index, 4> c{};
  // Index into the collineation group of an element carrying the
  // fundamental pentagon, with its labels, onto this one.
  std::size_t transport = 0;
  std::size_t stabilizer_order = 0;
  bool a4_type = false;
  // The stabilizer fixes exactly one vertex (the apex) and is 2-transitive
  // on the remaining four.
  bool fixes_apex_only = false;
  bool two_transitive_on_rest = false;
};

// All 5-subsets of external points forming external pentagons, sorted.
std::vector<std::array<Plane::Index, 5>> external_pentagons(const HyperovalContext& ctx);

// The fundamental pentagon with the identity as transport.
Pentagon fundamental_pentagon(const HyperovalContext& ctx, const CollineationGroup& group);

// Every external pentagon with stabilizer data, in the order of
// external_pentagons. Labels come from transport by `group`; a pentagon
// outside the group orbit of the fundamental one gets transport = npos
// and its points in sorted order as labels.
std::vector<Pentagon> classify_pentagons(const HyperovalContext& ctx, const CollineationGroup& group);
inline constexpr std::size_t kNoTransport = static_cast<std::size_t>(-1);

// The 12 even permutations ijkl of {1,2,3,4} in lexicographic order, as
// 0-based label sequences.
using LabelSeq = std::array<std::uint8_t, 4>;
const std::array<LabelSeq, 12>& even_sequences();
std::string sequence_name(const LabelSeq& s);  // "1234"
std::size_t sequence_index(const LabelSeq& s);
// The three cosets of the Klein four-group in A4, as index quadruples into
// even_sequences().
const std::array<std::array<std::size_t, 4>, 3>& klein_cosets();

struct DLineFamily {
  // first[n] = AC_i n C_jC_l and second[n] = AC_j n C_kC_l for the n-th
  // sequence ijkl; lines[n] joins them.
  std::array<Plane::Index, 12> first{};
  std::array<Plane::Index, 12> second{};
  std::array<Plane::Index, 12> lines{};
};
// Throws InternalError if a required meet or join degenerates.
DLineFamily d_lines(const Plane& plane, const Pentagon& p);

struct ClaimResult {
  bool ok = false;
  std::string detail;
};

struct PentagonClaims {
  ClaimResult distinct;       // 12 distinct d-lines
  ClaimResult external;       // all external to the conic
  ClaimResult quadruples;     // coset quadruples concurrent on the tangent through A
  ClaimResult concurrency;    // AC4, d1234, d3241 concurrent
  bool ok() const { return distinct.ok && external.ok && quadruples.ok && concurrency.ok; }
};
PentagonClaims verify_pentagon_claims(const HyperovalContext& ctx, const Pentagon& p);

// Blocks of a super O'Nan configuration with labels a, c1..c4.
struct SocLabeling {
  std::uint32_t a = 0;
  std::array<std::uint32_t, 4> c{};
};

// Labels induced through the dual correspondence block i <-> external
// point i.
SocLabeling soc_labeling_from_pentagon(const HyperovalContext& ctx, const Pentagon& p);

struct SocDPoints {
  // D-points by sequence, or -1 where the two connecting blocks do not meet
  // in exactly one point.
  std::array<std::int32_t, 12> d{};
  ClaimResult exists;       // every D-point is well defined
  ClaimResult distinct;     // (i)
  ClaimResult coset_blocks; // (ii): each coset quadruple is a block
  ClaimResult collinear;    // (iii): a n c4, D1234, D3241 in a block
  bool ok() const { return exists.ok && distinct.ok && coset_blocks.ok && collinear.ok; }
};
SocDPoints soc_d_points(const IncidenceDesign& d, const SocLabeling& labels);

// Number of labelings (choice of a and an ordering of c1..c4) of the five
// blocks that satisfy all of soc_d_points' claims.
std::size_t count_valid_soc_labelings(const IncidenceDesign& d, const std::vector<std::uint32_t>& blocks);

}  // namespace ree

#endif  // REE_PENTAGONS_HPP_
