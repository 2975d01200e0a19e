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

#ifndef REE_CONIC_HPP_
#define REE_CONIC_HPP_

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "ree/groups.hpp"
#include "ree/plane.hpp"

namespace ree {

enum class LineClass { kSecant, kTangent, kExternal };
std::string_view to_string(LineClass c);

// The conic X^2 + YZ = 0 (or an image of it), its nucleus and the hyperoval
// O = K u {N}, with every point and line of the plane classified.
struct HyperovalContext {
  std::shared_ptr<const Plane> plane;
  std::vector<Plane::Index> conic;  // sorted
  Plane::Index nucleus = 0;
  std::vector<Plane::Index> hyperoval;  // sorted
  std::vector<LineClass> line_class;    // by line index
  std::vector<bool> on_hyperoval;       // by point index
  std::vector<Plane::Index> external_points;  // sorted
  std::vector<Plane::Index> external_lines;   // sorted
  std::vector<Plane::Index> tangents;
  std::vector<Plane::Index> secants;
  // Position in external_points / external_lines, or -1.
  std::vector<std::int32_t> external_point_ordinal;
  std::vector<std::int32_t> external_line_ordinal;

  bool is_external_point(Plane::Index p) const { return external_point_ordinal[p] >= 0; }
  bool is_external_line(Plane::Index l) const { return external_line_ordinal[l] >= 0; }
  // The tangent of K through a point off K. Throws for points on K.
  Plane::Index tangent_through(Plane::Index p) const;
};

// Context for X^2 + YZ = 0 over a field of characteristic 2.
HyperovalContext build_context(const Field& field = Field::gf8());
// Context for the image of X^2 + YZ = 0 under `transform`; the
// classification is recomputed from scratch on the moved conic.
HyperovalContext build_context(std::shared_ptr<const Plane> plane, const Collineation& transform);

// Classification by counting |K n l|.
LineClass classify_line(const HyperovalContext& ctx, Plane::Index line);
// Y = mX + bZ (m != 0) misses X^2 + YZ = 0 iff tr(b/m^2) = 1.
bool external_by_trace(const FieldElement& m, const FieldElement& b);

// A group of collineations together with its faithful actions on points and
// on lines. The three element lists are aligned: collineations[i] acts as
// on_points.element(i) and on_lines.element(i).
struct CollineationGroup {
  std::vector<Collineation> collineations;
  PermGroup on_points;
  PermGroup on_lines;

  std::size_t order() const { return collineations.size(); }
};

// Wraps a closed list of collineations.
CollineationGroup make_collineation_group(const Plane& plane, std::vector<Collineation> elements);
// Closure of the given generators.
CollineationGroup generate_collineation_group(const Plane& plane,
                                              const std::vector<Collineation>& generators,
                                              std::size_t cap = kMaxGroupOrder);

// All collineations preserving the hyperoval, found by sending a frame of
// four conic points to every ordered quadruple of hyperoval points under every
// field automorphism and keeping the maps that preserve O.
CollineationGroup hyperoval_stabilizer(const HyperovalContext& ctx);

}  // namespace ree

#endif  // REE_CONIC_HPP_
