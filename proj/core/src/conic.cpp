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

#include "ree/conic.hpp"

#include <algorithm>
#include <unordered_map>

#include "ree/error.hpp"

namespace ree {

std::string_view to_string(LineClass c) {
  switch (c) {
    case LineClass::kSecant:
      return "secant";
    case LineClass::kTangent:
      return "tangent";
    case LineClass::kExternal:
      return "external";
  }
  return "?";
}

Plane::Index HyperovalContext::tangent_through(Plane::Index p) const {
  for (auto t : tangents) {
    if (plane->incident(p, t)) {
      if (std::binary_search(conic.begin(), conic.end(), p)) break;
      return t;
    }
  }
  throw InvalidArgument("point lies on the conic or no tangent passes through it");
}

namespace {

HyperovalContext classify(std::shared_ptr<const Plane> plane, std::vector<Plane::Index> conic) {
  if (plane->field().characteristic() != 2) {
    throw InvalidArgument("a conic has a nucleus only in characteristic 2");
  }
  HyperovalContext ctx;
  ctx.plane = plane;
  std::sort(conic.begin(), conic.end());
  ctx.conic = std::move(conic);
  const std::uint32_t n = plane->size();
  std::vector<bool> on_conic(n, false);
  for (auto p : ctx.conic) on_conic[p] = true;

  ctx.line_class.resize(n);
  for (Plane::Index l = 0; l < n; ++l) {
    const auto& on = plane->points_on(l);
    const auto k = std::count_if(on.begin(), on.end(), [&](auto p) { return on_conic[p]; });
    if (k > 2) throw InternalError("line meets the conic in more than two points");
    ctx.line_class[l] = k == 2 ? LineClass::kSecant : k == 1 ? LineClass::kTangent : LineClass::kExternal;
    if (k == 2) ctx.secants.push_back(l);
    if (k == 1) ctx.tangents.push_back(l);
  }
  if (ctx.tangents.size() < 2) throw InternalError("conic has fewer than two tangents");
  ctx.nucleus = plane->meet(ctx.tangents[0], ctx.tangents[1]);
  for (auto t : ctx.tangents) {
    if (!plane->incident(ctx.nucleus, t)) throw InternalError("tangents are not concurrent");
  }

  ctx.hyperoval = ctx.conic;
  ctx.hyperoval.push_back(ctx.nucleus);
  std::sort(ctx.hyperoval.begin(), ctx.hyperoval.end());
  ctx.on_hyperoval.assign(n, false);
  for (auto p : ctx.hyperoval) ctx.on_hyperoval[p] = true;

  ctx.external_point_ordinal.assign(n, -1);
  ctx.external_line_ordinal.assign(n, -1);
  for (Plane::Index p = 0; p < n; ++p) {
    if (!ctx.on_hyperoval[p]) {
      ctx.external_point_ordinal[p] = static_cast<std::int32_t>(ctx.external_points.size());
      ctx.external_points.push_back(p);
    }
  }
  for (Plane::Index l = 0; l < n; ++l) {
    if (ctx.line_class[l] == LineClass::kExternal) {
      ctx.external_line_ordinal[l] = static_cast<std::int32_t>(ctx.external_lines.size());
      ctx.external_lines.push_back(l);
    }
  }
  return ctx;
}

std::vector<Plane::Index> standard_conic(const Plane& plane) {
  const Field& f = plane.field();
  std::vector<Plane::Index> out;
  for (Plane::Index i = 0; i < plane.size(); ++i) {
    const auto c = plane.codes(i);
    if (f.add(f.mul(c[0], c[0]), f.mul(c[1], c[2])) == 0) out.push_back(i);
  }
  return out;
}

}  // namespace

HyperovalContext build_context(const Field& field) {
  auto plane = std::make_shared<const Plane>(field);
  return classify(plane, standard_conic(*plane));
}

HyperovalContext build_context(std::shared_ptr<const Plane> plane, const Collineation& transform) {
  auto conic = standard_conic(*plane);
  for (auto& p : conic) p = plane->index_of(transform.apply_point(plane->codes(p)));
  return classify(std::move(plane), std::move(conic));
}

LineClass classify_line(const HyperovalContext& ctx, Plane::Index line) {
  const auto& on = ctx.plane->points_on(line);
  const auto k = std::count_if(on.begin(), on.end(), [&](auto p) {
    return std::binary_search(ctx.conic.begin(), ctx.conic.end(), p);
  });
  return k == 2 ? LineClass::kSecant : k == 1 ? LineClass::kTangent : LineClass::kExternal;
}

bool external_by_trace(const FieldElement& m, const FieldElement& b) {
  if (m.is_zero()) throw InvalidArgument("trace criterion needs a nonzero slope");
  return trace(b / (m * m)).code() == 1;
}

CollineationGroup make_collineation_group(const Plane& plane, std::vector<Collineation> elements) {
  const auto id = std::find(elements.begin(), elements.end(), Collineation::identity(plane.field()));
  if (id == elements.end()) throw InvalidArgument("collineation list lacks the identity");
  std::rotate(elements.begin(), id, id + 1);
  std::vector<Perm> points, lines;
  points.reserve(elements.size());
  lines.reserve(elements.size());
  for (const auto& g : elements) {
    points.push_back(plane.point_permutation(g));
    lines.push_back(plane.line_permutation(g));
  }
  CollineationGroup out{std::move(elements), PermGroup::from_elements(plane.size(), std::move(points)),
                        PermGroup::from_elements(plane.size(), std::move(lines))};
  return out;
}

CollineationGroup generate_collineation_group(const Plane& plane,
                                              const std::vector<Collineation>& generators,
                                              std::size_t cap) {
  std::vector<Collineation> elements{Collineation::identity(plane.field())};
  std::unordered_map<Perm, std::size_t, PermHash> seen;
  seen.emplace(plane.point_permutation(elements[0]), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : generators) {
      Collineation y = s * elements[i];
      auto key = plane.point_permutation(y);
      if (seen.count(key)) continue;
      if (elements.size() >= cap) throw ResourceError("collineation group closure exceeded cap");
      seen.emplace(std::move(key), elements.size());
      elements.push_back(std::move(y));
    }
  }
  return make_collineation_group(plane, std::move(elements));
}

CollineationGroup hyperoval_stabilizer(const HyperovalContext& ctx) {
  const Plane& plane = *ctx.plane;
  const auto& o = ctx.hyperoval;
  std::array<ProjPoint, 4> frame{plane.point(ctx.conic[0]), plane.point(ctx.conic[1]),
                                 plane.point(ctx.conic[2]), plane.point(ctx.conic[3])};
  std::vector<Collineation> found;
  const std::size_t m = o.size();
  for (std::uint32_t f = 0; f < plane.field().degree(); ++f) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a) continue;
        for (std::size_t c = 0; c < m; ++c) {
          if (c == a || c == b) continue;
          for (std::size_t d = 0; d < m; ++d) {
            if (d == a || d == b || d == c) continue;
            std::array<ProjPoint, 4> to{plane.point(o[a]), plane.point(o[b]), plane.point(o[c]),
                                        plane.point(o[d])};
            auto g = frame_map(frame, to, f);
            if (!g) continue;
            const bool keeps = std::all_of(o.begin(), o.end(), [&](auto p) {
              return ctx.on_hyperoval[plane.index_of(g->apply_point(plane.codes(p)))];
            });
            if (keeps) found.push_back(std::move(*g));
          }
        }
      }
    }
  }
  return make_collineation_group(plane, std::move(found));
}

}  // namespace ree
