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

#include "ree/pentagons.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ree/error.hpp"

namespace ree {

std::array<ProjPoint, 5> fundamental_points(const Field& gf8) {
  if (!(gf8 == Field::gf8())) throw InvalidArgument("the fundamental pentagon lives over the canonical GF(8)");
  const auto g = gf8.generator();
  const auto zero = gf8.zero();
  const auto one = gf8.one();
  return {ProjPoint(one, one, zero), ProjPoint(zero, one, one), ProjPoint(g, g.pow(6), one),
          ProjPoint(g.pow(2), g.pow(5), one), ProjPoint(g.pow(4), g.pow(3), one)};
}

CollineationGroup fundamental_group(const Plane& plane) {
  const Field& f = plane.field();
  std::vector<Collineation> gens;
  for (const auto& c : f.elements()) {
    if (!c.is_zero() && trace(c).is_zero()) gens.push_back(Collineation::tau(c));
  }
  gens.push_back(Collineation::frobenius(f));
  return generate_collineation_group(plane, gens);
}

bool is_external_pentagon(const HyperovalContext& ctx, const std::array<Plane::Index, 5>& points) {
  const Plane& plane = *ctx.plane;
  for (auto p : points) {
    if (ctx.on_hyperoval[p]) return false;
  }
  std::set<Plane::Index> lines;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (points[i] == points[j]) return false;
      const auto l = plane.join(points[i], points[j]);
      if (!ctx.is_external_line(l)) return false;
      lines.insert(l);
    }
  }
  // Ten distinct connecting lines means no three points are collinear.
  return lines.size() == 10;
}

std::vector<std::array<Plane::Index, 5>> external_pentagons(const HyperovalContext& ctx) {
  const Plane& plane = *ctx.plane;
  const auto& pts = ctx.external_points;
  const std::size_t n = pts.size();
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ok[i][j] = ok[j][i] = ctx.is_external_line(plane.join(pts[i], pts[j]));
    }
  }
  std::vector<std::array<Plane::Index, 5>> out;
  std::array<std::size_t, 5> idx{};
  auto fits = [&](int depth, std::size_t cand) {
    for (int t = 0; t < depth; ++t) {
      if (!ok[idx[t]][cand]) return false;
    }
    // No three collinear: the candidate must avoid every line already spanned.
    for (int s = 0; s < depth; ++s) {
      for (int t = s + 1; t < depth; ++t) {
        if (plane.incident(pts[cand], plane.join(pts[idx[s]], pts[idx[t]]))) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int depth, std::size_t start) -> void {
    if (depth == 5) {
      std::array<Plane::Index, 5> p;
      for (int t = 0; t < 5; ++t) p[t] = pts[idx[t]];
      out.push_back(p);
      return;
    }
    for (std::size_t c = start; c < n; ++c) {
      if (!fits(depth, c)) continue;
      idx[depth] = c;
      self(self, depth + 1, c + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

namespace {

std::array<Plane::Index, 5> fundamental_indices(const HyperovalContext& ctx) {
  const auto fp = fundamental_points(ctx.plane->field());
  std::array<Plane::Index, 5> out;
  for (int i = 0; i < 5; ++i) out[i] = ctx.plane->index_of(fp[i]);
  return out;
}

void fill_stabilizer(const CollineationGroup& group, Pentagon& p) {
  const std::vector<std::uint32_t> set(p.points.begin(), p.points.end());
  const PermGroup stab = set_stabilizer(group.on_points, set);
  p.stabilizer_order = stab.order();
  p.a4_type = is_A4(stab);
  const auto on_five = restrict_action(stab, set);
  std::vector<std::uint32_t> fixed;
  for (std::uint32_t i = 0; i < 5; ++i) {
    if (orbit(on_five, i).size() == 1) fixed.push_back(i);
  }
  p.fixes_apex_only = fixed.size() == 1 && set[fixed[0]] == p.apex;
  p.two_transitive_on_rest = false;
  if (p.fixes_apex_only) {
    std::vector<std::uint32_t> rest(p.c.begin(), p.c.end());
    std::sort(rest.begin(), rest.end());
    p.two_transitive_on_rest = is_2_transitive(restrict_action(stab, rest));
  }
}

}  // namespace

Pentagon fundamental_pentagon(const HyperovalContext& ctx, const CollineationGroup& group) {
  const auto f = fundamental_indices(ctx);
  Pentagon p;
  p.points = f;
  std::sort(p.points.begin(), p.points.end());
  p.apex = f[0];
  std::copy(f.begin() + 1, f.end(), p.c.begin());
  p.transport = 0;
  fill_stabilizer(group, p);
  return p;
}

std::vector<Pentagon> classify_pentagons(const HyperovalContext& ctx, const CollineationGroup& group) {
  const auto all = external_pentagons(ctx);
  std::map<std::array<Plane::Index, 5>, std::size_t> position;
  for (std::size_t i = 0; i < all.size(); ++i) position[all[i]] = i;

  std::vector<Pentagon> out(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    out[i].points = all[i];
    out[i].apex = all[i][0];
    std::copy(all[i].begin() + 1, all[i].end(), out[i].c.begin());
    out[i].transport = kNoTransport;
  }
  const auto f = fundamental_indices(ctx);
  for (std::size_t g = 0; g < group.order(); ++g) {
    const Perm& perm = group.on_points.element(g);
    std::array<Plane::Index, 5> image;
    for (int t = 0; t < 5; ++t) image[t] = perm[f[t]];
    std::array<Plane::Index, 5> key = image;
    std::sort(key.begin(), key.end());
    const auto it = position.find(key);
    if (it == position.end()) {
      throw InternalError("a collineation moved the fundamental pentagon off the pentagon list");
    }
    Pentagon& p = out[it->second];
    if (p.transport != kNoTransport) continue;
    p.transport = g;
    p.apex = image[0];
    std::copy(image.begin() + 1, image.end(), p.c.begin());
  }
  for (auto& p : out) fill_stabilizer(group, p);
  return out;
}

const std::array<LabelSeq, 12>& even_sequences() {
  static const std::array<LabelSeq, 12> seqs = [] {
    std::array<LabelSeq, 12> out{};
    LabelSeq s{0, 1, 2, 3};
    std::size_t n = 0;
    do {
      int inversions = 0;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) inversions += s[i] > s[j];
      }
      if (inversions % 2 == 0) out[n++] = s;
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
  }();
  return seqs;
}

std::string sequence_name(const LabelSeq& s) {
  std::string out;
  for (auto x : s) out += static_cast<char>('1' + x);
  return out;
}

std::size_t sequence_index(const LabelSeq& s) {
  const auto& all = even_sequences();
  const auto it = std::find(all.begin(), all.end(), s);
  if (it == all.end()) throw InvalidArgument("not an even permutation: " + sequence_name(s));
  return static_cast<std::size_t>(it - all.begin());
}

const std::array<std::array<std::size_t, 4>, 3>& klein_cosets() {
  // The sequence ijkl is the permutation n -> s[n]; the Klein group acts by
  // relabeling on the left, and since it is normal the cosets are blocks of
  // the regular action.
  static const std::array<std::array<std::size_t, 4>, 3> cosets = [] {
    const std::array<LabelSeq, 4> klein{LabelSeq{0, 1, 2, 3}, LabelSeq{1, 0, 3, 2}, LabelSeq{2, 3, 0, 1},
                                        LabelSeq{3, 2, 1, 0}};
    std::array<std::array<std::size_t, 4>, 3> out{};
    std::vector<bool> seen(12, false);
    std::size_t n = 0;
    for (std::size_t i = 0; i < 12; ++i) {
      if (seen[i]) continue;
      const auto& g = even_sequences()[i];
      for (std::size_t t = 0; t < 4; ++t) {
        LabelSeq s;
        for (int x = 0; x < 4; ++x) s[x] = klein[t][g[x]];
        const auto k = sequence_index(s);
        seen[k] = true;
        out[n][t] = k;
      }
      std::sort(out[n].begin(), out[n].end());
      ++n;
    }
    return out;
  }();
  return cosets;
}

DLineFamily d_lines(const Plane& plane, const Pentagon& p) {
  DLineFamily out;
  const auto& seqs = even_sequences();
  auto line = [&](Plane::Index a, Plane::Index b) {
    if (a == b) throw InternalError("degenerate join in d-line construction");
    return plane.join(a, b);
  };
  auto cut = [&](Plane::Index l, Plane::Index m) {
    if (l == m) throw InternalError("degenerate meet in d-line construction");
    return plane.meet(l, m);
  };
  for (std::size_t n = 0; n < 12; ++n) {
    const auto i = seqs[n][0], j = seqs[n][1], k = seqs[n][2], l = seqs[n][3];
    out.first[n] = cut(line(p.apex, p.c[i]), line(p.c[j], p.c[l]));
    out.second[n] = cut(line(p.apex, p.c[j]), line(p.c[k], p.c[l]));
    out.lines[n] = line(out.first[n], out.second[n]);
  }
  return out;
}

PentagonClaims verify_pentagon_claims(const HyperovalContext& ctx, const Pentagon& p) {
  const Plane& plane = *ctx.plane;
  const DLineFamily fam = d_lines(plane, p);
  PentagonClaims r;

  const std::set<Plane::Index> distinct(fam.lines.begin(), fam.lines.end());
  r.distinct.ok = distinct.size() == 12;
  r.distinct.detail = std::to_string(distinct.size()) + " distinct d-lines";

  std::size_t external = 0;
  for (auto l : fam.lines) external += ctx.is_external_line(l);
  r.external.ok = external == 12;
  r.external.detail = std::to_string(external) + " of 12 d-lines external";

  const auto tangent = ctx.tangent_through(p.apex);
  std::map<Plane::Index, std::size_t> at;
  for (auto l : fam.lines) {
    if (l != tangent) ++at[plane.meet(l, tangent)];
  }
  bool partition = at.size() == 3;
  for (const auto& [pt, count] : at) partition = partition && count == 4;
  bool labeled = true;
  for (const auto& coset : klein_cosets()) {
    const auto base = plane.meet(fam.lines[coset[0]], tangent);
    for (auto n : coset) labeled = labeled && plane.incident(base, fam.lines[n]);
  }
  r.quadruples.ok = partition && labeled;
  r.quadruples.detail = std::string("partition into concurrent quadruples on the tangent through A: ") +
                        (partition ? "yes" : "no") + "; Klein cosets concurrent: " + (labeled ? "yes" : "no");

  const auto ac4 = plane.join(p.apex, p.c[3]);
  const auto d1234 = fam.lines[sequence_index({0, 1, 2, 3})];
  const auto d3241 = fam.lines[sequence_index({2, 1, 3, 0})];
  const std::array<ProjLine, 3> triple{plane.line(ac4), plane.line(d1234), plane.line(d3241)};
  r.concurrency.ok = concurrent(triple);
  r.concurrency.detail = "AC4 " + triple[0].to_string() + ", d1234 " + triple[1].to_string() + ", d3241 " +
                         triple[2].to_string();
  return r;
}

SocLabeling soc_labeling_from_pentagon(const HyperovalContext& ctx, const Pentagon& p) {
  SocLabeling s;
  auto ord = [&](Plane::Index pt) {
    const auto o = ctx.external_point_ordinal[pt];
    if (o < 0) throw InvalidArgument("pentagon vertex is not an external point");
    return static_cast<std::uint32_t>(o);
  };
  s.a = ord(p.apex);
  for (int i = 0; i < 4; ++i) s.c[i] = ord(p.c[i]);
  return s;
}

namespace {

// The common point of two blocks, or -1 unless they meet in exactly one point.
std::int32_t block_meet(const IncidenceDesign& d, std::uint32_t a, std::uint32_t b) {
  std::int32_t found = -1;
  for (auto x : d.block(a)) {
    if (d.contains(b, x)) {
      if (found >= 0) return -1;
      found = static_cast<std::int32_t>(x);
    }
  }
  return found;
}

std::int32_t block_joining(const IncidenceDesign& d, std::int32_t x, std::int32_t y) {
  if (x < 0 || y < 0 || x == y) return -1;
  return d.block_through(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
}

}  // namespace

SocDPoints soc_d_points(const IncidenceDesign& d, const SocLabeling& labels) {
  SocDPoints r;
  r.d.fill(-1);
  const auto& seqs = even_sequences();
  auto ac = [&](int i) { return block_meet(d, labels.a, labels.c[i]); };
  auto cc = [&](int i, int j) { return block_meet(d, labels.c[i], labels.c[j]); };
  std::size_t defined = 0;
  std::string missing;
  for (std::size_t n = 0; n < 12; ++n) {
    const auto i = seqs[n][0], j = seqs[n][1], k = seqs[n][2], l = seqs[n][3];
    const auto b1 = block_joining(d, ac(i), cc(j, l));
    const auto b2 = block_joining(d, ac(j), cc(k, l));
    if (b1 >= 0 && b2 >= 0 && b1 != b2) {
      r.d[n] = block_meet(d, static_cast<std::uint32_t>(b1), static_cast<std::uint32_t>(b2));
    }
    if (r.d[n] >= 0) {
      ++defined;
    } else if (missing.empty()) {
      missing = sequence_name(seqs[n]);
    }
  }
  r.exists.ok = defined == 12;
  r.exists.detail = r.exists.ok ? "12 D-points defined" : "no unique intersection for D" + missing;
  if (!r.exists.ok) {
    r.distinct.detail = r.coset_blocks.detail = r.collinear.detail = "skipped";
    return r;
  }

  const std::set<std::int32_t> distinct(r.d.begin(), r.d.end());
  r.distinct.ok = distinct.size() == 12;
  r.distinct.detail = std::to_string(distinct.size()) + " distinct D-points";

  std::size_t blocks = 0;
  for (const auto& coset : klein_cosets()) {
    Block b;
    for (auto n : coset) b.push_back(static_cast<std::uint32_t>(r.d[n]));
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) == b.end() && d.find_block(b)) ++blocks;
  }
  r.coset_blocks.ok = blocks == 3;
  r.coset_blocks.detail = std::to_string(blocks) + " of 3 coset quadruples are blocks";

  const auto p = ac(3);
  const auto d1234 = r.d[sequence_index({0, 1, 2, 3})];
  const auto d3241 = r.d[sequence_index({2, 1, 3, 0})];
  const auto b = block_joining(d, d1234, d3241);
  r.collinear.ok = p >= 0 && b >= 0 && d.contains(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(p));
  r.collinear.detail = "a^c4=" + std::to_string(p) + " D1234=" + std::to_string(d1234) +
                       " D3241=" + std::to_string(d3241) + (r.collinear.ok ? " share a block" : " share no block");
  return r;
}

std::size_t count_valid_soc_labelings(const IncidenceDesign& d, const std::vector<std::uint32_t>& blocks) {
  if (blocks.size() != 5) throw InvalidArgument("a super O'Nan configuration has five blocks");
  std::size_t count = 0;
  for (std::size_t ai = 0; ai < 5; ++ai) {
    std::array<std::uint32_t, 4> rest{};
    std::size_t n = 0;
    for (std::size_t t = 0; t < 5; ++t) {
      if (t != ai) rest[n++] = blocks[t];
    }
    std::sort(rest.begin(), rest.end());
    do {
      if (soc_d_points(d, SocLabeling{blocks[ai], rest}).ok()) ++count;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return count;
}

}  // namespace ree
