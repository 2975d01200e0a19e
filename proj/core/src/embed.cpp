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

#include "ree/embed.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "ree/error.hpp"

namespace ree {

EmbeddingCheck verify(const IncidenceDesign& d, const Embedding& e) {
  EmbeddingCheck r;
  if (!e.plane) {
    r.message = "embedding has no plane";
    return r;
  }
  const Plane& plane = *e.plane;
  if (e.point_map.size() != d.num_points() || e.block_map.size() != d.num_blocks()) {
    r.message = "maps do not cover the design";
    return r;
  }
  std::vector<std::int64_t> seen(plane.size(), -1);
  for (std::uint32_t x = 0; x < d.num_points(); ++x) {
    const auto p = e.point_map[x];
    if (p >= plane.size()) {
      r.message = "point " + std::to_string(x) + " maps outside the plane";
      return r;
    }
    if (seen[p] >= 0) {
      r.message = "points " + std::to_string(seen[p]) + " and " + std::to_string(x) + " share an image";
      r.witness = std::make_pair(static_cast<std::uint32_t>(seen[p]), x);
      return r;
    }
    seen[p] = x;
  }
  seen.assign(plane.size(), -1);
  for (std::uint32_t b = 0; b < d.num_blocks(); ++b) {
    const auto l = e.block_map[b];
    if (l >= plane.size()) {
      r.message = "block " + std::to_string(b) + " maps outside the plane";
      return r;
    }
    if (seen[l] >= 0) {
      r.message = "blocks " + std::to_string(seen[l]) + " and " + std::to_string(b) + " share an image";
      r.witness = std::make_pair(static_cast<std::uint32_t>(seen[l]), b);
      return r;
    }
    seen[l] = b;
  }
  for (std::uint32_t b = 0; b < d.num_blocks(); ++b) {
    for (std::uint32_t x = 0; x < d.num_points(); ++x) {
      const bool in_design = d.contains(b, x);
      if (plane.incident(e.point_map[x], e.block_map[b]) != in_design) {
        r.message = "point " + std::to_string(x) + (in_design ? " lies on" : " is off") + " block " +
                    std::to_string(b) + " but its image " + (in_design ? "is off" : "lies on") + " the image line";
        r.witness = std::make_pair(x, b);
        return r;
      }
    }
  }
  r.ok = true;
  r.message = "injective and incidence-preserving in both directions";
  return r;
}

Embedding dual_embedding(const HyperovalContext& ctx) {
  const Plane& plane = *ctx.plane;
  Embedding e;
  e.plane = ctx.plane;
  for (auto l : ctx.external_lines) e.point_map.push_back(plane.index_of(plane.point(l)));
  for (auto p : ctx.external_points) e.block_map.push_back(plane.index_of(plane.line(p)));
  return e;
}

Embedding transform(const Embedding& e, const Collineation& g) {
  const Plane& plane = *e.plane;
  Embedding out;
  out.plane = e.plane;
  for (auto p : e.point_map) out.point_map.push_back(plane.index_of(g.apply(plane.point(p))));
  for (auto l : e.block_map) out.block_map.push_back(plane.index_of(g.apply(plane.line(l))));
  return out;
}

Embedding lift(const Embedding& e, std::shared_ptr<const Plane> target) {
  const Field& sub = e.plane->field();
  const auto emb = subfield_embed(sub, target->field());
  if (!emb) {
    throw InvalidArgument(sub.to_string() + " is not a subfield of " + target->field().to_string());
  }
  auto push = [&](const Code3& c) {
    return Code3{emb->map(c[0]), emb->map(c[1]), emb->map(c[2])};
  };
  Embedding out;
  out.plane = target;
  for (auto p : e.point_map) out.point_map.push_back(target->index_of(ProjPoint(target->field(), push(e.plane->codes(p)))));
  for (auto l : e.block_map) out.block_map.push_back(target->index_of(ProjLine(target->field(), push(e.plane->codes(l)))));
  return out;
}

bool inside_subplane(const Embedding& e, const Field& sub) {
  const auto emb = subfield_embed(sub, e.plane->field());
  if (!emb) return false;
  auto inside = [&](Plane::Index i) {
    const auto c = e.plane->codes(i);
    return emb->in_image(c[0]) && emb->in_image(c[1]) && emb->in_image(c[2]);
  };
  return std::all_of(e.point_map.begin(), e.point_map.end(), inside) &&
         std::all_of(e.block_map.begin(), e.block_map.end(), inside);
}

namespace {

// Four design points whose images are in general position.
std::optional<std::array<std::uint32_t, 4>> image_frame(const Embedding& e) {
  const Plane& plane = *e.plane;
  const auto n = static_cast<std::uint32_t>(e.point_map.size());
  auto line_of = [&](std::uint32_t a, std::uint32_t b) { return plane.join(e.point_map[a], e.point_map[b]); };
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      for (std::uint32_t c = b + 1; c < n; ++c) {
        if (plane.incident(e.point_map[c], line_of(a, b))) continue;
        for (std::uint32_t x = c + 1; x < n; ++x) {
          const auto px = e.point_map[x];
          if (plane.incident(px, line_of(a, b)) || plane.incident(px, line_of(a, c)) ||
              plane.incident(px, line_of(b, c))) {
            continue;
          }
          return std::array<std::uint32_t, 4>{a, b, c, x};
        }
      }
    }
  }
  return std::nullopt;
}

// A collineation beta with beta(from(x)) = to(alpha(x)) for all points.
std::optional<Collineation> solve_beta(const Embedding& from, const Embedding& to, const Perm& alpha,
                                       const std::array<std::uint32_t, 4>& frame, std::uint32_t max_frob) {
  const Plane& plane = *from.plane;
  std::array<ProjPoint, 4> src{plane.point(0), plane.point(0), plane.point(0), plane.point(0)};
  std::array<ProjPoint, 4> dst = src;
  for (int i = 0; i < 4; ++i) {
    src[i] = plane.point(from.point_map[frame[i]]);
    dst[i] = plane.point(to.point_map[alpha[frame[i]]]);
  }
  for (std::uint32_t f = 0; f < max_frob; ++f) {
    const auto beta = frame_map(src, dst, f);
    if (!beta) continue;
    bool ok = true;
    for (std::uint32_t x = 0; x < from.point_map.size() && ok; ++x) {
      ok = plane.index_of(beta->apply(plane.point(from.point_map[x]))) == to.point_map[alpha[x]];
    }
    if (ok) return beta;
  }
  return std::nullopt;
}

}  // namespace

AdmissibilityResult admissibility(const IncidenceDesign& d, const Embedding& e,
                                  const std::vector<Perm>& automorphisms) {
  AdmissibilityResult r;
  const auto frame = image_frame(e);
  if (!frame) throw InternalError("embedding image has no four points in general position");
  const std::uint32_t degree = e.plane->field().degree();
  for (std::size_t i = 0; i < automorphisms.size(); ++i) {
    const Perm& alpha = automorphisms[i];
    if (alpha.size() != d.num_points()) throw InvalidArgument("automorphism has the wrong degree");
    auto beta = solve_beta(e, e, alpha, *frame, degree);
    if (!beta) {
      r.message = "no collineation induces automorphism " + std::to_string(i) + " " + to_cycles(alpha);
      return r;
    }
    r.betas.push_back(*beta);
  }
  r.ok = true;
  r.message = std::to_string(automorphisms.size()) + " automorphisms induced by collineations";
  return r;
}

std::vector<Plane::Index> dual_hyperoval(const HyperovalContext& ctx) {
  std::vector<Plane::Index> out;
  for (auto p : ctx.hyperoval) out.push_back(ctx.plane->index_of(ctx.plane->line(p)));
  std::sort(out.begin(), out.end());
  return out;
}

bool preserves_lines(const Plane& plane, const Collineation& g, const std::vector<Plane::Index>& lines) {
  std::vector<Plane::Index> image;
  for (auto l : lines) image.push_back(plane.index_of(g.apply(plane.line(l))));
  std::sort(image.begin(), image.end());
  std::vector<Plane::Index> sorted = lines;
  std::sort(sorted.begin(), sorted.end());
  return image == sorted;
}

std::size_t conic_orbit_size(const Plane& plane) {
  const Field& f = plane.field();
  std::vector<Collineation> gens;
  Field::Code primitive = 0;
  for (Field::Code a = 1; a < f.order(); ++a) {
    bool full = true;
    Field::Code x = a;
    for (std::uint32_t k = 1; k + 1 < f.order(); ++k, x = f.mul(x, a)) {
      if (x == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      primitive = a;
      break;
    }
  }
  std::vector<Field::Code> basis;
  for (std::uint32_t k = 0; k < f.degree(); ++k) {
    Coefficients c(f.degree(), 0);
    c[k] = 1;
    basis.push_back(f.encode(c));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (auto a : basis) {
        Mat3 m = mat3::identity();
        m[3 * i + j] = a;
        gens.emplace_back(f, m);
      }
    }
  }
  Mat3 diag = mat3::identity();
  diag[0] = primitive;
  gens.emplace_back(f, diag);

  std::vector<std::vector<Plane::Index>> perms;
  for (const auto& g : gens) perms.push_back(plane.point_permutation(g));

  std::vector<Plane::Index> start;
  for (Plane::Index i = 0; i < plane.size(); ++i) {
    const auto c = plane.codes(i);
    if (f.add(f.mul(c[0], c[0]), f.mul(c[1], c[2])) == 0) start.push_back(i);
  }
  struct VecHash {
    std::size_t operator()(const std::vector<Plane::Index>& v) const noexcept {
      std::size_t h = 0;
      for (auto x : v) h = h * 1000003u + x;
      return h;
    }
  };
  std::unordered_set<std::vector<Plane::Index>, VecHash> seen{start};
  std::vector<std::vector<Plane::Index>> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& perm : perms) {
      std::vector<Plane::Index> image;
      for (auto p : queue[head]) image.push_back(perm[p]);
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return queue.size();
}

namespace {

constexpr std::size_t kWords = 5;
using Mask = std::array<std::uint64_t, kWords>;

bool empty(const Mask& m) {
  for (auto w : m) {
    if (w) return false;
  }
  return true;
}
int popcount(const Mask& m) {
  int n = 0;
  for (auto w : m) n += std::popcount(w);
  return n;
}
bool test(const Mask& m, std::uint32_t i) { return (m[i / 64] >> (i % 64)) & 1u; }
void set_bit(Mask& m, std::uint32_t i) { m[i / 64] |= std::uint64_t{1} << (i % 64); }
void clear_bit(Mask& m, std::uint32_t i) { m[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;
void mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

struct State {
  std::vector<std::int32_t> pimg;
  std::vector<std::int32_t> bimg;
  std::vector<Mask> cand;
  Mask line_used{};
};

struct BranchResult {
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> profile;
  std::uint64_t hash = kFnvOffset;
  std::vector<Embedding> found;
};

class Searcher {
 public:
  Searcher(const IncidenceDesign& d, std::shared_ptr<const Plane> plane, const SearchConfig& cfg)
      : d_(d), plane_ptr_(std::move(plane)), plane_(*plane_ptr_), cfg_(cfg) {
    for (std::uint32_t b = 0; b < d_.num_blocks(); ++b) {
      std::uint64_t m = 0;
      for (auto x : d_.block(b)) m |= std::uint64_t{1} << x;
      members_.push_back(m);
    }
    line_mask_.resize(plane_.size());
    for (Plane::Index l = 0; l < plane_.size(); ++l) {
      for (auto p : plane_.points_on(l)) set_bit(line_mask_[l], p);
    }
    for (Plane::Index p = 0; p < plane_.size(); ++p) set_bit(all_points_, p);
  }

  SearchResult run() {
    SearchResult result;
    State root;
    root.pimg.assign(d_.num_points(), -1);
    root.bimg.assign(d_.num_blocks(), -1);
    root.cand.assign(d_.num_points(), all_points_);
    const bool feasible = prefix(root, result.level);

    std::vector<BranchResult> branches;
    if (feasible) {
      const auto x = choose(root);
      if (x < 0) {
        BranchResult br;
        br.profile.assign(d_.num_points() + 1, 0);
        record(root, br);
        branches.push_back(std::move(br));
      } else {
        std::vector<Plane::Index> cands;
        for (Plane::Index p = 0; p < plane_.size(); ++p) {
          if (test(root.cand[x], p)) cands.push_back(p);
        }
        branches.resize(cands.size());
        const unsigned threads = std::max(1u, std::min<unsigned>(cfg_.threads, static_cast<unsigned>(cands.size())));
        auto work = [&](unsigned t) {
          std::vector<State> stack(d_.num_points() + 2, root);
          for (std::size_t i = t; i < cands.size(); i += threads) {
            BranchResult& br = branches[i];
            br.profile.assign(d_.num_points() + 1, 0);
            try_candidate(stack, 0, static_cast<std::uint32_t>(x), cands[i], br);
          }
        };
        if (threads == 1) {
          work(0);
        } else {
          std::vector<std::thread> pool;
          for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
          for (auto& th : pool) th.join();
        }
      }
    }

    result.depth_profile.assign(d_.num_points() + 1, 0);
    result.trace_hash = kFnvOffset;
    mix(result.trace_hash, static_cast<std::uint64_t>(result.level));
    for (auto& br : branches) {
      result.nodes += br.nodes;
      for (std::size_t k = 0; k < br.profile.size(); ++k) result.depth_profile[k] += br.profile[k];
      mix(result.trace_hash, br.hash);
      for (auto& e : br.found) result.embeddings.push_back(std::move(e));
    }
    while (result.depth_profile.size() > 1 && result.depth_profile.back() == 0) result.depth_profile.pop_back();
    result.status = out_of_budget_ ? SearchStatus::kInconclusive : SearchStatus::kComplete;
    result.truncated = !out_of_budget_ && stop_.load();
    if (cfg_.max_solutions && result.embeddings.size() > cfg_.max_solutions) {
      result.embeddings.resize(cfg_.max_solutions);
    }
    return result;
  }

 private:
  // Applies the symmetry-breaking prefix; false when it is already
  // inconsistent.
  bool prefix(State& s, int& level) {
    level = cfg_.level;
    std::vector<Configuration> onan;
    if (level >= 2) {
      onan = onan_configurations(d_);
      if (onan.empty()) level = 1;
    }
    if (level >= 1 && d_.blocks_through(0).empty()) level = 0;
    const Field& f = plane_.field();
    const auto zero = f.zero(), one = f.one();
    if (level == 1) {
      const auto b0 = d_.blocks_through(0)[0];
      const auto l = plane_.index_of(ProjLine(one, zero, zero));
      const auto p = plane_.index_of(ProjPoint(zero, zero, one));
      return set_block(s, b0, l) && test(s.cand[0], p) && assign(s, 0, p);
    }
    if (level >= 2) {
      const auto& c = onan.front();
      const std::array<ProjLine, 4> frame{ProjLine(one, one, one), ProjLine(one, zero, zero),
                                          ProjLine(zero, one, zero), ProjLine(zero, zero, one)};
      std::array<Plane::Index, 4> lines{};
      for (int i = 0; i < 4; ++i) {
        lines[i] = plane_.index_of(frame[i]);
        if (!set_block(s, c.blocks[i], lines[i])) return false;
      }
      std::size_t n = 0;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          const auto x = c.points[n++];
          const auto p = plane_.meet(lines[i], lines[j]);
          if (s.pimg[x] >= 0) {
            if (static_cast<Plane::Index>(s.pimg[x]) != p) return false;
            continue;
          }
          if (!test(s.cand[x], p) || !assign(s, x, p)) return false;
        }
      }
    }
    return true;
  }

  std::int32_t choose(const State& s) const {
    std::int32_t best = -1;
    int best_size = 1 << 30;
    for (std::uint32_t x = 0; x < d_.num_points(); ++x) {
      if (s.pimg[x] >= 0) continue;
      const int n = popcount(s.cand[x]);
      if (n < best_size) {
        best_size = n;
        best = static_cast<std::int32_t>(x);
      }
    }
    return best;
  }

  bool set_block(State& s, std::uint32_t b, Plane::Index l) {
    if (test(s.line_used, l)) return false;
    set_bit(s.line_used, l);
    s.bimg[b] = static_cast<std::int32_t>(l);
    const Mask& on = line_mask_[l];
    for (std::uint32_t z = 0; z < d_.num_points(); ++z) {
      const bool member = (members_[b] >> z) & 1u;
      if (s.pimg[z] >= 0) {
        if (test(on, static_cast<std::uint32_t>(s.pimg[z])) != member) return false;
        continue;
      }
      Mask& c = s.cand[z];
      for (std::size_t w = 0; w < kWords; ++w) c[w] &= member ? on[w] : ~on[w];
      if (empty(c)) return false;
    }
    return true;
  }

  bool assign(State& s, std::uint32_t x, Plane::Index p) {
    s.pimg[x] = static_cast<std::int32_t>(p);
    for (std::uint32_t z = 0; z < d_.num_points(); ++z) {
      if (s.pimg[z] >= 0) continue;
      clear_bit(s.cand[z], p);
      if (empty(s.cand[z])) return false;
    }
    for (auto b : d_.blocks_through(x)) {
      if (s.bimg[b] >= 0) continue;
      for (auto y : d_.block(b)) {
        if (y != x && s.pimg[y] >= 0) {
          if (!set_block(s, b, plane_.join(p, static_cast<Plane::Index>(s.pimg[y])))) return false;
          break;
        }
      }
    }
    return true;
  }

  void try_candidate(std::vector<State>& stack, std::size_t depth, std::uint32_t x, Plane::Index p,
                     BranchResult& br) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= cfg_.node_budget) {
      out_of_budget_ = true;
      stop_ = true;
      return;
    }
    ++br.nodes;
    ++br.profile[depth];
    mix(br.hash, (static_cast<std::uint64_t>(depth) << 48) | (static_cast<std::uint64_t>(x) << 32) | p);
    State& next = stack[depth + 1];
    next = stack[depth];
    if (!assign(next, x, p)) return;
    const auto y = choose(next);
    if (y < 0) {
      record(next, br);
      return;
    }
    const Mask cand = next.cand[y];
    for (std::size_t w = 0; w < kWords; ++w) {
      for (std::uint64_t bits = cand[w]; bits; bits &= bits - 1) {
        const auto q = static_cast<Plane::Index>(64 * w + std::countr_zero(bits));
        try_candidate(stack, depth + 1, static_cast<std::uint32_t>(y), q, br);
        if (stop_.load(std::memory_order_relaxed)) return;
      }
    }
  }

  void record(const State& s, BranchResult& br) {
    Embedding e;
    e.plane = plane_ptr_;
    for (auto p : s.pimg) e.point_map.push_back(static_cast<Plane::Index>(p));
    for (auto l : s.bimg) {
      if (l < 0) throw InternalError("search completed with an unplaced block");
      e.block_map.push_back(static_cast<Plane::Index>(l));
    }
    const auto check = verify(d_, e);
    if (!check.ok) throw InternalError("search produced an invalid embedding: " + check.message);
    br.found.push_back(std::move(e));
    if (cfg_.max_solutions && solutions_.fetch_add(1) + 1 >= cfg_.max_solutions) stop_ = true;
  }

  const IncidenceDesign& d_;
  std::shared_ptr<const Plane> plane_ptr_;
  const Plane& plane_;
  SearchConfig cfg_;
  std::vector<std::uint64_t> members_;
  std::vector<Mask> line_mask_;
  Mask all_points_{};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::size_t> solutions_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> out_of_budget_{false};
};

}  // namespace

SearchResult search(const IncidenceDesign& d, std::shared_ptr<const Plane> plane, const SearchConfig& cfg) {
  if (cfg.node_budget == 0) throw InvalidArgument("node budget must be positive");
  if (cfg.level < 0 || cfg.level > 2) throw InvalidArgument("symmetry level must be 0, 1 or 2");
  if (d.num_points() > 64 || d.num_points() == 0) throw InvalidArgument("search supports 1 to 64 design points");
  if (!d.is_partial_linear_space()) throw InvalidArgument("search needs a partial linear space");
  if (!plane->has_tables() || plane->size() > 64 * kWords) {
    throw InvalidArgument("search supports planes of order at most 16");
  }
  Searcher s(d, std::move(plane), cfg);
  return s.run();
}

Classification classify(const IncidenceDesign& d, const std::vector<Embedding>& embeddings,
                        const PermGroup& aut, bool semilinear) {
  Classification c;
  const std::size_t n = embeddings.size();
  c.orbit_of.assign(n, kNoOrbit);
  for (std::size_t i = 0; i < n; ++i) {
    if (c.orbit_of[i] != kNoOrbit) continue;
    c.orbit_of[i] = c.orbit_count++;
    const Embedding& rep = embeddings[i];
    const auto frame = image_frame(rep);
    if (!frame) throw InternalError("embedding image has no four points in general position");
    const std::uint32_t frobs = semilinear ? rep.plane->field().degree() : 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c.orbit_of[j] != kNoOrbit) continue;
      for (std::size_t a = 0; a < aut.order(); ++a) {
        const Perm& alpha = aut.element(a);
        auto beta = solve_beta(rep, embeddings[j], alpha, *frame, frobs);
        if (!beta) continue;
        const auto blocks = block_permutation(d, alpha);
        if (!blocks) throw InvalidArgument("classification group contains a non-automorphism");
        const Plane& plane = *rep.plane;
        bool ok = true;
        for (std::uint32_t b = 0; b < d.num_blocks() && ok; ++b) {
          ok = plane.index_of(beta->apply(plane.line(rep.block_map[b]))) == embeddings[j].block_map[(*blocks)[b]];
        }
        if (!ok) throw InternalError("transporter matches points but not blocks");
        c.orbit_of[j] = c.orbit_of[i];
        c.transporters.push_back(Transporter{i, j, a, *beta});
        break;
      }
    }
  }
  return c;
}

std::vector<std::uint32_t> involution_blocks(const IncidenceDesign& d, const std::vector<Perm>& involutions) {
  std::vector<std::uint32_t> out;
  for (const auto& g : involutions) {
    Block fixed;
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      if (g[x] == x) fixed.push_back(x);
    }
    const auto b = d.find_block(fixed);
    if (!b) throw InternalError("involution " + to_cycles(g) + " does not fix a block pointwise");
    out.push_back(*b);
  }
  return out;
}

nlohmann::json embedding_json(const IncidenceDesign& d, const Embedding& e) {
  nlohmann::json points = nlohmann::json::array();
  nlohmann::json blocks = nlohmann::json::array();
  for (auto p : e.point_map) points.push_back(e.plane->point(p).to_string());
  for (auto l : e.block_map) blocks.push_back(e.plane->line(l).to_string());
  return {{"point_map", points}, {"block_map", blocks}, {"verified", verify(d, e).ok}};
}

nlohmann::json certificate_json(const IncidenceDesign& d, const Plane& plane, const SearchConfig& cfg,
                                const SearchResult& r) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.trace_hash));
  nlohmann::json embeddings = nlohmann::json::array();
  for (const auto& e : r.embeddings) embeddings.push_back(embedding_json(d, e));
  return {{"design_digest", d.digest()},
          {"plane", {{"order", plane.order()}, {"field", plane.field().to_string()}}},
          {"status", r.status == SearchStatus::kComplete ? "complete" : "inconclusive"},
          {"level", r.level},
          {"node_budget", cfg.node_budget},
          {"nodes", r.nodes},
          {"depth_profile", r.depth_profile},
          {"trace_hash", hash},
          {"truncated", r.truncated},
          {"embeddings", embeddings}};
}

}  // namespace ree
