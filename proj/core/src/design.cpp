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

#include "ree/design.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ree/error.hpp"

namespace ree {

IncidenceDesign::IncidenceDesign(std::uint32_t v, std::vector<Block> blocks)
    : v_(v), blocks_(std::move(blocks)), through_(v) {
  for (std::uint32_t b = 0; b < blocks_.size(); ++b) {
    auto& blk = blocks_[b];
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end()) {
      throw InvalidArgument("block " + std::to_string(b) + " repeats a point");
    }
    for (auto p : blk) {
      if (p >= v_) throw InvalidArgument("block " + std::to_string(b) + " has a point out of range");
      through_[p].push_back(b);
    }
  }
  {
    auto sorted = blocks_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("repeated block");
    }
  }
  linear_ = std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() >= 2; });
  pair_block_.assign(static_cast<std::size_t>(v_) * v_, -1);
  for (std::uint32_t b = 0; b < blocks_.size() && linear_; ++b) {
    for (auto x : blocks_[b]) {
      for (auto y : blocks_[b]) {
        if (x == y) continue;
        auto& slot = pair_block_[static_cast<std::size_t>(x) * v_ + y];
        if (slot >= 0) {
          linear_ = false;
          break;
        }
        slot = static_cast<std::int32_t>(b);
      }
    }
  }
  if (!linear_) pair_block_.assign(pair_block_.size(), -1);
}

IncidenceDesign IncidenceDesign::parse(std::istream& in) {
  std::uint64_t v = 0, b = 0;
  if (!(in >> v >> b)) throw InvalidArgument("design header must be 'v b'");
  std::string rest;
  std::getline(in, rest);
  std::vector<Block> blocks;
  std::string line;
  while (blocks.size() < b && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Block blk;
    std::int64_t x;
    while (ls >> x) {
      if (x < 0) throw InvalidArgument("negative point index in design");
      blk.push_back(static_cast<std::uint32_t>(x));
    }
    if (!ls.eof()) throw InvalidArgument("malformed block line: '" + line + "'");
    blocks.push_back(std::move(blk));
  }
  if (blocks.size() != b) throw InvalidArgument("design file ended before all blocks were read");
  return IncidenceDesign(static_cast<std::uint32_t>(v), std::move(blocks));
}

IncidenceDesign IncidenceDesign::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open design file " + path);
  return parse(in);
}

std::string IncidenceDesign::to_text() const {
  std::ostringstream os;
  os << v_ << ' ' << blocks_.size() << '\n';
  for (const auto& blk : blocks_) {
    for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? " " : "") << blk[i];
    os << '\n';
  }
  return os.str();
}

void IncidenceDesign::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write design file " + path);
  out << to_text();
}

std::string IncidenceDesign::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : to_text()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool IncidenceDesign::contains(std::uint32_t block, std::uint32_t point) const {
  const auto& blk = blocks_.at(block);
  return std::binary_search(blk.begin(), blk.end(), point);
}

std::optional<std::uint32_t> IncidenceDesign::find_block(const Block& sorted) const {
  if (sorted.empty()) return std::nullopt;
  for (auto b : through_.at(sorted[0])) {
    if (blocks_[b] == sorted) return b;
  }
  return std::nullopt;
}

std::int32_t IncidenceDesign::block_through(std::uint32_t a, std::uint32_t b) const {
  if (!linear_) throw InvalidArgument("block_through needs a partial linear space");
  return pair_block_[static_cast<std::size_t>(a) * v_ + b];
}

IncidenceDesign IncidenceDesign::relabeled(const Perm& perm) const {
  if (perm.size() != v_) throw InvalidArgument("relabeling has the wrong degree");
  check_perm(perm);
  std::vector<Block> blocks = blocks_;
  for (auto& blk : blocks) {
    for (auto& x : blk) x = perm[x];
  }
  return IncidenceDesign(v_, std::move(blocks));
}

IncidenceDesign IncidenceDesign::without_block(std::uint32_t b) const {
  std::vector<Block> blocks = blocks_;
  blocks.erase(blocks.begin() + b);
  return IncidenceDesign(v_, std::move(blocks));
}

IncidenceDesign fano_plane() {
  return IncidenceDesign(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

namespace {

// Calls fn on every k-subset of `items` (sorted input gives sorted subsets).
void for_each_subset(const std::vector<std::uint32_t>& items, std::size_t k,
                     const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  if (k > items.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::uint32_t> sub(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) sub[i] = items[idx[i]];
    fn(sub);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string join_ints(const std::vector<std::uint32_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace

ValidationReport validate(const IncidenceDesign& d, std::uint32_t t, std::uint32_t k,
                          std::uint32_t lambda) {
  if (t < 1 || t > 3) throw InvalidArgument("validate supports t in {1, 2, 3}");
  ValidationReport report;
  for (std::uint32_t b = 0; b < d.num_blocks(); ++b) {
    if (d.block(b).size() != k) {
      report.ok = false;
      report.message = "block " + std::to_string(b) + " has " + std::to_string(d.block(b).size()) +
                       " points, expected " + std::to_string(k);
      report.witness = {b};
      return report;
    }
  }
  std::map<std::vector<std::uint32_t>, std::uint32_t> cover;
  for (const auto& blk : d.blocks()) {
    for_each_subset(blk, t, [&](const auto& s) { ++cover[s]; });
  }
  std::vector<std::uint32_t> all(d.num_points());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  bool failed = false;
  for_each_subset(all, t, [&](const auto& s) {
    if (failed) return;
    const auto it = cover.find(s);
    const std::uint32_t c = it == cover.end() ? 0 : it->second;
    if (c != lambda) {
      failed = true;
      report.ok = false;
      report.message = std::to_string(t) + "-subset {" + join_ints(s) + "} lies in " +
                       std::to_string(c) + " blocks, expected " + std::to_string(lambda);
      report.witness = s;
    }
  });
  if (report.ok) {
    report.message = std::to_string(t) + "-(" + std::to_string(d.num_points()) + "," +
                     std::to_string(k) + "," + std::to_string(lambda) + ") design";
  }
  return report;
}

IncidenceDesign build_ree_unital(const HyperovalContext& ctx) {
  const Plane& plane = *ctx.plane;
  std::vector<Block> blocks;
  blocks.reserve(ctx.external_points.size());
  for (auto p : ctx.external_points) {
    Block blk;
    for (auto l : plane.lines_through(p)) {
      if (ctx.is_external_line(l)) blk.push_back(static_cast<std::uint32_t>(ctx.external_line_ordinal[l]));
    }
    blocks.push_back(std::move(blk));
  }
  IncidenceDesign d(static_cast<std::uint32_t>(ctx.external_lines.size()), std::move(blocks));
  for (auto l : ctx.external_lines) d.point_labels.push_back(plane.line(l).to_string());
  for (auto p : ctx.external_points) d.block_labels.push_back(plane.point(p).to_string());
  const auto report = validate(d, 2, 4, 1);
  if (!report.ok || d.num_points() != 28) {
    throw InternalError("dual unital failed validation: " + report.message);
  }
  return d;
}

std::optional<Perm> block_permutation(const IncidenceDesign& from, const IncidenceDesign& to,
                                      const Perm& point_map) {
  if (from.num_points() != to.num_points() || from.num_blocks() != to.num_blocks() ||
      point_map.size() != from.num_points()) {
    return std::nullopt;
  }
  Perm out(from.num_blocks());
  std::vector<bool> used(to.num_blocks(), false);
  for (std::uint32_t b = 0; b < from.num_blocks(); ++b) {
    Block image;
    for (auto x : from.block(b)) image.push_back(point_map[x]);
    std::sort(image.begin(), image.end());
    const auto target = to.find_block(image);
    if (!target || used[*target]) return std::nullopt;
    used[*target] = true;
    out[b] = *target;
  }
  return out;
}

namespace {

// Backtracking over point images with forward checking; domains are 64-bit
// masks over target points.
class IsoSearch {
 public:
  IsoSearch(const IncidenceDesign& a, const IncidenceDesign& b, const BacktrackLimits& limits)
      : a_(a), b_(b), limits_(limits), v_(a.num_points()) {
    block_mask_.resize(b.num_blocks());
    for (std::uint32_t k = 0; k < b.num_blocks(); ++k) {
      for (auto x : b.block(k)) block_mask_[k] |= std::uint64_t{1} << x;
    }
  }

  // Calls on_found for each isomorphism until it returns false.
  void run(const std::function<bool(const Perm&)>& on_found) {
    on_found_ = &on_found;
    if (a_.num_points() != b_.num_points() || a_.num_blocks() != b_.num_blocks()) return;
    std::vector<std::uint64_t> dom(v_, 0);
    for (std::uint32_t x = 0; x < v_; ++x) {
      for (std::uint32_t y = 0; y < v_; ++y) {
        if (a_.blocks_through(x).size() == b_.blocks_through(y).size()) dom[x] |= std::uint64_t{1} << y;
      }
    }
    map_.assign(v_, kUnset);
    recurse(dom, 0);
  }

 private:
  static constexpr std::uint32_t kUnset = 0xffffffffu;

  bool recurse(std::vector<std::uint64_t>& dom, std::uint32_t depth) {
    if (++nodes_ > limits_.node_budget) {
      throw ResourceError("isomorphism search exceeded its node budget of " +
                          std::to_string(limits_.node_budget));
    }
    if (depth == v_) {
      const Perm f(map_.begin(), map_.end());
      if (!block_permutation(a_, b_, f)) return true;
      return (*on_found_)(f);
    }
    std::uint32_t best = kUnset;
    int best_size = 65;
    for (std::uint32_t x = 0; x < v_; ++x) {
      if (map_[x] != kUnset) continue;
      const int s = std::popcount(dom[x]);
      if (s < best_size) {
        best_size = s;
        best = x;
      }
    }
    if (best_size == 0) return true;
    for (std::uint64_t cand = dom[best]; cand; cand &= cand - 1) {
      const auto y = static_cast<std::uint32_t>(std::countr_zero(cand));
      std::vector<std::uint64_t> next = dom;
      if (!assign(next, best, y)) continue;
      map_[best] = y;
      const bool go_on = recurse(next, depth + 1);
      map_[best] = kUnset;
      if (!go_on) return false;
    }
    return true;
  }

  bool assign(std::vector<std::uint64_t>& dom, std::uint32_t x, std::uint32_t y) {
    const std::uint64_t ybit = std::uint64_t{1} << y;
    for (std::uint32_t z = 0; z < v_; ++z) {
      if (map_[z] == kUnset && z != x) dom[z] &= ~ybit;
    }
    for (std::uint32_t m = 0; m < v_; ++m) {
      if (map_[m] == kUnset || m == x) continue;
      const auto src = a_.block_through(x, m);
      const auto dst = b_.block_through(y, map_[m]);
      if ((src < 0) != (dst < 0)) return false;
      if (src < 0) continue;
      if (a_.block(src).size() != b_.block(dst).size()) return false;
      const std::uint64_t mask = block_mask_[dst];
      for (std::uint32_t z = 0; z < v_; ++z) {
        if (map_[z] != kUnset || z == x) continue;
        dom[z] &= a_.contains(src, z) ? mask : ~mask;
        if (!dom[z]) return false;
      }
    }
    return true;
  }

  const IncidenceDesign& a_;
  const IncidenceDesign& b_;
  BacktrackLimits limits_;
  std::uint32_t v_;
  std::vector<std::uint64_t> block_mask_;
  std::vector<std::uint32_t> map_;
  std::uint64_t nodes_ = 0;
  const std::function<bool(const Perm&)>* on_found_ = nullptr;
};

void check_searchable(const IncidenceDesign& d) {
  if (d.num_points() > 64) throw InvalidArgument("design search supports at most 64 points");
  if (!d.is_partial_linear_space()) {
    throw InvalidArgument("design search needs a partial linear space");
  }
}

}  // namespace

PermGroup automorphism_group(const IncidenceDesign& d, const BacktrackLimits& limits) {
  check_searchable(d);
  std::vector<Perm> found;
  IsoSearch search(d, d, limits);
  search.run([&](const Perm& f) {
    if (found.size() >= limits.max_elements) {
      throw ResourceError("automorphism group exceeds " + std::to_string(limits.max_elements) +
                          " elements");
    }
    found.push_back(f);
    return true;
  });
  return PermGroup::from_elements(d.num_points(), std::move(found));
}

std::optional<Perm> find_isomorphism(const IncidenceDesign& a, const IncidenceDesign& b,
                                     const BacktrackLimits& limits) {
  check_searchable(a);
  check_searchable(b);
  std::optional<Perm> result;
  IsoSearch search(a, b, limits);
  search.run([&](const Perm& f) {
    result = f;
    return false;
  });
  return result;
}

std::vector<Configuration> general_position_configurations(const IncidenceDesign& d,
                                                           std::size_t size) {
  if (!d.is_partial_linear_space()) {
    throw InvalidArgument("configuration enumeration needs a partial linear space");
  }
  const std::uint32_t nb = d.num_blocks();
  // meet[a][b]: common point of blocks a and b, or -1.
  std::vector<std::int32_t> meet(static_cast<std::size_t>(nb) * nb, -1);
  for (std::uint32_t p = 0; p < d.num_points(); ++p) {
    for (auto a : d.blocks_through(p)) {
      for (auto b : d.blocks_through(p)) {
        if (a != b) meet[static_cast<std::size_t>(a) * nb + b] = static_cast<std::int32_t>(p);
      }
    }
  }
  auto common = [&](std::uint32_t a, std::uint32_t b) { return meet[static_cast<std::size_t>(a) * nb + b]; };

  std::vector<Configuration> out;
  std::vector<std::uint32_t> chosen;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t start) {
    if (chosen.size() == size) {
      Configuration c;
      c.blocks = chosen;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        for (std::size_t j = i + 1; j < chosen.size(); ++j) {
          c.points.push_back(static_cast<std::uint32_t>(common(chosen[i], chosen[j])));
        }
      }
      out.push_back(std::move(c));
      return;
    }
    for (std::uint32_t c = start; c < nb; ++c) {
      bool ok = true;
      for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
        const auto p = common(chosen[i], c);
        if (p < 0) {
          ok = false;
          break;
        }
        // The new intersection point must avoid every other chosen block.
        for (std::size_t j = 0; j < chosen.size() && ok; ++j) {
          if (j != i && d.contains(chosen[j], static_cast<std::uint32_t>(p))) ok = false;
        }
      }
      if (!ok) continue;
      chosen.push_back(c);
      extend(c + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return out;
}

}  // namespace ree
