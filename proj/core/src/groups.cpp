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

#include "ree/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "ree/error.hpp"

namespace ree {

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : p) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose(const Perm& g, const Perm& h) {
  if (g.size() != h.size()) throw InvalidArgument("composing permutations of different degree");
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = g[h[x]];
  return r;
}

Perm inverse(const Perm& g) {
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[g[x]] = static_cast<std::uint32_t>(x);
  return r;
}

Perm conjugate(const Perm& g, const Perm& h) { return compose(compose(g, h), inverse(g)); }

bool is_identity(const Perm& g) {
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g[x] != x) return false;
  }
  return true;
}

std::size_t perm_order(const Perm& g) {
  std::vector<bool> seen(g.size(), false);
  std::size_t ord = 1;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = g[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string to_cycles(const Perm& g) {
  std::ostringstream os;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (seen[x] || g[x] == x) continue;
    os << '(';
    for (std::size_t y = x; !seen[y]; y = g[y]) {
      seen[y] = true;
      if (y != x) os << ',';
      os << y;
    }
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

void check_perm(const Perm& g) {
  std::vector<bool> seen(g.size(), false);
  for (auto x : g) {
    if (x >= g.size() || seen[x]) throw InvalidArgument("not a permutation: " + to_cycles(g));
    seen[x] = true;
  }
}

PermGroup PermGroup::closure(std::size_t degree, std::vector<Perm> generators, std::size_t cap) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& s : generators) {
    if (s.size() != degree) throw InvalidArgument("generator degree mismatch");
    check_perm(s);
  }
  g.generators_ = std::move(generators);
  g.elements_.push_back(identity_perm(degree));
  g.index_.emplace(g.elements_[0], 0);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& s : g.generators_) {
      Perm y = compose(s, g.elements_[i]);
      if (g.index_.count(y)) continue;
      if (g.elements_.size() >= cap) {
        throw ResourceError("group closure exceeded " + std::to_string(cap) +
                            " elements (partial order " + std::to_string(g.elements_.size()) +
                            "); a stabilizer-chain (Schreier-Sims) implementation is needed");
      }
      g.index_.emplace(y, g.elements_.size());
      g.elements_.push_back(std::move(y));
    }
  }
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  PermGroup g;
  g.degree_ = degree;
  const Perm id = identity_perm(degree);
  auto it = std::find(elements.begin(), elements.end(), id);
  if (it == elements.end()) throw InvalidArgument("subgroup element list lacks the identity");
  std::rotate(elements.begin(), it, it + 1);
  g.elements_ = std::move(elements);
  g.index_elements();
  // Full closure check for small lists, a few rows of the table otherwise.
  const std::size_t rows = g.elements_.size() <= 64 ? g.elements_.size() : 4;
  for (std::size_t i = 0; i < rows; ++i) {
    for (const auto& b : g.elements_) {
      if (!g.contains(compose(g.elements_[i], b))) {
        throw InvalidArgument("element list is not closed under composition");
      }
    }
  }
  g.generators_ = greedy_generators(g);
  return g;
}

void PermGroup::index_elements() {
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw InvalidArgument("duplicate group element");
    }
  }
}

std::optional<std::size_t> PermGroup::index_of(const Perm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Perm> greedy_generators(const PermGroup& group) {
  std::vector<Perm> gens;
  PermGroup span = PermGroup::closure(group.degree(), {});
  for (const auto& x : group.elements()) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = PermGroup::closure(group.degree(), gens);
    if (span.order() == group.order()) break;
  }
  return gens;
}

namespace {

const std::vector<Perm>& acting_set(const PermGroup& g) {
  return g.generators().empty() ? g.elements() : g.generators();
}

}  // namespace

std::vector<std::uint32_t> orbit(const PermGroup& g, std::uint32_t seed) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::uint32_t> out{seed};
  seen[seed] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : acting_set(g)) {
      const auto y = s[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(g, x);
    for (auto y : o) seen[y] = true;
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

bool is_transitive(const PermGroup& g) {
  return g.degree() == 0 || orbit(g, 0).size() == g.degree();
}

bool is_2_transitive(const PermGroup& g) {
  const std::size_t n = g.degree();
  if (n < 2) return true;
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& x : g.elements()) pairs.emplace(x[0], x[1]);
  return pairs.size() == n * (n - 1);
}

PermGroup point_stabilizer(const PermGroup& g, std::uint32_t point) {
  std::vector<Perm> els;
  for (const auto& x : g.elements()) {
    if (x[point] == point) els.push_back(x);
  }
  const auto orb = orbit(g, point).size();
  if (orb * els.size() != g.order()) {
    throw InternalError("orbit-stabilizer check failed");
  }
  return PermGroup::from_elements(g.degree(), std::move(els));
}

PermGroup set_stabilizer(const PermGroup& g, const std::vector<std::uint32_t>& set) {
  std::vector<bool> in(g.degree(), false);
  for (auto x : set) in[x] = true;
  std::vector<Perm> els;
  for (const auto& x : g.elements()) {
    if (std::all_of(set.begin(), set.end(), [&](auto p) { return in[x[p]]; })) els.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), std::move(els));
}

PermGroup restrict_action(const PermGroup& g, const std::vector<std::uint32_t>& subset) {
  std::vector<std::int64_t> pos(g.degree(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<std::int64_t>(i);
  std::vector<Perm> els;
  std::unordered_map<Perm, std::size_t, PermHash> seen;
  for (const auto& x : g.elements()) {
    Perm r(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const auto image = pos[x[subset[i]]];
      if (image < 0) throw InvalidArgument("subset is not invariant under the group");
      r[i] = static_cast<std::uint32_t>(image);
    }
    if (seen.emplace(r, els.size()).second) els.push_back(std::move(r));
  }
  return PermGroup::from_elements(subset.size(), std::move(els));
}

std::vector<Perm> involutions(const PermGroup& g) {
  std::vector<Perm> out;
  for (const auto& x : g.elements()) {
    if (!is_identity(x) && is_identity(compose(x, x))) out.push_back(x);
  }
  return out;
}

std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x) {
  std::vector<Perm> out;
  std::unordered_map<Perm, bool, PermHash> seen;
  for (const auto& h : g.elements()) {
    Perm y = conjugate(h, x);
    if (seen.emplace(y, true).second) out.push_back(std::move(y));
  }
  return out;
}

std::size_t count_elements_of_order(const PermGroup& g, std::size_t k) {
  return static_cast<std::size_t>(std::count_if(g.elements().begin(), g.elements().end(),
                                                [k](const Perm& x) { return perm_order(x) == k; }));
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = acting_set(g);
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      if (compose(a, b) != compose(b, a)) return false;
    }
  }
  return true;
}

bool is_elementary_abelian_2(const PermGroup& g) {
  if (!is_abelian(g)) return false;
  return std::all_of(g.elements().begin(), g.elements().end(),
                     [](const Perm& x) { return perm_order(x) <= 2; });
}

std::vector<PermGroup> sylow2(const PermGroup& g) {
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % 2 == 0; n /= 2) target *= 2;
  if (target > 64) throw InvalidArgument("sylow2 supports 2-parts up to 64");
  PermGroup p = PermGroup::closure(g.degree(), {});
  std::vector<Perm> gens;
  while (p.order() < target) {
    bool grown = false;
    for (const auto& x : g.elements()) {
      if (p.contains(x) || !p.contains(compose(x, x))) continue;
      const bool normalizes = std::all_of(gens.begin(), gens.end(), [&](const Perm& h) {
        return p.contains(conjugate(x, h));
      });
      if (!normalizes) continue;
      gens.push_back(x);
      p = PermGroup::closure(g.degree(), gens);
      grown = true;
      break;
    }
    if (!grown) throw InternalError("could not extend a 2-subgroup to a Sylow subgroup");
  }
  std::vector<PermGroup> out;
  std::set<std::vector<std::size_t>> keys;
  for (const auto& h : g.elements()) {
    std::vector<Perm> els;
    std::vector<std::size_t> key;
    for (const auto& x : p.elements()) {
      els.push_back(conjugate(h, x));
      key.push_back(*g.index_of(els.back()));
    }
    std::sort(key.begin(), key.end());
    if (keys.insert(key).second) out.push_back(PermGroup::from_elements(g.degree(), std::move(els)));
  }
  return out;
}

bool is_A4(const PermGroup& g) {
  return g.order() == 12 && involutions(g).size() == 3 && count_elements_of_order(g, 6) == 0;
}

bool has_A4_subgroup(const PermGroup& g) {
  if (g.order() % 12 != 0) return false;
  if (is_A4(g)) return true;
  std::vector<const Perm*> twos, threes;
  for (const auto& x : g.elements()) {
    const auto o = perm_order(x);
    if (o == 2) twos.push_back(&x);
    if (o == 3) threes.push_back(&x);
  }
  for (const Perm* a : twos) {
    for (const Perm* b : threes) {
      try {
        if (is_A4(PermGroup::closure(g.degree(), {*a, *b}, 12))) return true;
      } catch (const ResourceError&) {
      }
    }
  }
  return false;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::uint32_t> parent;
};

std::vector<std::vector<std::uint32_t>> classes(UnionFind& uf) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::int64_t> slot(uf.parent.size(), -1);
  for (std::uint32_t x = 0; x < uf.parent.size(); ++x) {
    const auto r = uf.find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

}  // namespace

Primitivity primitivity(const PermGroup& g) {
  if (!is_transitive(g)) throw InvalidArgument("primitivity requires a transitive action");
  const std::size_t n = g.degree();
  Primitivity best;
  best.primitive = true;
  std::size_t best_size = n;
  for (std::uint32_t x = 1; x < n; ++x) {
    UnionFind uf(n);
    std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
    uf.unite(0, x);
    work.emplace_back(0, x);
    while (!work.empty()) {
      const auto [a, b] = work.front();
      work.pop_front();
      for (const auto& s : acting_set(g)) {
        if (uf.unite(s[a], s[b])) work.emplace_back(s[a], s[b]);
      }
    }
    auto parts = classes(uf);
    if (parts.size() > 1 && parts[0].size() < best_size) {
      best_size = parts[0].size();
      best.primitive = false;
      best.blocks = std::move(parts);
    }
  }
  return best;
}

bool is_block_system(const PermGroup& g, const std::vector<std::vector<std::uint32_t>>& blocks) {
  std::vector<std::int64_t> id(g.degree(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto x : blocks[b]) id[x] = static_cast<std::int64_t>(b);
  }
  if (std::count(id.begin(), id.end(), -1) != 0) return false;
  for (const auto& s : acting_set(g)) {
    for (const auto& block : blocks) {
      const auto target = id[s[block[0]]];
      for (auto x : block) {
        if (id[s[x]] != target) return false;
      }
    }
  }
  return true;
}

PermGroup conjugation_action(const PermGroup& g, const std::vector<Perm>& elements) {
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<std::uint32_t>(i));
  }
  std::vector<Perm> gens;
  for (const auto& s : acting_set(g)) {
    Perm p(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      auto it = index.find(conjugate(s, elements[i]));
      if (it == index.end()) throw InvalidArgument("element list is not conjugation invariant");
      p[i] = it->second;
    }
    gens.push_back(std::move(p));
  }
  return PermGroup::closure(elements.size(), std::move(gens));
}

CommutingGraph commuting_graph(const std::vector<Perm>& involutions) {
  CommutingGraph graph;
  graph.vertices = involutions;
  graph.adjacency.resize(involutions.size());
  for (std::uint32_t i = 0; i < involutions.size(); ++i) {
    for (std::uint32_t j = i + 1; j < involutions.size(); ++j) {
      if (compose(involutions[i], involutions[j]) == compose(involutions[j], involutions[i])) {
        graph.adjacency[i].push_back(j);
        graph.adjacency[j].push_back(i);
        ++graph.edge_count;
      }
    }
  }
  return graph;
}

std::vector<std::vector<std::uint32_t>> components(const CommutingGraph& graph) {
  UnionFind uf(graph.vertices.size());
  for (std::uint32_t i = 0; i < graph.adjacency.size(); ++i) {
    for (auto j : graph.adjacency[i]) uf.unite(i, j);
  }
  return classes(uf);
}

bool is_clique(const CommutingGraph& graph, const std::vector<std::uint32_t>& vertices) {
  for (auto a : vertices) {
    const auto& adj = graph.adjacency[a];
    for (auto b : vertices) {
      if (a != b && std::find(adj.begin(), adj.end(), b) == adj.end()) return false;
    }
  }
  return true;
}

PermGroup psl2(const Field& field) {
  const std::uint32_t q = field.order();
  if (q > 32) throw InvalidArgument("psl2 supports q <= 32");
  const std::uint32_t inf = q;
  const std::uint32_t squares = (q - 1) / (q % 2 == 1 ? 2 : 1);
  // The unique subgroup of order `squares` of the cyclic group GF(q)* is the
  // group of nonzero squares; any element of that order generates it.
  Field::Code lambda = 1;
  for (Field::Code a = 1; a < q; ++a) {
    std::uint32_t ord = 1;
    for (Field::Code x = a; x != 1; x = field.mul(x, a)) ++ord;
    if (ord == squares) {
      lambda = a;
      break;
    }
  }
  Perm translate(q + 1), scale(q + 1), invert(q + 1);
  for (Field::Code x = 0; x < q; ++x) {
    translate[x] = field.add(x, 1);
    scale[x] = field.mul(lambda, x);
    invert[x] = x == 0 ? inf : field.neg(field.inv(x));
  }
  translate[inf] = inf;
  scale[inf] = inf;
  invert[inf] = 0;
  return PermGroup::closure(q + 1, {translate, scale, invert});
}

PermGroup cyclic_group(std::size_t n) {
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>((i + 1) % n);
  return PermGroup::closure(n, {r});
}

PermGroup dihedral_group(std::size_t n) {
  Perm r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint32_t>((i + 1) % n);
    s[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return PermGroup::closure(n, {r, s});
}

PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup::closure(n, {});
  Perm t = identity_perm(n);
  std::swap(t[0], t[1]);
  return PermGroup::closure(n, {t, cyclic_group(n).generators()[0]});
}

}  // namespace ree
