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

#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "ree/embed.hpp"
#include "ree/error.hpp"
#include "shared.hpp"

namespace {

using ree::Field;
using ree::Plane;
using ree::SearchConfig;
using ree::SearchStatus;

std::shared_ptr<const Plane> plane(std::uint32_t q) { return std::make_shared<const Plane>(Field::standard(q)); }

ree::SearchResult run(const ree::IncidenceDesign& d, std::uint32_t q, int level, std::uint64_t budget = 1'000'000'000,
                      unsigned threads = 1) {
  SearchConfig cfg;
  cfg.level = level;
  cfg.node_budget = budget;
  cfg.threads = threads;
  return ree::search(d, plane(q), cfg);
}

TEST(DualEmbedding, Verifies) {
  const auto& ctx = shared::ctx();
  const auto e = ree::dual_embedding(ctx);
  const auto r = ree::verify(shared::r3(), e);
  EXPECT_TRUE(r.ok) << r.message;
  const auto dual = ree::dual_hyperoval(ctx);
  ASSERT_EQ(dual.size(), 10u);
  std::set<Plane::Index> off;
  for (Plane::Index x = 0; x < ctx.plane->size(); ++x) {
    bool on = false;
    for (auto l : dual) on = on || ctx.plane->incident(x, l);
    if (!on) off.insert(x);
  }
  EXPECT_EQ(off, std::set<Plane::Index>(e.point_map.begin(), e.point_map.end()));
}

TEST(DualEmbedding, VerifyReportsAWitness) {
  const auto& d = shared::r3();
  auto e = ree::dual_embedding(shared::ctx());
  std::swap(e.point_map[0], e.point_map[27]);
  auto r = ree::verify(d, e);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
  e = ree::dual_embedding(shared::ctx());
  e.point_map[1] = e.point_map[0];
  r = ree::verify(d, e);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->first, 0u);
  EXPECT_EQ(r.witness->second, 1u);
}

TEST(DualEmbedding, CollineationImagesStillVerify) {
  const auto& d = shared::r3();
  const auto e = ree::dual_embedding(shared::ctx());
  const Field f = Field::gf8();
  oracle::Gen gen(64);
  for (int s = 0; s < 10; ++s) {
    ree::Mat3 m;
    do {
      for (auto& c : m) c = gen.below(8);
    } while (ree::mat3::det(f, m) == 0);
    EXPECT_TRUE(ree::verify(d, ree::transform(e, ree::Collineation(f, m, gen.below(3)))).ok);
  }
}

TEST(DualEmbedding, LiftsIntoTheSubplaneOfOrder8) {
  const auto e = ree::dual_embedding(shared::ctx());
  const auto big = ree::lift(e, plane(64));
  EXPECT_TRUE(ree::verify(shared::r3(), big).ok);
  EXPECT_TRUE(ree::inside_subplane(big, Field::gf8()));
  EXPECT_FALSE(ree::inside_subplane(big, Field::standard(4)));
  EXPECT_THROW(ree::lift(e, plane(16)), ree::InvalidArgument);
}

TEST(Admissibility, EveryAutomorphismIsInduced) {
  const auto& d = shared::r3();
  const auto e = ree::dual_embedding(shared::ctx());
  const auto dual = ree::dual_hyperoval(shared::ctx());
  oracle::Gen gen(77);
  std::vector<ree::Perm> sample = ree::greedy_generators(shared::aut());
  for (int s = 0; s < 20; ++s) sample.push_back(shared::aut().element(gen.below(1512)));
  const auto r = ree::admissibility(d, e, sample);
  ASSERT_TRUE(r.ok) << r.message;
  ASSERT_EQ(r.betas.size(), sample.size());
  const auto& p = *e.plane;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto pp = p.point_permutation(r.betas[i]);
    for (std::uint32_t x = 0; x < 28; ++x) EXPECT_EQ(pp[e.point_map[x]], e.point_map[sample[i][x]]);
    EXPECT_TRUE(ree::preserves_lines(p, r.betas[i], dual));
  }
}

TEST(Admissibility, NonAutomorphismIsRejected) {
  auto swap = ree::identity_perm(28);
  std::swap(swap[0], swap[1]);
  EXPECT_FALSE(ree::admissibility(shared::r3(), ree::dual_embedding(shared::ctx()), {swap}).ok);
}

TEST(Corollary, SylowLinesAreConcurrent) {
  const auto& d = shared::r3();
  const auto& ctx = shared::ctx();
  const auto e = ree::dual_embedding(ctx);
  for (const auto& s : ree::sylow2(shared::aut())) {
    std::vector<ree::Perm> inv;
    for (const auto& g : s.elements())
      if (!ree::is_identity(g)) inv.push_back(g);
    const auto blocks = ree::involution_blocks(d, inv);
    std::vector<ree::ProjLine> lines;
    std::set<Plane::Index> tangents;
    for (auto b : blocks) {
      lines.push_back(e.plane->line(e.block_map[b]));
      tangents.insert(ctx.tangent_through(ctx.external_points[b]));
    }
    EXPECT_TRUE(ree::concurrent(lines));
    // Dually, the seven external points sit on one tangent.
    EXPECT_EQ(tangents.size(), 1u);
  }
}

TEST(Involutions, FixedBlocks) {
  const auto& d = shared::r3();
  const auto inv = ree::involutions(shared::aut());
  const auto blocks = ree::involution_blocks(d, inv);
  ASSERT_EQ(blocks.size(), 63u);
  EXPECT_EQ(std::set<std::uint32_t>(blocks.begin(), blocks.end()).size(), 63u);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    for (std::uint32_t x = 0; x < 28; ++x) EXPECT_EQ(inv[i][x] == x, d.contains(blocks[i], x));
  }
}

TEST(Conics, OrbitSizesMatchTheConicCount) {
  // q^5 - q^2 nondegenerate conics in PG(2,q).
  for (auto q : {2u, 3u, 4u, 5u, 8u}) {
    EXPECT_EQ(ree::conic_orbit_size(Plane(Field::standard(q))), q * q * q * q * q - q * q) << "q=" << q;
  }
}

TEST(Search, FanoIntoPg22) {
  const auto fano = ree::fano_plane();
  const auto l0 = run(fano, 2, 0), l1 = run(fano, 2, 1), l2 = run(fano, 2, 2);
  EXPECT_EQ(l0.embeddings.size(), 168u);
  EXPECT_EQ(l1.embeddings.size(), 8u);
  EXPECT_EQ(l2.embeddings.size(), 1u);
  for (const auto& r : {l0, l1, l2}) {
    EXPECT_EQ(r.status, SearchStatus::kComplete);
    for (const auto& e : r.embeddings) EXPECT_TRUE(ree::verify(fano, e).ok);
  }
}

TEST(Search, FanoIntoPg24) {
  // |PGL(3,4)| = 60480 embeddings; 105 flags; one up to PGL.
  const auto fano = ree::fano_plane();
  EXPECT_EQ(run(fano, 4, 0).embeddings.size(), 60480u);
  EXPECT_EQ(run(fano, 4, 1).embeddings.size(), 576u);
  EXPECT_EQ(run(fano, 4, 2).embeddings.size(), 1u);
}

TEST(Search, FanoIsNotInOddCharacteristic) {
  const auto fano = ree::fano_plane();
  for (auto q : {3u, 5u}) {
    for (int level : {0, 1, 2}) {
      const auto r = run(fano, q, level);
      EXPECT_EQ(r.status, SearchStatus::kComplete);
      EXPECT_TRUE(r.embeddings.empty());
    }
  }
}

TEST(Search, ReeUnitalInPg28) {
  const auto& d = shared::r3();
  const auto r = run(d, 8, 2);
  ASSERT_EQ(r.status, SearchStatus::kComplete);
  ASSERT_EQ(r.embeddings.size(), 3u);
  for (const auto& e : r.embeddings) EXPECT_TRUE(ree::verify(d, e).ok);
  const auto pgl = ree::classify(d, r.embeddings, shared::aut(), false);
  const auto pgaml = ree::classify(d, r.embeddings, shared::aut(), true);
  EXPECT_EQ(pgl.orbit_count, 1u);
  EXPECT_EQ(pgaml.orbit_count, 1u);
  ASSERT_EQ(pgaml.transporters.size(), 2u);
  for (const auto& t : pgaml.transporters) {
    const auto moved = ree::transform(r.embeddings[t.from], t.beta);
    const auto& alpha = shared::aut().element(t.automorphism);
    for (std::uint32_t x = 0; x < 28; ++x) EXPECT_EQ(moved.point_map[x], r.embeddings[t.to].point_map[alpha[x]]);
  }
  std::vector<ree::Embedding> with_dual{ree::dual_embedding(shared::ctx())};
  with_dual.insert(with_dual.end(), r.embeddings.begin(), r.embeddings.end());
  EXPECT_EQ(ree::classify(d, with_dual, shared::aut(), true).orbit_count, 1u);
}

TEST(Search, ReeUnitalFirstSolutionAtLevelOne) {
  SearchConfig cfg;
  cfg.level = 1;
  cfg.max_solutions = 1;
  const auto r = ree::search(shared::r3(), plane(8), cfg);
  ASSERT_EQ(r.embeddings.size(), 1u);
  EXPECT_TRUE(r.truncated);
  EXPECT_TRUE(ree::verify(shared::r3(), r.embeddings[0]).ok);
}

TEST(Search, ReeUnitalNotInPg29AtTwoLevels) {
  const auto l2 = run(shared::r3(), 9, 2), l1 = run(shared::r3(), 9, 1);
  EXPECT_EQ(l2.status, SearchStatus::kComplete);
  EXPECT_EQ(l1.status, SearchStatus::kComplete);
  EXPECT_TRUE(l2.embeddings.empty());
  EXPECT_TRUE(l1.embeddings.empty());
  EXPECT_GT(l1.nodes, l2.nodes);
}

TEST(Search, ReeUnitalNotInSmallPlanes) {
  for (auto q : {4u, 5u, 7u, 16u}) {
    const auto r = run(shared::r3(), q, 2);
    EXPECT_EQ(r.status, SearchStatus::kComplete);
    EXPECT_TRUE(r.embeddings.empty()) << "q=" << q;
  }
}

TEST(Search, BudgetGivesInconclusive) {
  const auto r = run(shared::r3(), 9, 2, 3);
  EXPECT_EQ(r.status, SearchStatus::kInconclusive);
  EXPECT_LE(r.nodes, 3u);
}

TEST(Search, ThreadCountDoesNotChangeTheResult) {
  const auto fano = ree::fano_plane();
  for (auto [q, level] : std::vector<std::pair<std::uint32_t, int>>{{4, 1}, {3, 0}}) {
    const auto a = run(fano, q, level, 1'000'000'000, 1), b = run(fano, q, level, 1'000'000'000, 3);
    EXPECT_EQ(a.trace_hash, b.trace_hash);
    EXPECT_EQ(a.nodes, b.nodes);
    EXPECT_EQ(a.depth_profile, b.depth_profile);
    ASSERT_EQ(a.embeddings.size(), b.embeddings.size());
    for (std::size_t i = 0; i < a.embeddings.size(); ++i) EXPECT_EQ(a.embeddings[i].point_map, b.embeddings[i].point_map);
  }
  const auto a = run(shared::r3(), 9, 1, 1'000'000'000, 1), b = run(shared::r3(), 9, 1, 1'000'000'000, 2);
  EXPECT_EQ(a.trace_hash, b.trace_hash);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Search, Preconditions) {
  EXPECT_THROW(run(shared::r3(), 27, 2), ree::InvalidArgument);
  EXPECT_THROW(run(ree::IncidenceDesign(65, {{0, 1}}), 8, 0), ree::InvalidArgument);
  SearchConfig cfg;
  cfg.level = 3;
  EXPECT_THROW(ree::search(shared::r3(), plane(8), cfg), ree::InvalidArgument);
}

TEST(Certificate, Fields) {
  const auto& d = shared::r3();
  SearchConfig cfg;
  const auto r = ree::search(d, plane(8), cfg);
  const auto c = ree::certificate_json(d, *plane(8), cfg, r);
  EXPECT_EQ(c["design_digest"], d.digest());
  EXPECT_EQ(c["plane"]["order"], 8);
  EXPECT_EQ(c["plane"]["field"], "GF(2^3; 1,1,0,1)");
  EXPECT_EQ(c["status"], "complete");
  EXPECT_EQ(c["nodes"], r.nodes);
  ASSERT_EQ(c["embeddings"].size(), 3u);
  for (const auto& e : c["embeddings"]) {
    EXPECT_EQ(e["verified"], true);
    EXPECT_EQ(e["point_map"].size(), 28u);
    EXPECT_EQ(e["block_map"].size(), 63u);
  }
}

}  // namespace
