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

#include <functional>
#include <set>

#include "oracle.hpp"
#include "ree/pentagons.hpp"
#include "shared.hpp"

namespace {

using ree::Field;
using ree::Plane;
using ree::ProjLine;
using ree::ProjPoint;

oracle::Triple normalize(oracle::Triple t) {
  for (int i = 2; i >= 0; --i) {
    if (t[i] == 0) continue;
    // Inverse by search keeps the oracle free of library arithmetic.
    std::uint32_t inv = 1;
    while (oracle::gf8_mul(inv, t[i]) != 1) ++inv;
    for (auto& c : t) c = oracle::gf8_mul(c, inv);
    return t;
  }
  return t;
}

oracle::Triple cross(const oracle::Triple& a, const oracle::Triple& b) {
  using oracle::gf8_mul;
  return normalize({gf8_mul(a[1], b[2]) ^ gf8_mul(a[2], b[1]), gf8_mul(a[2], b[0]) ^ gf8_mul(a[0], b[2]),
                    gf8_mul(a[0], b[1]) ^ gf8_mul(a[1], b[0])});
}

// 5-sets of external points whose 10 joins are distinct external lines.
std::size_t brute_force_pentagon_count() {
  const auto census = oracle::pg28_census();
  const std::vector<oracle::Triple> pts(census.external_point_set.begin(), census.external_point_set.end());
  const std::size_t n = pts.size();
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  std::vector<std::vector<oracle::Triple>> line(n, std::vector<oracle::Triple>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        line[i][j] = cross(pts[i], pts[j]);
        ok[i][j] = census.external_line_set.count(line[i][j]) == 1;
      }
  std::size_t count = 0;
  std::array<std::size_t, 5> s{};
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == 5) {
      std::set<oracle::Triple> lines;
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) lines.insert(line[s[a]][s[b]]);
      count += lines.size() == 10;
      return;
    }
    for (std::size_t x = from; x < n; ++x) {
      bool good = true;
      for (std::size_t d = 0; d < depth && good; ++d) good = ok[s[d]][x];
      if (!good) continue;
      s[depth] = x;
      rec(depth + 1, x + 1);
    }
  };
  rec(0, 0);
  return count;
}

TEST(Pentagons, FundamentalCoordinates) {
  const Field f = Field::gf8();
  const auto g = f.generator();
  const auto p = ree::fundamental_points(f);
  EXPECT_EQ(p[0], ProjPoint(f.one(), f.one(), f.zero()));
  EXPECT_EQ(p[1], ProjPoint(f.zero(), f.one(), f.one()));
  EXPECT_EQ(p[2], ProjPoint(g, g.pow(6), f.one()));
  EXPECT_EQ(p[3], ProjPoint(g.pow(2), g.pow(5), f.one()));
  EXPECT_EQ(p[4], ProjPoint(g.pow(4), g.pow(3), f.one()));
  std::array<Plane::Index, 5> idx;
  for (int i = 0; i < 5; ++i) idx[i] = shared::ctx().plane->index_of(p[i]);
  std::sort(idx.begin(), idx.end());
  EXPECT_TRUE(ree::is_external_pentagon(shared::ctx(), idx));
}

TEST(Pentagons, CountMatchesBruteForce) {
  const auto all = ree::external_pentagons(shared::ctx());
  EXPECT_EQ(all.size(), 126u);
  EXPECT_EQ(brute_force_pentagon_count(), 126u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Pentagons, AllOfA4TypeInOneOrbit) {
  const auto& ps = shared::pentagons();
  const auto& G = shared::G();
  const auto fund = ree::fundamental_pentagon(shared::ctx(), G);
  ASSERT_EQ(ps.size(), 126u);
  for (const auto& p : ps) {
    EXPECT_TRUE(p.a4_type);
    EXPECT_EQ(p.stabilizer_order, 12u);
    EXPECT_TRUE(p.fixes_apex_only);
    EXPECT_TRUE(p.two_transitive_on_rest);
    ASSERT_NE(p.transport, ree::kNoTransport);
    const auto& perm = G.on_points.element(p.transport);
    EXPECT_EQ(perm[fund.apex], p.apex);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(perm[fund.c[i]], p.c[i]);
  }
  EXPECT_EQ(G.order() / ree::fundamental_group(*shared::ctx().plane).order(), 126u);
}

TEST(LabelSequences, EvenPermutationsAndKleinCosets) {
  const auto& seq = ree::even_sequences();
  std::set<ree::LabelSeq> distinct(seq.begin(), seq.end());
  EXPECT_EQ(distinct.size(), 12u);
  EXPECT_TRUE(std::is_sorted(seq.begin(), seq.end()));
  for (const auto& s : seq) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += s[i] > s[j];
    EXPECT_EQ(inversions % 2, 0);
  }
  EXPECT_EQ(ree::sequence_name(seq[0]), "1234");
  EXPECT_EQ(ree::sequence_index({0, 1, 2, 3}), 0u);
  std::set<std::size_t> covered;
  for (const auto& coset : ree::klein_cosets())
    for (auto i : coset) covered.insert(i);
  EXPECT_EQ(covered.size(), 12u);
  const std::set<std::size_t> first{ree::sequence_index({0, 1, 2, 3}), ree::sequence_index({1, 0, 3, 2}),
                                    ree::sequence_index({2, 3, 0, 1}), ree::sequence_index({3, 2, 1, 0})};
  bool found = false;
  for (const auto& coset : ree::klein_cosets()) found = found || std::set<std::size_t>(coset.begin(), coset.end()) == first;
  EXPECT_TRUE(found);
}

TEST(DLines, FundamentalPentagonValues) {
  const Field f = Field::gf8();
  const auto g = f.generator();
  const auto& ctx = shared::ctx();
  const auto& p = *ctx.plane;
  const auto fund = ree::fundamental_pentagon(ctx, shared::G());
  const auto fam = ree::d_lines(p, fund);
  const auto n1234 = ree::sequence_index({0, 1, 2, 3});
  const auto n3241 = ree::sequence_index({2, 1, 3, 0});
  EXPECT_EQ(p.point(fam.first[n1234]), ProjPoint(g.pow(6), g.pow(2), f.one()));
  EXPECT_EQ(p.point(fam.second[n1234]), ProjPoint(f.one(), g.pow(4), f.one()));
  EXPECT_EQ(p.line(fam.lines[n1234]), ree::line_y_equals(g.pow(6), g.pow(3)));
  const auto at_inf = p.meet(fam.lines[n1234], p.index_of(ProjLine(f.zero(), f.zero(), f.one())));
  EXPECT_EQ(p.point(at_inf), ProjPoint(f.one(), g.pow(6), f.zero()));
  // AC4, d1234 and d3241 as Y = mX + bZ, with the vanishing determinant of
  // their (m, 1, b) rows.
  const auto ac4 = p.join(fund.apex, fund.c[3]);
  EXPECT_EQ(p.line(ac4), ree::line_y_equals(f.one(), g.pow(6)));
  EXPECT_EQ(p.line(fam.lines[n3241]), ree::line_y_equals(g.pow(3), g.pow(4)));
  const ree::Code3 r0{1, 1, g.pow(6).code()}, r1{g.pow(6).code(), 1, g.pow(3).code()}, r2{g.pow(3).code(), 1, g.pow(4).code()};
  EXPECT_TRUE(ree::det3(r0, r1, r2, f).is_zero());
}

TEST(DLines, ClaimsHoldForAllPentagons) {
  for (const auto& p : shared::pentagons()) {
    const auto r = ree::verify_pentagon_claims(shared::ctx(), p);
    EXPECT_TRUE(r.ok()) << r.distinct.detail << " | " << r.external.detail << " | " << r.quadruples.detail << " | "
                        << r.concurrency.detail;
  }
}

TEST(DLines, WrongApexBreaksTheClaims) {
  auto p = ree::fundamental_pentagon(shared::ctx(), shared::G());
  std::swap(p.apex, p.c[0]);
  EXPECT_FALSE(ree::verify_pentagon_claims(shared::ctx(), p).ok());
}

TEST(SuperONan, DualToPentagons) {
  const auto& ctx = shared::ctx();
  std::set<std::vector<std::uint32_t>> socs, duals;
  for (const auto& c : ree::super_onan_configurations(shared::r3())) socs.insert(c.blocks);
  for (const auto& p : shared::pentagons()) {
    std::vector<std::uint32_t> b;
    for (auto x : p.points) b.push_back(static_cast<std::uint32_t>(ctx.external_point_ordinal[x]));
    std::sort(b.begin(), b.end());
    duals.insert(b);
  }
  EXPECT_EQ(socs.size(), 126u);
  EXPECT_EQ(socs, duals);
}

TEST(SuperONan, DPointsForAllConfigurations) {
  const auto& ctx = shared::ctx();
  for (const auto& p : shared::pentagons()) {
    const auto labels = ree::soc_labeling_from_pentagon(ctx, p);
    const auto r = ree::soc_d_points(shared::r3(), labels);
    ASSERT_TRUE(r.ok()) << r.exists.detail << " | " << r.distinct.detail << " | " << r.coset_blocks.detail << " | "
                        << r.collinear.detail;
    const auto fam = ree::d_lines(*ctx.plane, p);
    for (std::size_t n = 0; n < 12; ++n) EXPECT_EQ(ctx.external_lines[r.d[n]], fam.lines[n]);
    EXPECT_EQ(ree::count_valid_soc_labelings(shared::r3(), {labels.a, labels.c[0], labels.c[1], labels.c[2], labels.c[3]}),
              12u);
  }
}

TEST(SuperONan, StabilizerFixesTheApexBlock) {
  const auto& d = shared::r3();
  std::vector<ree::Perm> on_blocks;
  for (const auto& g : shared::aut().elements()) on_blocks.push_back(*ree::block_permutation(d, g));
  const auto group = ree::PermGroup::from_elements(d.num_blocks(), on_blocks);
  for (const auto& p : shared::pentagons()) {
    const auto labels = ree::soc_labeling_from_pentagon(shared::ctx(), p);
    std::vector<std::uint32_t> all{labels.a, labels.c[0], labels.c[1], labels.c[2], labels.c[3]};
    std::sort(all.begin(), all.end());
    const auto stab = ree::set_stabilizer(group, all);
    EXPECT_TRUE(ree::is_A4(stab));
    for (const auto& g : stab.elements()) EXPECT_EQ(g[labels.a], labels.a);
  }
}

}  // namespace
