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

#include <numeric>
#include <set>

#include "oracle.hpp"
#include "ree/error.hpp"
#include "ree/groups.hpp"
#include "shared.hpp"

namespace {

using ree::Perm;
using ree::PermGroup;

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

PermGroup alternating4() { return PermGroup::closure(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

// q(q^2-1)/gcd(2,q-1) and the number of involutions of PSL(2,q).
std::size_t psl2_order(std::size_t q) { return q * (q * q - 1) / (q % 2 ? 2 : 1); }
std::size_t psl2_involutions(std::size_t q) {
  if (q % 2 == 0) return q * q - 1;
  return q % 4 == 1 ? q * (q + 1) / 2 : q * (q - 1) / 2;
}

TEST(Perm, CompositionConvention) {
  const Perm g{1, 2, 0}, h{0, 2, 1};
  const auto gh = ree::compose(g, h);
  for (std::uint32_t x = 0; x < 3; ++x) EXPECT_EQ(gh[x], g[h[x]]);
  EXPECT_TRUE(ree::is_identity(ree::compose(g, ree::inverse(g))));
  EXPECT_EQ(ree::perm_order(g), 3u);
  EXPECT_EQ(ree::to_cycles(g), "(0,1,2)");
  EXPECT_EQ(ree::to_cycles(ree::identity_perm(4)), "()");
  EXPECT_THROW(ree::check_perm({0, 0, 1}), ree::InvalidArgument);
  EXPECT_THROW(PermGroup::closure(3, {{0, 1}}), ree::InvalidArgument);
}

TEST(Groups, StandardFamilies) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(ree::symmetric_group(n).order(), factorial(n));
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(ree::cyclic_group(n).order(), n);
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(ree::dihedral_group(n).order(), 2 * n);
  EXPECT_THROW(PermGroup::closure(10, ree::symmetric_group(10).generators(), 1000), ree::ResourceError);
}

TEST(Groups, Psl2OrdersAndInvolutions) {
  for (auto q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 27u}) {
    const auto g = ree::psl2(ree::Field::standard(q));
    EXPECT_EQ(g.degree(), q + 1);
    EXPECT_EQ(g.order(), psl2_order(q)) << "q=" << q;
    EXPECT_EQ(ree::involutions(g).size(), psl2_involutions(q)) << "q=" << q;
    EXPECT_TRUE(ree::is_2_transitive(g));
  }
}

TEST(Groups, A4Recognition) {
  EXPECT_TRUE(ree::is_A4(alternating4()));
  EXPECT_FALSE(ree::is_A4(ree::symmetric_group(4)));
  EXPECT_FALSE(ree::is_A4(ree::cyclic_group(12)));
  EXPECT_FALSE(ree::is_A4(ree::dihedral_group(6)));
  EXPECT_TRUE(ree::has_A4_subgroup(ree::symmetric_group(4)));
  EXPECT_FALSE(ree::has_A4_subgroup(ree::dihedral_group(12)));
}

TEST(Groups, SylowTwoSubgroups) {
  const auto s4 = ree::sylow2(ree::symmetric_group(4));
  EXPECT_EQ(s4.size(), 3u);
  for (const auto& p : s4) {
    EXPECT_EQ(p.order(), 8u);
    EXPECT_FALSE(ree::is_abelian(p));
  }
  const auto a5 = ree::sylow2(ree::psl2(ree::Field::standard(5)));
  EXPECT_EQ(a5.size(), 5u);
  for (const auto& p : a5) EXPECT_TRUE(ree::is_elementary_abelian_2(p));
  const auto ree3 = ree::sylow2(shared::aut());
  EXPECT_EQ(ree3.size(), 9u);
  for (const auto& p : ree3) {
    EXPECT_EQ(p.order(), 8u);
    EXPECT_TRUE(ree::is_elementary_abelian_2(p));
  }
}

TEST(Groups, OrbitStabilizer) {
  const auto& aut = shared::aut();
  oracle::Gen gen(3);
  for (int s = 0; s < 5; ++s) {
    const auto x = gen.below(28);
    EXPECT_EQ(ree::orbit(aut, x).size() * ree::point_stabilizer(aut, x).order(), aut.order());
  }
  EXPECT_EQ(ree::orbits(aut).size(), 1u);
  EXPECT_EQ(ree::orbits(ree::PermGroup::closure(5, {{1, 0, 2, 4, 3}})).size(), 3u);
}

TEST(Groups, ElementOrdersOfReeThree) {
  // PGammaL(2,8) = PSL(2,8):3; outer elements have order divisible by 3.
  const auto& aut = shared::aut();
  EXPECT_EQ(ree::count_elements_of_order(aut, 1), 1u);
  EXPECT_EQ(ree::count_elements_of_order(aut, 2), 63u);
  // Order 7 lies in PSL(2,8): 36 split tori of order 7, six generators each.
  EXPECT_EQ(ree::count_elements_of_order(aut, 7), 36u * 6u);
  std::size_t total = 0;
  for (std::size_t k = 1; k <= 18; ++k) total += ree::count_elements_of_order(aut, k);
  EXPECT_EQ(total, 1512u);
}

TEST(Primitivity, KnownCases) {
  EXPECT_TRUE(ree::primitivity(ree::symmetric_group(6)).primitive);
  EXPECT_TRUE(ree::primitivity(ree::cyclic_group(7)).primitive);
  const auto c6 = ree::primitivity(ree::cyclic_group(6));
  EXPECT_FALSE(c6.primitive);
  EXPECT_TRUE(ree::is_block_system(ree::cyclic_group(6), c6.blocks));
  const auto d8 = ree::primitivity(ree::dihedral_group(8));
  EXPECT_FALSE(d8.primitive);
  EXPECT_TRUE(ree::is_block_system(ree::dihedral_group(8), d8.blocks));
  EXPECT_FALSE(ree::is_block_system(ree::dihedral_group(8), {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
  EXPECT_THROW(ree::primitivity(ree::PermGroup::closure(4, {{1, 0, 2, 3}})), ree::InvalidArgument);
}

// A primitive action on a conjugacy class of involutions gives an empty or
// connected commuting graph; a disconnected graph comes with a block system.
void check_commuting_components(const PermGroup& g, const std::string& name) {
  const auto inv = ree::involutions(g);
  ASSERT_FALSE(inv.empty()) << name;
  const auto cls = ree::conjugacy_class(g, inv.front());
  const auto action = ree::conjugation_action(g, cls);
  const auto prim = ree::primitivity(action);
  const auto graph = ree::commuting_graph(cls);
  const auto comps = ree::components(graph);
  if (prim.primitive && graph.edge_count > 0) {
    EXPECT_EQ(comps.size(), 1u) << name;
  }
  if (comps.size() > 1) {
    EXPECT_FALSE(prim.primitive) << name;
    EXPECT_TRUE(ree::is_block_system(action, comps)) << name;
  }
}

TEST(CommutingGraph, ComponentsFormBlockSystemsOnSmallGroups) {
  check_commuting_components(ree::symmetric_group(4), "S4");
  check_commuting_components(ree::symmetric_group(5), "S5");
  for (auto q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 27u}) {
    check_commuting_components(ree::psl2(ree::Field::standard(q)), "PSL(2," + std::to_string(q) + ")");
  }
  check_commuting_components(shared::aut(), "Ree(3)");
}

TEST(CommutingGraph, ReeThreeComponentsAreSylowCliques) {
  const auto inv = ree::involutions(shared::aut());
  ASSERT_EQ(inv.size(), 63u);
  const auto graph = ree::commuting_graph(inv);
  const auto comps = ree::components(graph);
  ASSERT_EQ(comps.size(), 9u);
  EXPECT_EQ(graph.edge_count, 9u * 21u);
  std::set<std::set<Perm>> from_graph, from_sylow;
  for (const auto& c : comps) {
    EXPECT_TRUE(ree::is_clique(graph, c));
    std::set<Perm> s;
    for (auto i : c) s.insert(inv[i]);
    from_graph.insert(s);
  }
  for (const auto& p : ree::sylow2(shared::aut())) {
    std::set<Perm> s;
    for (const auto& g : p.elements())
      if (!ree::is_identity(g)) s.insert(g);
    from_sylow.insert(s);
  }
  EXPECT_EQ(from_graph, from_sylow);
  EXPECT_EQ(ree::conjugacy_class(shared::aut(), inv.front()).size(), 63u);
}

TEST(CommutingGraph, Psl227IsConnectedAndPrimitive) {
  const auto g = ree::psl2(ree::Field::standard(27));
  const auto inv = ree::involutions(g);
  ASSERT_EQ(inv.size(), 351u);
  EXPECT_EQ(ree::components(ree::commuting_graph(inv)).size(), 1u);
  EXPECT_TRUE(ree::primitivity(ree::conjugation_action(g, inv)).primitive);
}

}  // namespace
