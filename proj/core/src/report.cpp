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

#include "ree/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ree/conic.hpp"
#include "ree/design.hpp"
#include "ree/embed.hpp"
#include "ree/error.hpp"
#include "ree/groups.hpp"
#include "ree/pentagons.hpp"
#include "ree/symbolic.hpp"

#ifndef REE_VERSION
#define REE_VERSION "0.0.0"
#endif

namespace ree {

std::string version() { return REE_VERSION; }

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kInconclusive:
      return "inconclusive";
  }
  return "fail";
}

const std::vector<std::string>& selectors() {
  static const std::vector<std::string> all{"all",      "census",    "groups",    "pentagons", "soc",
                                            "thm1",     "embed-pg8", "embed-pg9", "embed-pg16"};
  return all;
}

bool is_long_selector(const std::string& selector) { return selector == "embed-pg16"; }

CheckStatus overall_status(const std::vector<CheckRecord>& checks) {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (c.optional) continue;
    if (c.status == CheckStatus::kFail) return CheckStatus::kFail;
    inconclusive = inconclusive || c.status == CheckStatus::kInconclusive;
  }
  return inconclusive ? CheckStatus::kInconclusive : CheckStatus::kPass;
}

int exit_code(CheckStatus overall) {
  switch (overall) {
    case CheckStatus::kPass:
      return 0;
    case CheckStatus::kFail:
      return 1;
    case CheckStatus::kInconclusive:
      return 3;
  }
  return 1;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("REE_SEARCH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000'000;
}

namespace {

using json = nlohmann::json;
using Outcome = std::pair<bool, json>;

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::uint32_t> sorted_block_set(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

class Suite {
 public:
  Suite(SuiteReport& report) : report_(report), opt_(report.options) {}

  void census();
  void groups();
  void pentagons();
  void soc();
  void thm1();
  void embed_pg8();
  void embed_search(std::uint32_t q, const std::string& id);

 private:
  void check(const std::string& id, const std::string& claim, const std::function<Outcome()>& fn) {
    CheckRecord rec;
    rec.id = id;
    rec.claim = claim;
    const auto start = std::chrono::steady_clock::now();
    try {
      auto [ok, witness] = fn();
      rec.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
      rec.witness = std::move(witness);
    } catch (const std::exception& e) {
      rec.status = CheckStatus::kFail;
      rec.witness = json{{"error", e.what()}};
    }
    if (rec.witness.is_object() && rec.witness.contains("inconclusive") && rec.witness["inconclusive"] == true) {
      rec.status = CheckStatus::kInconclusive;
    }
    if (!opt_.no_timing) {
      rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    report_.checks.push_back(std::move(rec));
  }

  const HyperovalContext& ctx() {
    if (!ctx_) ctx_ = build_context();
    return *ctx_;
  }
  const Plane& plane() { return *ctx().plane; }
  const CollineationGroup& G() {
    if (!G_) G_ = hyperoval_stabilizer(ctx());
    return *G_;
  }
  const IncidenceDesign& design() {
    if (!design_) design_ = build_ree_unital(ctx());
    return *design_;
  }
  const PermGroup& aut() {
    if (!aut_) aut_ = automorphism_group(design());
    return *aut_;
  }
  const std::vector<Perm>& aut_involutions() {
    if (!involutions_) involutions_ = involutions(aut());
    return *involutions_;
  }
  const std::vector<PermGroup>& sylow() {
    if (!sylow_) sylow_ = sylow2(aut());
    return *sylow_;
  }
  const std::vector<Pentagon>& pentagon_list() {
    if (!pentagons_) pentagons_ = classify_pentagons(ctx(), G());
    return *pentagons_;
  }
  const CollineationGroup& G0() {
    if (!G0_) G0_ = fundamental_group(plane());
    return *G0_;
  }
  // Aut(R(3)) acting on blocks, aligned with aut().elements().
  const PermGroup& aut_on_blocks() {
    if (!aut_blocks_) {
      std::vector<Perm> els;
      for (const auto& g : aut().elements()) {
        auto b = block_permutation(design(), g);
        if (!b) throw InternalError("automorphism does not permute blocks");
        els.push_back(std::move(*b));
      }
      aut_blocks_ = PermGroup::from_elements(design().num_blocks(), std::move(els));
    }
    return *aut_blocks_;
  }

  std::string write_certificate(const std::string& id, const json& cert) {
    if (opt_.certificate_dir.empty()) return "";
    const std::string name = id + ".cert.json";
    const auto path = std::filesystem::path(opt_.certificate_dir) / name;
    std::ofstream out(path);
    if (!out) throw Error("cannot write certificate " + path.string());
    out << cert.dump(2) << '\n';
    report_.certificates.push_back(name);
    return name;
  }

  SuiteReport& report_;
  const SuiteOptions& opt_;
  std::optional<HyperovalContext> ctx_;
  std::optional<CollineationGroup> G_;
  std::optional<CollineationGroup> G0_;
  std::optional<IncidenceDesign> design_;
  std::optional<PermGroup> aut_;
  std::optional<PermGroup> aut_blocks_;
  std::optional<std::vector<Perm>> involutions_;
  std::optional<std::vector<PermGroup>> sylow_;
  std::optional<std::vector<Pentagon>> pentagons_;
};

void Suite::census() {
  {
    const auto& c = ctx();
    std::map<std::string, std::size_t> line_classes;
    for (Plane::Index l = 0; l < plane().size(); ++l) ++line_classes[std::string(to_string(c.line_class[l]))];
    report_.sections["conic_census"] = {{"plane_order", plane().order()},
                                        {"field", plane().field().to_string()},
                                        {"conic_points", c.conic.size()},
                                        {"nucleus", plane().point(c.nucleus).to_string()},
                                        {"external_points", c.external_points.size()},
                                        {"external_lines", c.external_lines.size()},
                                        {"line_classes", line_classes}};
  }
  check("census.plane", "PG(2,8) has 73 points and 73 lines, 9 points per line and 9 lines per point", [&] {
    const auto [pts, lines] = enumerate(Field::gf8());
    const Plane& p = plane();
    bool regular = true;
    for (Plane::Index i = 0; i < p.size(); ++i) {
      regular = regular && p.points_on(i).size() == 9 && p.lines_through(i).size() == 9;
    }
    return Outcome{pts.size() == 73 && lines.size() == 73 && p.size() == 73 && regular,
                   {{"points", pts.size()}, {"lines", lines.size()}, {"regular", regular}}};
  });
  check("census.hyperoval",
        "the conic X^2+YZ=0 has 9 points; its 9 tangents meet at N=(1:0:0); every line meets K u {N} in 0 or 2 "
        "points",
        [&] {
          const auto& c = ctx();
          const Plane& p = plane();
          bool concurrent_at_n = true;
          for (auto t : c.tangents) concurrent_at_n = concurrent_at_n && p.incident(c.nucleus, t);
          bool even = true;
          for (Plane::Index l = 0; l < p.size(); ++l) {
            std::size_t n = 0;
            for (auto x : c.hyperoval) n += p.incident(x, l);
            even = even && (n == 0 || n == 2);
          }
          const std::string nucleus = p.point(c.nucleus).to_string();
          return Outcome{c.conic.size() == 9 && c.tangents.size() == 9 && concurrent_at_n && nucleus == "(1:0:0)" &&
                             c.hyperoval.size() == 10 && even,
                         {{"conic_points", c.conic.size()},
                          {"tangents", c.tangents.size()},
                          {"secants", c.secants.size()},
                          {"nucleus", nucleus},
                          {"hyperoval_points", c.hyperoval.size()},
                          {"lines_meet_in_0_or_2", even}}};
        });
  check("census.external", "63 external points, 28 external lines, each external point on exactly 4 external lines",
        [&] {
          const auto& c = ctx();
          std::set<std::size_t> degrees;
          for (auto x : c.external_points) {
            std::size_t n = 0;
            for (auto l : plane().lines_through(x)) n += c.is_external_line(l);
            degrees.insert(n);
          }
          return Outcome{c.external_points.size() == 63 && c.external_lines.size() == 28 && degrees == std::set<std::size_t>{4},
                         {{"external_points", c.external_points.size()},
                          {"external_lines", c.external_lines.size()},
                          {"external_lines_per_external_point", std::vector<std::size_t>(degrees.begin(), degrees.end())}}};
        });
  check("census.tangents-per-point", "every external point lies on exactly one tangent", [&] {
    const auto& c = ctx();
    std::set<std::size_t> counts;
    for (auto x : c.external_points) {
      std::size_t n = 0;
      for (auto t : c.tangents) n += plane().incident(x, t);
      counts.insert(n);
    }
    return Outcome{counts == std::set<std::size_t>{1}, {{"tangents_per_external_point", std::vector<std::size_t>(counts.begin(), counts.end())}}};
  });
  check("census.external-meets", "any two external lines meet in an external point (all 378 pairs)", [&] {
    const auto& c = ctx();
    std::size_t pairs = 0, external = 0;
    for (std::size_t i = 0; i < c.external_lines.size(); ++i) {
      for (std::size_t j = i + 1; j < c.external_lines.size(); ++j) {
        ++pairs;
        external += c.is_external_point(plane().meet(c.external_lines[i], c.external_lines[j]));
      }
    }
    return Outcome{pairs == 378 && external == 378, {{"pairs", pairs}, {"external", external}}};
  });
  check("census.trace", "Y=mX+bZ (m != 0) is external iff tr(b/m^2) = 1, and exactly 28 pairs (m,b) qualify", [&] {
    const auto& c = ctx();
    const Field f = Field::gf8();
    std::size_t agree = 0, trace_one = 0;
    for (const auto& m : f.elements()) {
      if (m.is_zero()) continue;
      for (const auto& b : f.elements()) {
        const bool by_trace = external_by_trace(m, b);
        trace_one += by_trace;
        agree += by_trace == c.is_external_line(plane().index_of(line_y_equals(m, b)));
      }
    }
    return Outcome{agree == 56 && trace_one == 28, {{"pairs_checked", 56}, {"agreeing", agree}, {"trace_one", trace_one}}};
  });
  check("census.design", "external lines and external points form a 2-(28,4,1) design with r = 9 and b = 63", [&] {
    const auto& d = design();
    const auto v = validate(d, 2, 4, 1);
    std::set<std::size_t> r;
    for (std::uint32_t x = 0; x < d.num_points(); ++x) r.insert(d.blocks_through(x).size());
    return Outcome{v.ok && d.num_points() == 28 && d.num_blocks() == 63 && r == std::set<std::size_t>{9},
                   {{"validation", v.message},
                    {"v", d.num_points()},
                    {"b", d.num_blocks()},
                    {"r", std::vector<std::size_t>(r.begin(), r.end())},
                    {"digest", d.digest()}}};
  });
  check("census.block-intersection",
        "two blocks meet iff the corresponding external points span an external line", [&] {
          const auto& d = design();
          const auto& c = ctx();
          std::size_t mismatches = 0, meeting = 0;
          for (std::uint32_t a = 0; a < d.num_blocks(); ++a) {
            for (std::uint32_t b = a + 1; b < d.num_blocks(); ++b) {
              bool meet = false;
              for (auto x : d.block(a)) meet = meet || d.contains(b, x);
              meeting += meet;
              mismatches += meet != c.is_external_line(plane().join(c.external_points[a], c.external_points[b]));
            }
          }
          return Outcome{mismatches == 0, {{"meeting_pairs", meeting}, {"mismatches", mismatches}}};
        });
}

void Suite::groups() {
  check("groups.hyperoval-stabilizer",
        "the collineations preserving the hyperoval form a group of order 1512, 504 of them linear", [&] {
          std::size_t linear = 0;
          for (const auto& g : G().collineations) linear += g.frob() == 0;
          return Outcome{G().order() == 1512 && linear == 504, {{"order", G().order()}, {"linear", linear}}};
        });
  check("groups.aut", "Aut(R(3)) has order 1512, is 2-transitive on points and is induced by the hyperoval stabilizer",
        [&] {
          const auto induced = restrict_action(G().on_lines, std::vector<std::uint32_t>(ctx().external_lines.begin(),
                                                                                        ctx().external_lines.end()));
          bool same = induced.order() == aut().order();
          for (const auto& g : induced.elements()) same = same && aut().contains(g);
          const bool two = is_2_transitive(aut());
          return Outcome{aut().order() == 1512 && two && same,
                         {{"order", aut().order()},
                          {"two_transitive", two},
                          {"generators", greedy_generators(aut()).size()},
                          {"equals_induced_action", same}}};
        });
  check("groups.involutions",
        "Aut(R(3)) has 63 involutions, all conjugate, and their fixed-point sets are exactly the 63 blocks", [&] {
          const auto& inv = aut_involutions();
          const auto cls = conjugacy_class(aut(), inv.front());
          const auto blocks = involution_blocks(design(), inv);
          const std::set<std::uint32_t> distinct(blocks.begin(), blocks.end());
          return Outcome{inv.size() == 63 && cls.size() == 63 && distinct.size() == 63,
                         {{"involutions", inv.size()}, {"class_size", cls.size()}, {"distinct_fixed_blocks", distinct.size()}}};
        });
  check("groups.sylow",
        "Aut(R(3)) has 9 Sylow 2-subgroups, each elementary abelian of order 8, partitioning the 63 involutions", [&] {
          const auto& syl = sylow();
          bool shape = syl.size() == 9;
          std::map<Perm, std::size_t> owner;
          for (const auto& s : syl) {
            shape = shape && s.order() == 8 && is_elementary_abelian_2(s);
            for (const auto& g : s.elements()) {
              if (!is_identity(g)) ++owner[g];
            }
          }
          bool partition = owner.size() == 63;
          for (const auto& [g, n] : owner) partition = partition && n == 1;
          return Outcome{shape && partition, {{"subgroups", syl.size()}, {"elementary_abelian_order_8", shape},
                                              {"involutions_covered_once", partition}}};
        });
  check("groups.commuting-ree3",
        "the commuting-involution graph of Aut(R(3)) has 9 components, each a 7-clique equal to a Sylow 2-subgroup "
        "minus 1, and they form a block system of the conjugation action",
        [&] {
          const auto& inv = aut_involutions();
          const auto graph = commuting_graph(inv);
          const auto comps = components(graph);
          bool cliques = comps.size() == 9;
          for (const auto& c : comps) cliques = cliques && c.size() == 7 && is_clique(graph, c);
          std::set<std::set<Perm>> from_graph, from_sylow;
          for (const auto& c : comps) {
            std::set<Perm> s;
            for (auto i : c) s.insert(inv[i]);
            from_graph.insert(s);
          }
          for (const auto& s : sylow()) {
            std::set<Perm> t;
            for (const auto& g : s.elements()) {
              if (!is_identity(g)) t.insert(g);
            }
            from_sylow.insert(t);
          }
          const auto action = conjugation_action(aut(), inv);
          const auto prim = primitivity(action);
          const bool blocks = is_block_system(action, comps);
          return Outcome{cliques && from_graph == from_sylow && !prim.primitive && blocks,
                         {{"vertices", inv.size()},
                          {"edges", graph.edge_count},
                          {"components", comps.size()},
                          {"component_sizes", std::vector<std::size_t>(comps.size(), comps.empty() ? 0 : comps[0].size())},
                          {"matches_sylow", from_graph == from_sylow},
                          {"conjugation_action_primitive", prim.primitive},
                          {"components_are_blocks", blocks}}};
        });
  check("groups.commuting-psl27",
        "PSL(2,27) has order 9828 and 351 involutions; it acts primitively on them and their commuting graph is connected",
        [&] {
          const auto psl = psl2(Field::standard(27));
          const auto inv = involutions(psl);
          const auto graph = commuting_graph(inv);
          const auto comps = components(graph);
          const auto prim = primitivity(conjugation_action(psl, inv));
          return Outcome{psl.order() == 9828 && inv.size() == 351 && comps.size() == 1 && prim.primitive,
                         {{"order", psl.order()},
                          {"involutions", inv.size()},
                          {"edges", graph.edge_count},
                          {"components", comps.size()},
                          {"conjugation_action_primitive", prim.primitive}}};
        });
  check("groups.g0",
        "<Gamma, Phi> is A4; Gamma is its Sylow 2-subgroup; the Gamma-orbit of C1 is {C1..C4}; Phi fixes C1 and "
        "cycles C2 -> C3 -> C4",
        [&] {
          const auto& g0 = G0();
          const auto fp = fundamental_points(Field::gf8());
          std::array<Plane::Index, 5> idx;
          for (int i = 0; i < 5; ++i) idx[i] = plane().index_of(fp[i]);
          std::vector<Perm> gamma{identity_perm(plane().size())};
          for (const auto& c : Field::gf8().elements()) {
            if (!c.is_zero() && trace(c).is_zero()) gamma.push_back(plane().point_permutation(Collineation::tau(c)));
          }
          const auto gamma_group = PermGroup::closure(plane().size(), gamma);
          const auto syl = sylow2(g0.on_points);
          bool gamma_is_sylow = syl.size() == 1 && syl[0].order() == 4;
          for (const auto& g : gamma_group.elements()) gamma_is_sylow = gamma_is_sylow && syl[0].contains(g);
          auto c_orbit = orbit(gamma_group, idx[1]);
          std::sort(c_orbit.begin(), c_orbit.end());
          std::vector<std::uint32_t> cs(idx.begin() + 1, idx.end());
          std::sort(cs.begin(), cs.end());
          const auto phi = plane().point_permutation(Collineation::frobenius(Field::gf8()));
          const bool phi_ok = phi[idx[1]] == idx[1] && phi[idx[2]] == idx[3] && phi[idx[3]] == idx[4] &&
                              phi[idx[4]] == idx[2] && phi[idx[0]] == idx[0];
          return Outcome{g0.order() == 12 && is_A4(g0.on_points) && gamma_is_sylow && c_orbit == cs && phi_ok,
                         {{"order", g0.order()},
                          {"is_A4", is_A4(g0.on_points)},
                          {"gamma_is_sylow_2", gamma_is_sylow},
                          {"gamma_orbit_of_C1", c_orbit.size()},
                          {"phi_action_ok", phi_ok}}};
        });
}

void Suite::pentagons() {
  check("pentagons.fundamental",
        "the fundamental pentagon is external, AC1: Y=X+Z and C1C2: Y=gX+Z are external, and its stabilizer in the "
        "hyperoval group is exactly <Gamma, Phi> of order 12",
        [&] {
          const Field f = Field::gf8();
          const auto fp = fundamental_pentagon(ctx(), G());
          const auto& p = plane();
          const bool external = is_external_pentagon(ctx(), fp.points);
          const auto ac1 = p.join(fp.apex, fp.c[0]);
          const auto c1c2 = p.join(fp.c[0], fp.c[1]);
          const bool lines = ac1 == p.index_of(line_y_equals(f.one(), f.one())) &&
                             c1c2 == p.index_of(line_y_equals(f.generator(), f.one())) &&
                             ctx().is_external_line(ac1) && ctx().is_external_line(c1c2);
          const auto stab = set_stabilizer(G().on_points, std::vector<std::uint32_t>(fp.points.begin(), fp.points.end()));
          bool same = stab.order() == G0().order();
          for (const auto& g : G0().on_points.elements()) same = same && stab.contains(g);
          return Outcome{external && lines && same && fp.a4_type,
                         {{"external", external},
                          {"AC1", p.line(ac1).to_string()},
                          {"C1C2", p.line(c1c2).to_string()},
                          {"stabilizer_order", stab.order()},
                          {"stabilizer_is_G0", same},
                          {"a4_type", fp.a4_type}}};
        });
  check("pentagons.census",
        "there are exactly 126 external pentagons, all of A4 type and in one orbit; each stabilizer fixes one vertex and "
        "is 2-transitive on the other four",
        [&] {
          const auto& ps = pentagon_list();
          std::size_t a4 = 0, transported = 0, shape = 0;
          for (const auto& p : ps) {
            a4 += p.a4_type && p.stabilizer_order == 12;
            transported += p.transport != kNoTransport;
            shape += p.fixes_apex_only && p.two_transitive_on_rest;
          }
          return Outcome{ps.size() == 126 && a4 == 126 && transported == 126 && shape == 126 &&
                             G().order() / G0().order() == 126,
                         {{"pentagons", ps.size()},
                          {"a4_type", a4},
                          {"in_orbit_of_fundamental", transported},
                          {"apex_fixed_and_2_transitive", shape},
                          {"group_index", G().order() / G0().order()}}};
        });
  check("pentagons.d-lines",
        "for the fundamental pentagon AC1^C2C4 = (g^6,g^2,1), AC2^C3C4 = (1,g^4,1), d1234: Y=g^6X+g^3Z meets Z=0 in "
        "(1,g^6,0), which no element of order 3 of <Gamma,Phi> fixes; tr(g^6)=1, no nontrivial element of Gamma fixes d1234, and "
        "<Gamma,Phi> permutes the 12 d-lines regularly",
        [&] {
          const Field f = Field::gf8();
          const auto g = f.generator();
          const auto& p = plane();
          const auto fp = fundamental_pentagon(ctx(), G());
          const auto fam = d_lines(p, fp);
          const std::size_t n = sequence_index({0, 1, 2, 3});
          const bool points = fam.first[n] == p.index_of(ProjPoint(g.pow(6), g.pow(2), f.one())) &&
                              fam.second[n] == p.index_of(ProjPoint(f.one(), g.pow(4), f.one()));
          const bool line = fam.lines[n] == p.index_of(line_y_equals(g.pow(6), g.pow(3)));
          const auto at_infinity = p.meet(fam.lines[n], p.index_of(ProjLine(f.zero(), f.zero(), f.one())));
          const bool infinity = at_infinity == p.index_of(ProjPoint(f.one(), g.pow(6), f.zero()));
          std::size_t order3_fixing = 0;
          for (const auto& perm : G0().on_points.elements()) {
            order3_fixing += perm_order(perm) == 3 && perm[at_infinity] == at_infinity;
          }
          std::size_t tau_fixing = 0;
          for (const auto& c : f.elements()) {
            if (c.is_zero() || !trace(c).is_zero()) continue;
            tau_fixing += p.line_permutation(Collineation::tau(c))[fam.lines[n]] == fam.lines[n];
          }
          const bool trace_one = !trace(g.pow(6)).is_zero();
          std::set<Plane::Index> family(fam.lines.begin(), fam.lines.end());
          std::set<Plane::Index> images;
          for (const auto& h : G0().on_lines.elements()) images.insert(h[fam.lines[n]]);
          const bool regular = images == family && family.size() == 12 && G0().order() == 12;
          return Outcome{points && line && infinity && order3_fixing == 0 && tau_fixing == 0 && trace_one && regular,
                         {{"AC1^C2C4", p.point(fam.first[n]).to_string()},
                          {"AC2^C3C4", p.point(fam.second[n]).to_string()},
                          {"d1234", p.line(fam.lines[n]).to_string()},
                          {"d1234_at_infinity", p.point(at_infinity).to_string()},
                          {"order_3_elements_fixing_it", order3_fixing},
                          {"gamma_elements_fixing_d1234", tau_fixing},
                          {"trace_g6_is_1", trace_one},
                          {"regular_on_d_lines", regular}}};
        });
  {
    json records = json::array();
    for (const auto& p : pentagon_list()) {
      json cs = json::array();
      for (auto x : p.c) cs.push_back(plane().point(x).to_string());
      records.push_back({{"apex", plane().point(p.apex).to_string()}, {"c", cs}, {"stabilizer_order", p.stabilizer_order}});
    }
    report_.sections["pentagons"] = records;
  }
  check("pentagons.claims",
        "for all 126 pentagons: the 12 d-lines are distinct and external, the Klein-coset quadruples are concurrent "
        "on the tangent through A, and AC4, d1234, d3241 are concurrent",
        [&] {
          std::size_t ok = 0;
          json first_failure;
          for (const auto& p : pentagon_list()) {
            const auto r = verify_pentagon_claims(ctx(), p);
            if (r.ok()) {
              ++ok;
            } else if (first_failure.is_null()) {
              first_failure = {{"apex", plane().point(p.apex).to_string()},
                               {"distinct", r.distinct.detail},
                               {"external", r.external.detail},
                               {"quadruples", r.quadruples.detail},
                               {"concurrency", r.concurrency.detail}};
            }
          }
          const auto fund = verify_pentagon_claims(ctx(), fundamental_pentagon(ctx(), G()));
          json w{{"passed", ok}, {"total", pentagon_list().size()}, {"fundamental_iv", fund.concurrency.detail}};
          if (!first_failure.is_null()) w["first_failure"] = first_failure;
          return Outcome{ok == 126, w};
        });
}

void Suite::soc() {
  check("soc.onan", "every O'Nan configuration of R(3) lies in a super O'Nan configuration", [&] {
    const auto onan = onan_configurations(design());
    const auto super = super_onan_configurations(design());
    std::size_t extended = 0;
    for (const auto& o : onan) {
      extended += std::any_of(super.begin(), super.end(), [&](const Configuration& s) {
        return std::includes(s.blocks.begin(), s.blocks.end(), o.blocks.begin(), o.blocks.end());
      });
    }
    return Outcome{!onan.empty() && extended == onan.size(), {{"onan_configurations", onan.size()}, {"extended", extended}}};
  });
  check("soc.census",
        "R(3) has exactly 126 super O'Nan configurations, in bijection with the external pentagons, forming one "
        "orbit; each stabilizer is A4, fixes one block and is 2-transitive on the other four",
        [&] {
          const auto super = super_onan_configurations(design());
          std::set<std::vector<std::uint32_t>> socs, duals;
          for (const auto& s : super) socs.insert(s.blocks);
          for (const auto& p : pentagon_list()) {
            std::vector<std::uint32_t> b;
            for (auto x : p.points) b.push_back(static_cast<std::uint32_t>(ctx().external_point_ordinal[x]));
            duals.insert(sorted_block_set(b));
          }
          const auto& on_blocks = aut_on_blocks();
          std::set<std::vector<std::uint32_t>> orbit_of_first;
          for (const auto& g : on_blocks.elements()) {
            std::vector<std::uint32_t> image;
            for (auto b : super.front().blocks) image.push_back(g[b]);
            orbit_of_first.insert(sorted_block_set(image));
          }
          std::size_t good = 0;
          for (const auto& p : pentagon_list()) {
            const auto labels = soc_labeling_from_pentagon(ctx(), p);
            std::vector<std::uint32_t> all{labels.a, labels.c[0], labels.c[1], labels.c[2], labels.c[3]};
            const auto stab = set_stabilizer(on_blocks, sorted_block_set(all));
            const auto five = restrict_action(stab, sorted_block_set(all));
            std::vector<std::uint32_t> fixed;
            const auto sorted = sorted_block_set(all);
            for (std::uint32_t i = 0; i < 5; ++i) {
              if (orbit(five, i).size() == 1) fixed.push_back(sorted[i]);
            }
            bool ok = is_A4(stab) && fixed.size() == 1 && fixed[0] == labels.a;
            if (ok) {
              ok = is_2_transitive(restrict_action(stab, sorted_block_set({labels.c[0], labels.c[1], labels.c[2], labels.c[3]})));
            }
            good += ok;
          }
          return Outcome{super.size() == 126 && socs == duals && orbit_of_first.size() == 126 && good == 126,
                         {{"configurations", super.size()},
                          {"dual_to_pentagons", socs == duals},
                          {"orbit_size", orbit_of_first.size()},
                          {"stabilizer_A4_fixing_a_two_transitive", good}}};
        });
  check("soc.d-points",
        "for all 126 super O'Nan configurations with labels carried over from the pentagons, the 12 D-points exist and "
        "are distinct, each Klein-coset quadruple is a block, and a^c4, D1234, D3241 share a block; the D-points are "
        "dual to the d-lines, and exactly 12 labelings of each configuration work",
        [&] {
          std::size_t ok = 0, dual = 0, labelings12 = 0;
          std::set<std::size_t> labeling_counts;
          json first_failure;
          for (const auto& p : pentagon_list()) {
            const auto labels = soc_labeling_from_pentagon(ctx(), p);
            const auto r = soc_d_points(design(), labels);
            if (r.ok()) {
              ++ok;
            } else if (first_failure.is_null()) {
              first_failure = {{"a", labels.a},
                               {"exists", r.exists.detail},
                               {"distinct", r.distinct.detail},
                               {"coset_blocks", r.coset_blocks.detail},
                               {"collinear", r.collinear.detail}};
            }
            const auto fam = d_lines(plane(), p);
            bool same = r.exists.ok;
            for (std::size_t n = 0; n < 12 && same; ++n) {
              same = ctx().external_lines[static_cast<std::size_t>(r.d[n])] == fam.lines[n];
            }
            dual += same;
            const auto count = count_valid_soc_labelings(
                design(), {labels.a, labels.c[0], labels.c[1], labels.c[2], labels.c[3]});
            labeling_counts.insert(count);
            labelings12 += count == 12;
          }
          json w{{"passed", ok},
                 {"dual_to_d_lines", dual},
                 {"valid_labelings_per_configuration", std::vector<std::size_t>(labeling_counts.begin(), labeling_counts.end())}};
          if (!first_failure.is_null()) w["first_failure"] = first_failure;
          return Outcome{ok == 126 && dual == 126 && labelings12 == 126, w};
        });
}

void Suite::thm1() {
  for (const auto& c : verify_thm1_identities()) {
    check("thm1." + c.id, c.claim, [c] { return Outcome{c.ok, {{"residual", c.residual}}}; });
  }
  check("thm1.printed-entry",
        "with the third coordinate of D1234 written v^2-uv the first factorization holds only mod 2; the frame "
        "construction gives uv-v^2",
        [] {
          const auto c = printed_entry_check();
          return Outcome{c.ok, {{"residual_over_z", c.residual}}};
        });
  check("thm1.gf8-roots", "v(v+1)(v^3+v^2+1) has exactly 5 roots in GF(8): 0, 1 and the roots of v^3+v^2+1", [] {
    const Field f = Field::gf8();
    const auto v = MultiPoly::v();
    const auto poly = v * (v + MultiPoly::constant(1)) * (v.pow(3) + v * v + MultiPoly::constant(1));
    std::vector<std::string> roots;
    for (const auto& x : f.elements()) {
      if (eval(poly, f.zero(), x).is_zero()) roots.push_back(x.to_string());
    }
    return Outcome{roots.size() == 5, {{"roots", roots}}};
  });
  check("thm1.gf8-solution",
        "at u = v+1 with v a root of v^3+v^2+1 in GF(8), the frame-built D1234, D2143, D3412, D4321 are collinear and "
        "a^c4, D1234, D3241 are collinear",
        [] {
          const Field f = Field::gf8();
          const auto derived = derive_frame_points();
          auto find = [&](const std::string& name) -> const PolyVector3& {
            for (const auto& d : derived) {
              if (d.name == name) return d.derived;
            }
            throw InternalError("missing derived point " + name);
          };
          const auto v = MultiPoly::v();
          const auto cubic = v.pow(3) + v * v + MultiPoly::constant(1);
          std::size_t solutions = 0, ok = 0;
          for (const auto& v0 : f.elements()) {
            if (!eval(cubic, f.zero(), v0).is_zero()) continue;
            ++solutions;
            const auto u0 = v0 + f.one();
            auto point = [&](const PolyVector3& pv) {
              return ProjPoint(eval(pv[0], u0, v0), eval(pv[1], u0, v0), eval(pv[2], u0, v0));
            };
            const std::array<ProjPoint, 4> quad{point(find("D1234")), point(find("D2143")), point(find("D3412")),
                                                point(find("D4321"))};
            const std::array<ProjPoint, 3> triple{point(find("a^c4")), point(find("D1234")), point(find("D3241"))};
            ok += collinear(quad) && collinear(triple);
          }
          return Outcome{solutions == 3 && ok == 3, {{"solutions", solutions}, {"collinear", ok}}};
        });
}

void Suite::embed_pg8() {
  const auto dual = [&] { return dual_embedding(ctx()); };
  check("embed.dual",
        "the dual embedding of R(3) into PG(2,8) is injective and preserves incidence in both directions; every block "
        "line carries exactly 4 image points",
        [&] {
          const auto e = dual();
          const auto r = verify(design(), e);
          std::set<std::size_t> per_line;
          std::set<Plane::Index> image(e.point_map.begin(), e.point_map.end());
          for (auto l : e.block_map) {
            std::size_t n = 0;
            for (auto x : plane().points_on(l)) n += image.count(x);
            per_line.insert(n);
          }
          return Outcome{r.ok && per_line == std::set<std::size_t>{4},
                         {{"verify", r.message}, {"image_points_per_block_line", std::vector<std::size_t>(per_line.begin(), per_line.end())}}};
        });
  check("embed.lift", "the dual embedding lifted to PG(2,64) still verifies and lies in the order-8 subplane", [&] {
    const auto big = std::make_shared<const Plane>(Field::standard(64));
    const auto e = lift(dual(), big);
    const auto r = verify(design(), e);
    const bool inside = inside_subplane(e, Field::gf8());
    const auto same = lift(dual(), ctx().plane);
    const bool identity = same.point_map == dual().point_map && same.block_map == dual().block_map;
    return Outcome{r.ok && inside && identity,
                   {{"target", big->field().to_string()}, {"verify", r.message}, {"inside_subplane", inside},
                    {"degree_1_lift_is_identity", identity}}};
  });
  check("embed.admissible",
        "every generator of Aut(R(3)) is induced through the dual embedding by a collineation, and each such "
        "collineation preserves the dual hyperoval",
        [&] {
          const auto gens = greedy_generators(aut());
          const auto r = admissibility(design(), dual(), gens);
          const auto lines = dual_hyperoval(ctx());
          std::size_t preserving = 0;
          json betas = json::array();
          for (const auto& b : r.betas) {
            preserving += preserves_lines(plane(), b, lines);
            betas.push_back(b.to_string());
          }
          return Outcome{r.ok && preserving == gens.size(),
                         {{"generators", gens.size()}, {"message", r.message}, {"preserve_dual_hyperoval", preserving},
                          {"betas", betas}}};
        });
  check("embed.corollary",
        "for each of the 9 Sylow 2-subgroups, the 7 lines assigned to its involutions are concurrent", [&] {
          const auto e = dual();
          std::size_t concurrent_count = 0;
          for (const auto& s : sylow()) {
            std::vector<Perm> inv;
            for (const auto& g : s.elements()) {
              if (!is_identity(g)) inv.push_back(g);
            }
            std::vector<ProjLine> lines;
            for (auto b : involution_blocks(design(), inv)) lines.push_back(plane().line(e.block_map[b]));
            concurrent_count += lines.size() == 7 && concurrent(lines);
          }
          return Outcome{concurrent_count == 9, {{"subgroups", sylow().size()}, {"concurrent", concurrent_count}}};
        });
  check("embed.conics", "PG(2,8) has 32704 conics: the PGL(3,8)-orbit of X^2+YZ=0 has size 16482816/504", [&] {
    const std::size_t orbit_size = conic_orbit_size(plane());
    std::size_t linear = 0;
    for (const auto& g : G().collineations) linear += g.frob() == 0;
    const std::uint64_t q = 8;
    const std::uint64_t pgl = q * q * q * (q * q * q - 1) * (q * q - 1);
    return Outcome{orbit_size == 32704 && linear == 504 && pgl == 16482816 && pgl / linear == orbit_size,
                   {{"orbit", orbit_size}, {"pgl_order", pgl}, {"linear_stabilizer", linear}}};
  });
  check("embed.search-pg8",
        "an exhaustive search finds embeddings of R(3) into PG(2,8) forming exactly one orbit under collineations "
        "and automorphisms, with verified transporters, and the dual embedding is in that orbit",
        [&] {
          SearchConfig cfg;
          cfg.level = 2;
          cfg.node_budget = opt_.budget;
          cfg.threads = opt_.threads;
          const auto r = search(design(), ctx().plane, cfg);
          const auto cert_name = write_certificate("embed-pg8", certificate_json(design(), plane(), cfg, r));
          json w{{"status", r.status == SearchStatus::kComplete ? "complete" : "inconclusive"},
                 {"level", r.level},
                 {"nodes", r.nodes},
                 {"trace_hash", hex64(r.trace_hash)},
                 {"embeddings", r.embeddings.size()}};
          if (!cert_name.empty()) w["certificate"] = cert_name;
          if (r.status != SearchStatus::kComplete) {
            w["inconclusive"] = true;
            return Outcome{false, w};
          }
          const auto pgl = classify(design(), r.embeddings, aut(), false);
          const auto pgaml = classify(design(), r.embeddings, aut(), true);
          std::vector<Embedding> with_dual{dual()};
          for (const auto& e : r.embeddings) with_dual.push_back(e);
          const auto joint = classify(design(), with_dual, aut(), true);
          w["orbits_pgl_x_aut"] = pgl.orbit_count;
          w["orbits_pgammal_x_aut"] = pgaml.orbit_count;
          w["transporters"] = pgaml.transporters.size();
          w["dual_in_orbit"] = joint.orbit_count == 1;
          return Outcome{!r.embeddings.empty() && pgaml.orbit_count == 1 && joint.orbit_count == 1 &&
                             pgaml.transporters.size() + 1 == r.embeddings.size(),
                         w};
        });
}

void Suite::embed_search(std::uint32_t q, const std::string& id) {
  check("embed.search-pg" + std::to_string(q),
        "an exhaustive search shows R(3) has no embedding into PG(2," + std::to_string(q) + ")", [&] {
          SearchConfig cfg;
          cfg.level = 2;
          cfg.node_budget = opt_.budget;
          cfg.threads = opt_.threads;
          const auto target = std::make_shared<const Plane>(Field::standard(q));
          const auto r = search(design(), target, cfg);
          const auto cert_name = write_certificate(id, certificate_json(design(), *target, cfg, r));
          json w{{"status", r.status == SearchStatus::kComplete ? "complete" : "inconclusive"},
                 {"level", r.level},
                 {"nodes", r.nodes},
                 {"node_budget", cfg.node_budget},
                 {"depth_profile", r.depth_profile},
                 {"trace_hash", hex64(r.trace_hash)},
                 {"embeddings", r.embeddings.size()}};
          if (!cert_name.empty()) w["certificate"] = cert_name;
          if (r.status != SearchStatus::kComplete) {
            w["inconclusive"] = true;
            return Outcome{false, w};
          }
          return Outcome{r.embeddings.empty(), w};
        });
}

}  // namespace

SuiteReport run_suite(const std::string& selector, const SuiteOptions& options) {
  const auto& known = selectors();
  if (std::find(known.begin(), known.end(), selector) == known.end()) {
    throw InvalidArgument("unknown selector '" + selector + "'");
  }
  if (is_long_selector(selector) && !options.include_long) {
    throw InvalidArgument("selector '" + selector + "' is long-running; pass --include-long");
  }
  if (options.budget == 0) throw InvalidArgument("budget must be positive");
  SuiteReport report;
  report.selector = selector;
  report.options = options;
  Suite suite(report);
  const bool all = selector == "all";
  if (all || selector == "census") suite.census();
  if (all || selector == "groups") suite.groups();
  if (all || selector == "pentagons") suite.pentagons();
  if (all || selector == "soc") suite.soc();
  if (all || selector == "thm1") suite.thm1();
  if (all || selector == "embed-pg8") suite.embed_pg8();
  if (all || selector == "embed-pg9") suite.embed_search(9, "embed-pg9");
  if ((all && options.include_long) || selector == "embed-pg16") suite.embed_search(16, "embed-pg16");
  report.overall = overall_status(report.checks);
  return report;
}

nlohmann::json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"claim", c.claim},
                      {"status", to_string(c.status)},
                      {"optional", c.optional},
                      {"wall_seconds", c.wall_seconds},
                      {"witness", c.witness}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"tool", "ree"},
          {"version", version()},
          {"selector", r.selector},
          {"options", {{"include_long", r.options.include_long}, {"budget", r.options.budget}, {"no_timing", r.options.no_timing}}},
          {"checks", checks},
          {"certificates", r.certificates},
          {"sections", r.sections},
          {"overall", to_string(r.overall)}};
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    std::string status = to_string(c.status);
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    os << status << "  " << c.id << "  " << c.claim;
    if (!r.options.no_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  (%.3fs)", c.wall_seconds);
      os << buf;
    }
    os << '\n';
  }
  os << "overall: " << to_string(r.overall) << '\n';
  return os.str();
}

void write_report(const SuiteReport& r, const std::string& format, const std::string& path) {
  std::string body;
  if (format == "json") {
    body = to_json(r).dump(2) + "\n";
  } else if (format == "text") {
    body = to_text(r);
  } else {
    throw InvalidArgument("unknown report format '" + format + "'");
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open report file " + path);
  out << body;
  if (!out) throw Error("failed writing report file " + path);
}

}  // namespace ree
