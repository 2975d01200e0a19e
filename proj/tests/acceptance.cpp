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

// One pass/fail line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ree/report.hpp"

namespace {

using ree::CheckRecord;
using ree::CheckStatus;

struct Run {
  std::map<std::string, CheckRecord> checks;
  double seconds = 0;
};

Run run(const std::string& selector) {
  ree::SuiteOptions o;
  o.budget = ree::default_budget();
  const auto start = std::chrono::steady_clock::now();
  const auto report = ree::run_suite(selector, o);
  Run r;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& c : report.checks) r.checks.emplace(c.id, c);
  return r;
}

struct Verdict {
  bool ok = true;
  std::string note;
};

Verdict require(const Run& r, const std::vector<std::string>& ids, double limit_seconds) {
  Verdict v;
  for (const auto& id : ids) {
    const auto it = r.checks.find(id);
    if (it == r.checks.end()) {
      v.ok = false;
      v.note += " missing " + id + ";";
    } else if (it->second.status != CheckStatus::kPass) {
      v.ok = false;
      v.note += " " + id + " " + ree::to_string(it->second.status) + " " + it->second.witness.dump() + ";";
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, " %.2fs (limit %.0fs)", r.seconds, limit_seconds);
  v.note += buf;
  if (r.seconds > limit_seconds) {
    v.ok = false;
    v.note += " over time limit";
  }
  return v;
}

nlohmann::json without_timing(nlohmann::json j) {
  for (auto& c : j["checks"]) c.erase("wall_seconds");
  return j;
}

}  // namespace

int main() {
  const Run census = run("census");
  const Run groups = run("groups");
  const Run pentagons = run("pentagons");
  const Run soc = run("soc");
  const Run thm1 = run("thm1");
  const Run pg8 = run("embed-pg8");
  const Run pg9 = run("embed-pg9");

  Run pent_soc;
  pent_soc.seconds = pentagons.seconds + soc.seconds;
  pent_soc.checks = pentagons.checks;
  pent_soc.checks.insert(soc.checks.begin(), soc.checks.end());

  std::vector<std::string> thm1_ids;
  for (const auto& [id, c] : thm1.checks) thm1_ids.push_back(id);

  std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"census", [&] { return require(census, {"census.plane", "census.hyperoval", "census.external"}, 1); }},
      {"design", [&] { return require(census, {"census.design", "census.block-intersection"}, 1); }},
      {"automorphisms", [&] { return require(groups, {"groups.aut", "groups.involutions", "groups.sylow"}, 30); }},
      {"pentagons and super O'Nan configurations",
       [&] { return require(pent_soc, {"pentagons.census", "soc.census", "soc.onan"}, 120); }},
      {"pentagon and configuration claims", [&] { return require(pent_soc, {"pentagons.claims", "soc.d-points"}, 120); }},
      {"determinant identities", [&] { return require(thm1, thm1_ids, 1); }},
      {"embedding and admissibility",
       [&] { return require(pg8, {"embed.dual", "embed.lift", "embed.admissible", "embed.corollary"}, 60); }},
      {"uniqueness in PG(2,8)", [&] { return require(pg8, {"embed.search-pg8"}, 1800); }},
      {"nonexistence in PG(2,9)", [&] { return require(pg9, {"embed.search-pg9"}, 6 * 3600); }},
      {"commuting-involution graphs",
       [&] { return require(groups, {"groups.commuting-ree3", "groups.commuting-psl27"}, 60); }},
      {"determinism",
       [&] {
         ree::SuiteOptions o;
         const auto a = without_timing(ree::to_json(ree::run_suite("all", o))).dump();
         const auto b = without_timing(ree::to_json(ree::run_suite("all", o))).dump();
         Verdict v;
         v.ok = a == b;
         v.note = v.ok ? " two runs of 'all' agree byte for byte apart from timing" : " reports differ";
         return v;
       }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string(" error: ") + e.what();
    }
    if (!v.ok) ++failed;
    std::printf("criterion %zu: %s  %s:%s\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                v.note.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
