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

#ifndef REE_REPORT_HPP_
#define REE_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ree {

std::string version();

enum class CheckStatus { kPass, kFail, kInconclusive };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string claim;
  CheckStatus status = CheckStatus::kFail;
  nlohmann::json witness = nlohmann::json::object();
  double wall_seconds = 0;
  // Optional checks are reported but never decide the overall status.
  bool optional = false;
};

struct SuiteOptions {
  bool include_long = false;
  std::uint64_t budget = 1'000'000'000;
  bool no_timing = false;
  // Directory for search certificates; empty means none are written.
  std::string certificate_dir;
  unsigned threads = 1;
};

struct SuiteReport {
  std::string selector;
  SuiteOptions options;
  std::vector<CheckRecord> checks;
  // Certificate files written, relative to certificate_dir.
  std::vector<std::string> certificates;
  // Named data sections, e.g. "conic_census" and "pentagons".
  nlohmann::json sections = nlohmann::json::object();
  CheckStatus overall = CheckStatus::kPass;
};

// all, census, groups, pentagons, soc, thm1, embed-pg8, embed-pg9,
// embed-pg16. `all` runs the first six; with include_long it adds the
// PG(2,9) and PG(2,16) searches. embed-pg16 needs include_long.
const std::vector<std::string>& selectors();
bool is_long_selector(const std::string& selector);

// Throws InvalidArgument for an unknown selector or a long selector without
// include_long.
SuiteReport run_suite(const std::string& selector, const SuiteOptions& options);

// Fail if any required check fails, otherwise inconclusive if any required
// check is inconclusive, otherwise pass.
CheckStatus overall_status(const std::vector<CheckRecord>& checks);
// 0 pass, 1 fail, 3 inconclusive.
int exit_code(CheckStatus overall);

inline constexpr int kReportSchemaVersion = 1;
nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);
// Writes to `path`; throws Error naming the path on I/O failure.
void write_report(const SuiteReport& r, const std::string& format, const std::string& path);

// REE_SEARCH_BUDGET when set to a positive integer, else 1e9.
std::uint64_t default_budget();

}  // namespace ree

#endif  // REE_REPORT_HPP_
