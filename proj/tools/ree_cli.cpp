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

// Command-line front end: ree <verb> <subverb> [options].
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 inconclusive.

#include <CLI11.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "ree/conic.hpp"
#include "ree/design.hpp"
#include "ree/embed.hpp"
#include "ree/error.hpp"
#include "ree/groups.hpp"
#include "ree/pentagons.hpp"
#include "ree/report.hpp"
#include "ree/symbolic.hpp"

namespace {

using namespace ree;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

IncidenceDesign load_design(const std::string& path) {
  if (path.empty()) return build_ree_unital(build_context());
  return IncidenceDesign::read_file(path);
}

Field parse_plane(const std::string& text) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return Field::standard(static_cast<std::uint32_t>(std::stoul(text)));
  }
  return Field::parse(text);
}

void emit(const std::string& body, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file " + path);
  out << body;
}

int cmd_design_dump(const std::string& design, const std::string& out) {
  emit(load_design(design).to_text(), out);
  return kExitPass;
}

int cmd_design_validate(const std::string& design, std::uint32_t t, std::uint32_t k, std::uint32_t lambda) {
  const auto d = load_design(design);
  const auto r = validate(d, t, k, lambda);
  std::cout << (r.ok ? "pass" : "fail") << ": " << r.message << '\n';
  std::cout << "v=" << d.num_points() << " b=" << d.num_blocks() << " digest=" << d.digest() << '\n';
  return r.ok ? kExitPass : kExitFail;
}

int cmd_group(const std::string& what, const std::string& design, bool with_components) {
  const auto aut = automorphism_group(load_design(design));
  if (what == "order") {
    std::cout << aut.order() << '\n';
  } else if (what == "involutions") {
    const auto inv = involutions(aut);
    std::cout << inv.size() << '\n';
    for (const auto& g : inv) std::cout << to_cycles(g) << '\n';
  } else if (what == "commuting-graph") {
    const auto inv = involutions(aut);
    const auto graph = commuting_graph(inv);
    std::cout << "vertices " << inv.size() << " edges " << graph.edge_count << '\n';
    if (with_components) {
      const auto comps = components(graph);
      std::cout << "components " << comps.size() << '\n';
      for (const auto& c : comps) {
        std::cout << c.size() << (is_clique(graph, c) ? " clique:" : ":");
        for (auto v : c) std::cout << ' ' << v;
        std::cout << '\n';
      }
    }
  } else {
    const auto gens = greedy_generators(aut);
    std::cout << "degree " << aut.degree() << '\n';
    std::cout << "order " << aut.order() << '\n';
    std::cout << "generators " << gens.size() << '\n';
    for (const auto& g : gens) std::cout << to_cycles(g) << '\n';
  }
  return kExitPass;
}

int cmd_pentagons_enumerate(bool report) {
  const auto ctx = build_context();
  const auto G = hyperoval_stabilizer(ctx);
  const auto ps = classify_pentagons(ctx, G);
  std::size_t a4 = 0;
  for (const auto& p : ps) a4 += p.a4_type;
  if (!report) {
    std::cout << "pentagons " << ps.size() << " a4_type " << a4 << '\n';
    return kExitPass;
  }
  nlohmann::json records = nlohmann::json::array();
  for (const auto& p : ps) {
    nlohmann::json cs = nlohmann::json::array();
    for (auto x : p.c) cs.push_back(ctx.plane->point(x).to_string());
    records.push_back({{"apex", ctx.plane->point(p.apex).to_string()},
                       {"c", cs},
                       {"stabilizer_order", p.stabilizer_order},
                       {"a4_type", p.a4_type},
                       {"fixes_apex_only", p.fixes_apex_only},
                       {"two_transitive_on_rest", p.two_transitive_on_rest}});
  }
  std::cout << nlohmann::json{{"count", ps.size()}, {"pentagons", records}}.dump(2) << '\n';
  return kExitPass;
}

int cmd_pentagons_verify(bool all) {
  const auto ctx = build_context();
  const auto G = hyperoval_stabilizer(ctx);
  std::vector<Pentagon> ps;
  if (all) {
    ps = classify_pentagons(ctx, G);
  } else {
    ps.push_back(fundamental_pentagon(ctx, G));
  }
  std::size_t ok = 0;
  for (const auto& p : ps) {
    const auto r = verify_pentagon_claims(ctx, p);
    if (r.ok()) {
      ++ok;
      continue;
    }
    std::cout << "fail apex " << ctx.plane->point(p.apex).to_string() << ": " << r.distinct.detail << "; "
              << r.external.detail << "; " << r.quadruples.detail << "; " << r.concurrency.detail << '\n';
  }
  std::cout << ok << "/" << ps.size() << " pentagons pass\n";
  return ok == ps.size() ? kExitPass : kExitFail;
}

int cmd_embed_search(const std::string& design, const std::string& plane_text, std::uint64_t budget,
                     const std::string& cert, int level, unsigned threads) {
  const auto d = load_design(design);
  const auto plane = std::make_shared<const Plane>(parse_plane(plane_text));
  SearchConfig cfg;
  cfg.level = level;
  cfg.node_budget = budget;
  cfg.threads = threads;
  const auto r = search(d, plane, cfg);
  if (!cert.empty()) emit(certificate_json(d, *plane, cfg, r).dump(2) + "\n", cert);
  const bool complete = r.status == SearchStatus::kComplete;
  std::cout << "plane " << plane->field().to_string() << " level " << r.level << '\n';
  std::cout << "status " << (complete ? "complete" : "inconclusive") << " nodes " << r.nodes << " embeddings "
            << r.embeddings.size() << '\n';
  return complete ? kExitPass : kExitInconclusive;
}

int cmd_symbolic_verify() {
  bool ok = true;
  for (const auto& c : verify_thm1_identities()) {
    std::cout << (c.ok ? "pass " : "FAIL ") << c.id << "  residual " << c.residual << '\n';
    ok = ok && c.ok;
  }
  const auto printed = printed_entry_check();
  std::cout << (printed.ok ? "pass " : "FAIL ") << printed.id << "  residual over Z " << printed.residual << '\n';
  return ok && printed.ok ? kExitPass : kExitFail;
}

int cmd_suite(const std::string& selector, const std::string& format, const std::string& out, bool include_long,
              std::optional<std::uint64_t> budget, bool no_timing, unsigned threads, const std::string& cert_dir) {
  SuiteOptions opt;
  opt.include_long = include_long;
  opt.budget = budget.value_or(default_budget());
  opt.no_timing = no_timing;
  opt.threads = threads;
  opt.certificate_dir = cert_dir;
  if (opt.certificate_dir.empty() && !out.empty() && out != "-") {
    const auto parent = std::filesystem::absolute(out).parent_path();
    opt.certificate_dir = parent.string();
  }
  const auto r = run_suite(selector, opt);
  if (out.empty() || out == "-") {
    std::cout << (format == "json" ? to_json(r).dump(2) + "\n" : to_text(r));
  } else {
    write_report(r, format, out);
    std::cerr << to_text(r);
  }
  return exit_code(r.overall);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ree unital workbench"};
  app.set_version_flag("--version", ree::version());
  app.require_subcommand(1);

  std::string design_path, out_path;

  auto* design = app.add_subcommand("design", "Design interchange and validation");
  design->require_subcommand(1);
  auto* dump = design->add_subcommand("dump", "Print a design (default R(3)) in interchange format");
  dump->add_option("--design", design_path, "Design file; default is the built-in R(3)");
  dump->add_option("--out", out_path, "Output file");
  auto* validate_cmd = design->add_subcommand("validate", "Check the t-(v,k,lambda) conditions");
  std::uint32_t t = 2, k = 4, lambda = 1;
  validate_cmd->add_option("--design", design_path, "Design file; default is the built-in R(3)");
  validate_cmd->add_option("-t", t, "Strength")->check(CLI::Range(1, 3));
  validate_cmd->add_option("-k", k, "Block size")->check(CLI::PositiveNumber);
  validate_cmd->add_option("--lambda", lambda, "Index")->check(CLI::PositiveNumber);

  auto* group = app.add_subcommand("group", "Automorphism group of a design");
  group->require_subcommand(1);
  bool with_components = false;
  std::string group_verb;
  for (const char* name : {"order", "involutions", "commuting-graph", "dump"}) {
    auto* sub = group->add_subcommand(name, std::string("Group ") + name);
    sub->add_option("--design", design_path, "Design file; default is the built-in R(3)");
    if (std::string(name) == "commuting-graph") sub->add_flag("--components", with_components, "List components");
    sub->callback([&group_verb, name] { group_verb = name; });
  }

  auto* pent = app.add_subcommand("pentagons", "External pentagons of the hyperoval in PG(2,8)");
  pent->require_subcommand(1);
  bool pent_report = false, pent_all = false;
  auto* enumerate_cmd = pent->add_subcommand("enumerate", "Enumerate and classify external pentagons");
  enumerate_cmd->add_flag("--report", pent_report, "Print JSON records");
  auto* verify_cmd = pent->add_subcommand("verify-prop", "Verify the d-line claims");
  verify_cmd->add_flag("--all", pent_all, "All 126 pentagons instead of the fundamental one");

  auto* embed = app.add_subcommand("embed", "Embedding search");
  embed->require_subcommand(1);
  auto* search_cmd = embed->add_subcommand("search", "Exhaustive symmetry-reduced embedding search");
  std::string plane_text, cert_path;
  std::uint64_t budget = ree::default_budget();
  int level = 2;
  unsigned threads = 1;
  search_cmd->add_option("--design", design_path, "Design file; default is the built-in R(3)");
  search_cmd->add_option("--plane", plane_text, "Plane order q or field GF(p^e; c0,...)")->required();
  search_cmd->add_option("--budget", budget, "Node budget")->check(CLI::PositiveNumber);
  search_cmd->add_option("--cert", cert_path, "Certificate output file");
  search_cmd->add_option("--level", level, "Symmetry-breaking level")->check(CLI::Range(0, 2));
  search_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  auto* symbolic = app.add_subcommand("symbolic", "Polynomial identities");
  symbolic->require_subcommand(1);
  symbolic->add_subcommand("verify-thm1", "Verify the determinant identities");

  auto* suite = app.add_subcommand("suite", "Run a check suite and emit a report");
  std::string selector, format = "text", cert_dir;
  std::optional<std::uint64_t> suite_budget;
  bool include_long = false, no_timing = false;
  unsigned suite_threads = 1;
  suite->add_option("selector", selector, "all|census|groups|pentagons|soc|thm1|embed-pg8|embed-pg9|embed-pg16")
      ->required();
  suite->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  suite->add_option("--out", out_path, "Report file; certificates go beside it");
  suite->add_option("--cert-dir", cert_dir, "Certificate directory");
  suite->add_flag("--include-long", include_long, "Include long-running searches");
  suite->add_option("--budget", suite_budget, "Search node budget")->check(CLI::PositiveNumber);
  suite->add_flag("--no-timing", no_timing, "Zero all wall-time fields");
  suite->add_option("--threads", suite_threads, "Search worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (design->parsed()) {
      if (dump->parsed()) return cmd_design_dump(design_path, out_path);
      return cmd_design_validate(design_path, t, k, lambda);
    }
    if (group->parsed()) return cmd_group(group_verb, design_path, with_components);
    if (pent->parsed()) {
      if (enumerate_cmd->parsed()) return cmd_pentagons_enumerate(pent_report);
      return cmd_pentagons_verify(pent_all);
    }
    if (embed->parsed()) return cmd_embed_search(design_path, plane_text, budget, cert_path, level, threads);
    if (symbolic->parsed()) return cmd_symbolic_verify();
    return cmd_suite(selector, format, out_path, include_long, suite_budget, no_timing, suite_threads, cert_dir);
  } catch (const ree::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ree::ResourceError& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
