/* Copyright 2026 The seqproof Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// seqproof: verify, run, extract, list options, serve.
//
// Exit status: 0 success, 1 a proof or program failed, 2 usage error.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqproof/axiom_store.hpp"
#include "seqproof/error.hpp"
#include "seqproof/machine.hpp"
#include "seqproof/proof.hpp"
#include "seqproof/service.hpp"
#include "seqproof/snapshot.hpp"

namespace {

using nlohmann::json;
using namespace seqproof;

constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string axioms = SEQPROOF_DEFAULT_AXIOMS;
  std::int64_t max_int = 2147483647;
  bool json = false;
  MachineConfig config() const {
    MachineConfig cfg;
    cfg.max_int = max_int;
    return cfg;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

bool contains_theorem(const AxiomStore& store, const ProgramList& premise,
                      const ProgramList& conclusion) {
  for (const StoreEntry& e : store.entries()) {
    if (!e.schema && e.premise == premise && e.conclusion == conclusion) return true;
  }
  return false;
}

int cmd_verify(const Options& opt, const std::vector<std::string>& files) {
  for (const std::string& f : files) read_file(f);  // usage error before any output
  AxiomStore store = load_store(opt.axioms);
  store.set_source_path(std::nullopt);  // theorems proved here stay in memory
  const MachineConfig cfg = opt.config();
  bool all = true;
  json reports = json::array();
  for (const std::string& file : files) {
    ParsedListing listing;
    ReplayReport report;
    try {
      listing = parse_listing(read_file(file), cfg);
      report = replay(listing, store, cfg);
    } catch (const Error& e) {
      report.error = e.what();
    }
    std::string theorem;
    bool header_ok = true;
    if (report.passed() && report.state->derived_count() > 0) {
      ExtractionResult ex = extract_theorem(*report.state);
      theorem = ex.theorem_text();
      header_ok = !listing.theorem || *listing.theorem == theorem;
      ProgramList conclusion({ex.conclusion});
      if (header_ok && !contains_theorem(store, ex.premise, conclusion)) {
        store.add_theorem(ex.premise, conclusion);
      }
    }
    const bool ok = report.passed() && header_ok;
    all = all && ok;
    if (opt.json) {
      json r = to_json(report);
      r["file"] = file;
      r["passed"] = ok;
      if (!theorem.empty()) r["theorem"] = theorem;
      if (!header_ok) r["error"] = "theorem header does not match the extracted theorem";
      reports.push_back(std::move(r));
      continue;
    }
    std::cout << file << "\n";
    for (const LineVerdict& v : report.verdicts) {
      std::cout << "  line " << v.line << (v.ok ? ": ok" : ": FAIL " + v.detail) << "\n";
    }
    if (!report.error.empty()) std::cout << "  error: " << report.error << "\n";
    if (!theorem.empty()) std::cout << "  theorem " << theorem << "\n";
    if (!header_ok) std::cout << "  error: header " << *listing.theorem << " differs\n";
    std::cout << (ok ? "PASS " : "FAIL ") << file << "\n";
  }
  if (opt.json) std::cout << json{{"passed", all}, {"files", reports}}.dump(2) << "\n";
  return all ? 0 : kFailed;
}

Environment parse_bindings(const std::vector<std::string>& bindings, const MachineConfig& cfg) {
  Environment env;
  for (const std::string& b : bindings) {
    const std::size_t eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("binding '" + b + "' is not name=value");
    const std::string name = b.substr(0, eq);
    const std::string value = b.substr(eq + 1);
    if (!is_identifier_text(name)) throw UsageError("'" + name + "' is not an identifier");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw UsageError("'" + value + "' is not an integer");
    }
    try {
      if (!try_bind(env, name, MachineInt(v, cfg))) throw UsageError(name + " is bound twice");
    } catch (const BoundError& e) {
      throw UsageError(name + ": " + e.what());
    }
  }
  return env;
}

int cmd_run(const Options& opt, const std::string& file, const std::string& expr,
            const std::string& scenario, const std::vector<std::string>& bindings) {
  const MachineConfig cfg = opt.config();
  if (!scenario.empty()) {
    auto s = parse_closure_scenario(scenario);
    if (!s) throw UsageError("unknown scenario '" + scenario + "'");
    ClosureReport report = falsify_closure(*s, cfg);
    std::cout << report.to_string();
    return report.reproduced() ? 0 : kFailed;
  }
  if (file.empty() == expr.empty()) throw UsageError("give exactly one of FILE or --expr");
  const ProgramList p = parse_program(expr.empty() ? read_file(file) : expr, cfg);
  const ExecResult r = run_program(p, parse_bindings(bindings, cfg), cfg);
  if (const auto* err = std::get_if<ExecError>(&r)) {
    if (opt.json) {
      std::cout << json{{"error", {{"kind", to_string(err->kind)},
                                   {"statement", err->statement},
                                   {"detail", err->detail}}}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "error: " << err->message() << "\n";
    }
    return kFailed;
  }
  const Environment& env = std::get<Environment>(r);
  json outputs = json::object();
  for (const std::string& y : derive_io(p).outputs) {
    if (opt.json) {
      outputs[y] = env.at(y).value();
    } else {
      std::cout << y << "=" << env.at(y).value() << "\n";
    }
  }
  if (opt.json) std::cout << json{{"outputs", outputs}}.dump(2) << "\n";
  return 0;
}

ReplayReport replay_file(const Options& opt, const std::string& file, const AxiomStore& store) {
  const std::string text = read_file(file);
  ReplayReport report = replay(text, store, opt.config());
  if (!report.passed()) {
    std::cerr << report.to_string();
    const LineVerdict* bad = report.first_failure();
    throw Error(file + ": replay failed" +
                (bad ? " at line " + std::to_string(bad->line) : std::string()));
  }
  return report;
}

int cmd_extract(const Options& opt, const std::string& file, bool append) {
  read_file(file);
  AxiomStore store = load_store(opt.axioms);
  const ProofState state = std::move(*replay_file(opt, file, store).state);
  if (state.derived_count() == 0) throw Error(file + ": the proof has no derived lines");
  const ExtractionResult ex = extract_theorem(state);
  for (std::size_t l : ex.redundant) {
    std::cerr << "warning: premise " << l << " " << state.lines()[l - 1].statement.to_string()
              << " is redundant\n";
  }
  std::string label;
  if (append) label = store.add_theorem(ex.premise, ProgramList({ex.conclusion}));
  if (opt.json) {
    json out = to_json(ex);
    if (append) out["label"] = label;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << ex.theorem_text() << "\n";
    if (append) std::cout << "appended as " << label << " to " << opt.axioms << "\n";
  }
  return 0;
}

int cmd_options(const Options& opt, const std::string& file) {
  read_file(file);
  AxiomStore store = load_store(opt.axioms);
  const ProofState state = std::move(*replay_file(opt, file, store).state);
  const std::vector<DerivationOption> options = enumerate_options(state, store);
  if (opt.json) {
    json list = json::array();
    for (const DerivationOption& o : options) list.push_back(to_json(o));
    std::cout << json{{"options", list}}.dump(2) << "\n";
    return 0;
  }
  for (const DerivationOption& o : options) {
    char index[16];
    std::snprintf(index, sizeof index, "%4zu ", o.index);
    std::string conn = o.connection().to_string();
    if (conn.size() < 18) conn.resize(18, ' ');
    std::cout << index << conn << " " << render_program(o.conclusion)
              << (o.already_derived ? "  (already derived)" : "") << "\n";
  }
  return 0;
}

int cmd_serve(const Options& opt, const std::string& host, int port) {
  SessionRegistry registry(load_store(opt.axioms), opt.config());
  HttpServer server(registry);
  const int bound = server.bind(host, port);
  if (bound < 0) throw Error("cannot listen on " + host + ":" + std::to_string(port));
  std::cout << "listening on http://" << host << ":" << bound << std::endl;
  server.run();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Programs-as-proofs workbench: replay, extend and extract proofs over the "
               "bounded-integer axioms."};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--axioms", opt.axioms, "Axiom file")->envname("SEQPROOF_AXIOMS");
  app.add_option("--max-int", opt.max_int, "Machine integer bound N")
      ->envname("SEQPROOF_MAX_INT")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "Machine-readable output");

  std::vector<std::string> verify_files;
  auto* verify = app.add_subcommand("verify", "Replay proof listings line by line");
  verify->add_option("files", verify_files, "Proof files, in dependency order")->required();

  std::string run_file, run_expr, run_scenario;
  std::vector<std::string> run_bindings;
  auto* run = app.add_subcommand("run", "Execute a program on name=value bindings");
  run->add_option("file", run_file, "Program file");
  run->add_option("-e,--expr", run_expr, "Program text instead of a file");
  run->add_option("--scenario", run_scenario,
                  "Closure counterexample: assoc-add, assoc-mult, dist-fwd, dist-bwd");
  run->add_option("bindings", run_bindings, "name=value");

  std::string extract_file;
  bool extract_append = false;
  auto* extract = app.add_subcommand("extract", "Print the theorem a proof establishes");
  extract->add_option("file", extract_file, "Proof file")->required();
  extract->add_flag("--append", extract_append, "Append the theorem to the axiom file");

  std::string options_file;
  auto* options = app.add_subcommand("options", "List the derivations available after a proof");
  options->add_option("file", options_file, "Proof or premise file")->required();

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Serve proof sessions over local HTTP");
  serve->add_option("--port", port, "Port")->envname("SEQPROOF_PORT");
  serve->add_option("--host", host, "Address to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  // A positional binding like a=1 lands in `file` when no file is given.
  if (run->parsed() && run_file.find('=') != std::string::npos) {
    run_bindings.insert(run_bindings.begin(), run_file);
    run_file.clear();
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, verify_files);
    if (run->parsed()) return cmd_run(opt, run_file, run_expr, run_scenario, run_bindings);
    if (extract->parsed()) return cmd_extract(opt, extract_file, extract_append);
    if (options->parsed()) return cmd_options(opt, options_file);
    if (serve->parsed()) return cmd_serve(opt, host, port);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
