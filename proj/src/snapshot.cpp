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

#include "seqproof/snapshot.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "seqproof/error.hpp"

namespace seqproof {

using nlohmann::json;

std::string basis_text(std::uint64_t basis) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(basis));
  return buf;
}

json to_json(const ProofState& state) {
  const std::vector<std::string> notes = annotations(state);
  json lines = json::array();
  for (std::size_t i = 0; i < state.line_count(); ++i) {
    const ProofLine& line = state.lines()[i];
    lines.push_back({{"label", i + 1},
                     {"statement", line.statement.to_string()},
                     {"connection", line.connection ? json(line.connection->to_string()) : json()},
                     {"annotation", notes[i]}});
  }
  return {{"premises", render_program(state.premises())},
          {"premise_count", state.premise_count()},
          {"basis", basis_text(state.fingerprint())},
          {"lines", std::move(lines)}};
}

json to_json(const DerivationOption& option) {
  json conclusion = json::array();
  for (const Statement& s : option.conclusion) conclusion.push_back(s.to_string());
  json out = {{"index", option.index},
              {"label", option.label},
              {"refs", option.refs},
              {"connection", option.connection().to_string()},
              {"conclusion", std::move(conclusion)},
              {"already_derived", option.already_derived}};
  if (option.params) out["element"] = option.params->index;
  return out;
}

json to_json(const ExtractionResult& result) {
  return {{"theorem", result.theorem_text()},
          {"used", result.used},
          {"redundant", result.redundant},
          {"rounds", result.rounds}};
}

json to_json(const ReplayReport& report) {
  json lines = json::array();
  for (const LineVerdict& v : report.verdicts) {
    lines.push_back({{"line", v.line}, {"ok", v.ok}, {"detail", v.detail}});
  }
  json out = {{"passed", report.passed()}, {"lines", std::move(lines)}};
  if (!report.error.empty()) out["error"] = report.error;
  return out;
}

json to_json(const StoreEntry& entry) {
  json out = {{"label", entry.label},
              {"kind", entry.kind == EntryKind::kAxiom ? "axiom" : "theorem"},
              {"text", entry.to_string()}};
  if (entry.schema) {
    out["schema"] = std::string(keyword(*entry.schema));
  } else {
    out["premise"] = render_program(entry.premise);
    out["conclusion"] = render_program(entry.conclusion);
  }
  return out;
}

ProofState state_from_json(const json& doc, const AxiomStore& store, const MachineConfig& cfg) {
  if (!doc.is_object() || !doc.contains("lines") || !doc["lines"].is_array()) {
    throw ValidationError("snapshot needs a \"lines\" array");
  }
  // Reassemble the listing text and replay it, so a snapshot is never
  // trusted beyond what its connection lists justify.
  std::string text;
  std::size_t label = 0;
  for (const json& line : doc["lines"]) {
    if (!line.is_object() || !line.contains("statement") || !line["statement"].is_string()) {
      throw ValidationError("snapshot line " + std::to_string(label + 1) + " has no statement");
    }
    text += std::to_string(++label) + " " + line["statement"].get<std::string>();
    if (line.contains("connection") && line["connection"].is_string()) {
      text += " " + line["connection"].get<std::string>();
    }
    text += '\n';
  }
  ReplayReport report = replay(text, store, cfg);
  if (!report.passed()) {
    const LineVerdict* bad = report.first_failure();
    throw ProofError("snapshot does not replay: " +
                     (bad ? "line " + std::to_string(bad->line) + ": " + bad->detail : report.error));
  }
  return std::move(*report.state);
}

void save_snapshot(const std::filesystem::path& path, const ProofState& state) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ProofError("cannot write " + path.string());
  out << to_json(state).dump(2) << '\n';
}

ProofState load_snapshot(const std::filesystem::path& path, const AxiomStore& store,
                         const MachineConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProofError("cannot read " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("snapshot is not JSON: ") + e.what(), 0);
  }
  return state_from_json(doc, store, cfg);
}

}  // namespace seqproof
