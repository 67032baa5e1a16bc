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

#include <algorithm>
#include <cctype>
#include <map>

#include "seqproof/error.hpp"
#include "seqproof/proof.hpp"

namespace seqproof {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

ConnectionList read_connection(TermReader& reader) {
  ConnectionList c;
  reader.expect('[');
  c.label = reader.read_identifier();
  while (reader.consume(',')) {
    const std::int64_t r = reader.read_integer();
    if (r < 1) reader.fail("line reference must be positive");
    c.refs.push_back(static_cast<std::size_t>(r));
  }
  reader.expect(']');
  return c;
}

}  // namespace

ConnectionList parse_connection_list(std::string_view text) {
  TermReader reader(text);
  ConnectionList c = read_connection(reader);
  if (!reader.at_end()) reader.fail("trailing characters after connection list");
  return c;
}

ParsedListing parse_listing(std::string_view text, const MachineConfig& cfg) {
  ParsedListing out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    const std::size_t line_start = start;
    start = end + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (line.empty() || line.front() == '#' || line == "Proof.") continue;
    if (line.rfind("Theorem", 0) == 0) {
      std::string_view title = trim(line.substr(7));
      if (!title.empty() && title.back() == '.') title.remove_suffix(1);
      out.title = std::string(title);
      continue;
    }
    if (line.front() == '[') {
      if (out.theorem) throw SyntaxError(where + "second theorem header", line_start);
      out.theorem = std::string(line);
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(line.front()))) {
      throw SyntaxError(where + "expected a numbered proof line", line_start);
    }
    TermReader reader(raw, cfg);
    try {
      const std::int64_t label = reader.read_integer();
      Statement s = read_statement(reader);
      std::optional<ConnectionList> connection;
      if (reader.peek() == '[') connection = read_connection(reader);
      out.lines.push_back({static_cast<std::size_t>(label), std::move(s), std::move(connection),
                           line_no});
    } catch (const SyntaxError& e) {
      throw SyntaxError(where + e.what(), line_start + reader.position());
    } catch (const Error& e) {
      throw SyntaxError(where + e.what(), line_start + reader.position());
    }
  }
  return out;
}

// Replay

bool ReplayReport::passed() const { return error.empty() && failures() == 0; }

std::size_t ReplayReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [](const LineVerdict& v) { return !v.ok; }));
}

const LineVerdict* ReplayReport::first_failure() const {
  for (const LineVerdict& v : verdicts) {
    if (!v.ok) return &v;
  }
  return nullptr;
}

std::string ReplayReport::to_string() const {
  std::string out;
  for (const LineVerdict& v : verdicts) {
    out += "line " + std::to_string(v.line) + ": " + (v.ok ? "ok" : "FAIL " + v.detail) + "\n";
  }
  if (!error.empty()) out += "error: " + error + "\n";
  return out;
}

ReplayReport replay(const ParsedListing& listing, const AxiomStore& store,
                    const MachineConfig& cfg) {
  ReplayReport report;
  const auto& lines = listing.lines;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].label != i + 1) {
      report.error = "text line " + std::to_string(lines[i].source_line) + ": label " +
                     std::to_string(lines[i].label) + " where " + std::to_string(i + 1) +
                     " was expected";
      return report;
    }
  }
  std::size_t n = 0;
  while (n < lines.size() && !lines[n].connection) ++n;
  for (std::size_t i = n; i < lines.size(); ++i) {
    if (!lines[i].connection) {
      report.error = "line " + std::to_string(i + 1) + ": premise after derived lines";
      return report;
    }
  }
  std::vector<Statement> premises;
  for (std::size_t i = 0; i < n; ++i) premises.push_back(lines[i].statement);
  ProofState state;
  try {
    state = ProofState(ProgramList(std::move(premises)), cfg);
  } catch (const ValidationError& e) {
    report.error = std::string("premises are not a program: ") + e.what();
    return report;
  }

  std::size_t i = n;
  while (i < lines.size()) {
    const ConnectionList& connection = *lines[i].connection;
    const std::size_t k = conclusion_length(store, state, connection);
    const std::size_t end = std::min(i + k, lines.size());
    ProgramList recorded;
    std::vector<std::string> script;
    bool grouped = end - i == k;
    for (std::size_t j = i; j < end; ++j) {
      if (*lines[j].connection != connection) grouped = false;
      recorded.push_back(lines[j].statement);
      script.insert(script.end(), lines[j].statement.outputs().begin(),
                    lines[j].statement.outputs().end());
    }
    bool ok = false;
    std::string detail;
    if (!grouped) {
      detail = connection.to_string() + " concludes " + std::to_string(k) +
               " consecutive lines with the same connection list";
    } else {
      try {
        const auto derived =
            derive(state, store, connection, NameSupply::scripted(state.used_names(), script));
        ok = std::any_of(derived.begin(), derived.end(),
                         [&](const Derivation& d) { return d.conclusion == recorded; });
        if (!ok) {
          detail = "statement mismatch: " + connection.to_string() + " yields";
          for (const Derivation& d : derived) detail += " " + render_program(d.conclusion);
        } else {
          const auto by_default = derive(state, store, connection, state.name_supply());
          if (std::none_of(by_default.begin(), by_default.end(),
                           [&](const Derivation& d) { return d.conclusion == recorded; })) {
            report.default_names = false;
          }
        }
      } catch (const Error& e) {
        detail = e.what();
      }
    }
    for (std::size_t j = i; j < end; ++j) report.verdicts.push_back({j + 1, ok, ok ? "" : detail});
    try {
      state.append(recorded, connection);
    } catch (const Error& e) {
      report.error = "line " + std::to_string(i + 1) + ": " + e.what() + "; replay stopped";
      return report;
    }
    i = end;
  }
  if (report.passed()) report.state = std::move(state);
  return report;
}

ReplayReport replay(std::string_view text, const AxiomStore& store, const MachineConfig& cfg) {
  return replay(parse_listing(text, cfg), store, cfg);
}

// Rendering

std::vector<std::string> annotations(const ProofState& state) {
  std::map<std::string, std::string> expanded;
  auto plain = [](const Term& t) { return t.to_string(); };
  auto expand = [&](const Term& t) {
    if (t.is_identifier()) {
      auto it = expanded.find(t.name());
      if (it != expanded.end()) return it->second;
    }
    return t.to_string();
  };
  std::vector<std::string> out;
  for (const Statement& s : state.statements()) {
    const auto& in = s.inputs();
    const std::string& name = s.name();
    std::string text;
    if (name == "Int" && in.size() == 1) {
      text = plain(in[0]) + ":I";
    } else if ((name == "Lt" || name == "Eq" || name == "Neq") && in.size() == 2) {
      const char* op = name == "Lt" ? "<" : name == "Eq" ? "=" : "/=";
      text = plain(in[0]) + op + plain(in[1]);
    } else if (name == "Aid" && in.size() == 1 && s.outputs().size() == 1) {
      text = s.outputs()[0] + "=" + plain(in[0]);
      expanded[s.outputs()[0]] = expand(in[0]);
    } else if ((name == "Add" || name == "Mult" || name == "Div") && in.size() == 2 &&
               s.outputs().size() == 1) {
      const char op = name == "Add" ? '+' : name == "Mult" ? '*' : '/';
      const std::string shallow = "(" + plain(in[0]) + op + plain(in[1]) + ")";
      const std::string deep = "(" + expand(in[0]) + op + expand(in[1]) + ")";
      text = s.outputs()[0] + "=" + shallow;
      if (deep != shallow) text += "=" + deep;
      expanded[s.outputs()[0]] = deep;
    }
    out.push_back(std::move(text));
  }
  return out;
}

std::string render_listing(const ProofState& state) {
  constexpr std::size_t kColumn = 20;
  auto pad = [](std::string s) {
    s += s.size() < kColumn ? std::string(kColumn - s.size(), ' ') : std::string(" ");
    return s;
  };
  const std::vector<std::string> notes = annotations(state);
  std::string out;
  for (std::size_t i = 0; i < state.line_count(); ++i) {
    const ProofLine& line = state.lines()[i];
    std::string label = std::to_string(i + 1);
    if (label.size() < 3) label.insert(0, 3 - label.size(), ' ');
    std::string row = label + " " + pad(line.statement.to_string()) +
                      pad(line.connection ? line.connection->to_string() : "") + notes[i];
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + '\n';
  }
  return out;
}

std::string render_document(const ProofState& state, std::string_view title) {
  std::string out = "Theorem " + std::string(title) + ".\n";
  out += extract_theorem(state).theorem_text() + "\n\nProof.\n";
  out += render_listing(state);
  return out;
}

}  // namespace seqproof
