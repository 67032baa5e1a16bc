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

#include "seqproof/program.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "seqproof/error.hpp"

namespace seqproof {

Statement::Statement(std::string name, TermList inputs, std::vector<std::string> outputs)
    : name_(std::move(name)), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  if (!is_identifier_text(name_)) throw ValidationError("invalid program name '" + name_ + "'");
  std::set<std::string_view> seen;
  for (const std::string& y : outputs_) {
    if (!is_identifier_text(y)) {
      throw ValidationError(name_ + ": output '" + y + "' is not an identifier");
    }
    if (!seen.insert(y).second) {
      throw ValidationError(name_ + ": output '" + y + "' appears twice");
    }
    if (mentions(inputs_, y)) {
      throw ValidationError(name_ + ": output '" + y + "' is also an input");
    }
  }
}

std::string Statement::to_string() const {
  std::string out = name_;
  out += '(';
  out += seqproof::to_string(inputs_);
  out += ",[";
  for (std::size_t i = 0; i < outputs_.size(); ++i) {
    if (i) out += ',';
    out += outputs_[i];
  }
  out += "])";
  return out;
}

std::string Violation::message() const {
  const std::string at = "statement " + std::to_string(statement);
  switch (condition) {
    case Condition::kDistinctOutputs:
      return at + ": output " + identifier + " is already the output of statement " +
             std::to_string(other);
    case Condition::kIoDependency:
      return at + ": input " + identifier + " is output of statement " + std::to_string(other);
    case Condition::kNameClash:
      return at + ": calls the enclosing program " + identifier;
  }
  return at;
}

std::string ValidationReport::to_string() const {
  if (valid()) return "valid";
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += '\n';
    out += v.message();
  }
  return out;
}

bool follows_name_convention(std::string_view name) noexcept {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) return false;
  return std::none_of(name.begin() + 1, name.end(),
                      [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; });
}

ValidationReport validate_program(const ProgramList& p,
                                  std::optional<std::string_view> enclosing_name) {
  ValidationReport report;
  const auto& s = p.statements();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!follows_name_convention(s[i].name())) {
      report.warnings.push_back("statement " + std::to_string(i + 1) + ": program name " +
                                s[i].name() + " does not follow the naming convention");
    }
    if (enclosing_name && s[i].name() == *enclosing_name) {
      report.violations.push_back({Condition::kNameClash, i + 1, 0, s[i].name()});
    }
    for (const std::string& y : s[i].outputs()) {
      for (std::size_t j = 0; j < i; ++j) {
        const auto& prev = s[j].outputs();
        if (std::find(prev.begin(), prev.end(), y) != prev.end()) {
          report.violations.push_back({Condition::kDistinctOutputs, i + 1, j + 1, y});
        }
      }
    }
    // An input may not mention an output of this or any later statement.
    for (std::size_t j = i; j < s.size(); ++j) {
      for (const std::string& y : s[j].outputs()) {
        if (mentions(s[i].inputs(), y)) {
          report.violations.push_back({Condition::kIoDependency, i + 1, j + 1, y});
        }
      }
    }
  }
  return report;
}

void require_valid(const ProgramList& p, std::optional<std::string_view> enclosing_name) {
  ValidationReport report = validate_program(p, enclosing_name);
  if (!report.valid()) throw ValidationError(report.to_string());
}

MainIO derive_io(const ProgramList& p) {
  require_valid(p);
  MainIO io;
  TermList all_inputs;
  TermList output_terms;
  for (const Statement& s : p) {
    all_inputs.insert(all_inputs.end(), s.inputs().begin(), s.inputs().end());
    for (const std::string& y : s.outputs()) {
      io.outputs.push_back(y);
      output_terms.push_back(Term::identifier(y));
    }
  }
  TermList deduped = dedupe(all_inputs);
  io.inputs = extract(deduped, intersect(deduped, output_terms));
  return io;
}

ProgramList conc(const ProgramList& p, const ProgramList& q) {
  std::vector<Statement> joined = p.statements();
  joined.insert(joined.end(), q.begin(), q.end());
  ProgramList r(std::move(joined));
  ValidationReport report = validate_program(r);
  if (!report.valid()) {
    throw ValidationError("concatenation is not a program: " + report.to_string());
  }
  return r;
}

Statement read_statement(TermReader& reader) {
  std::string name = reader.read_identifier();
  reader.expect('(');
  TermList inputs = reader.read_list();
  reader.expect(',');
  const std::size_t outputs_at = reader.position();
  TermList output_terms = reader.read_list();
  reader.expect(')');
  std::vector<std::string> outputs;
  outputs.reserve(output_terms.size());
  for (const Term& t : output_terms) {
    if (!t.is_identifier()) {
      throw SyntaxError(name + ": output position holds " + t.to_string() +
                            ", not an identifier",
                        outputs_at);
    }
    outputs.push_back(t.name());
  }
  return Statement(std::move(name), std::move(inputs), std::move(outputs));
}

Statement parse_statement(std::string_view text, const MachineConfig& cfg) {
  TermReader reader(text, cfg);
  Statement s = read_statement(reader);
  if (!reader.at_end()) reader.fail("trailing characters after statement");
  return s;
}

namespace {

// Blanks out comment lines so character offsets stay meaningful.
std::string strip_comments(std::string_view text) {
  std::string out(text);
  std::size_t line_start = 0;
  while (line_start < out.size()) {
    std::size_t line_end = out.find('\n', line_start);
    if (line_end == std::string::npos) line_end = out.size();
    std::size_t first = line_start;
    while (first < line_end && (out[first] == ' ' || out[first] == '\t')) ++first;
    if (first < line_end && out[first] == '#') {
      std::fill(out.begin() + static_cast<std::ptrdiff_t>(first),
                out.begin() + static_cast<std::ptrdiff_t>(line_end), ' ');
    }
    line_start = line_end + 1;
  }
  return out;
}

ProgramList parse_horizontal(std::string_view text, const MachineConfig& cfg) {
  TermReader reader(text, cfg);
  std::vector<Statement> statements;
  reader.expect('[');
  if (!reader.consume(']')) {
    do {
      statements.push_back(read_statement(reader));
    } while (reader.consume(','));
    reader.expect(']');
  }
  if (!reader.at_end()) reader.fail("trailing characters after program list");
  return ProgramList(std::move(statements));
}

ProgramList parse_vertical(std::string_view text, const MachineConfig& cfg) {
  std::vector<Statement> statements;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    TermReader reader(line, cfg);
    if (!reader.at_end()) {
      try {
        if (std::isdigit(static_cast<unsigned char>(reader.peek()))) reader.read_integer();
        statements.push_back(read_statement(reader));
      } catch (const SyntaxError& e) {
        throw SyntaxError(std::string(e.what()) + " in line '" + std::string(line) + "'",
                          line_start + reader.position());
      }
      // Remaining columns (connection list, annotation) are not part of the program.
    }
    line_start = line_end + 1;
  }
  return ProgramList(std::move(statements));
}

}  // namespace

ProgramList parse_program(std::string_view text, const MachineConfig& cfg) {
  const std::string cleaned = strip_comments(text);
  TermReader probe(cleaned, cfg);
  ProgramList p = probe.peek() == '[' ? parse_horizontal(cleaned, cfg)
                                      : parse_vertical(cleaned, cfg);
  require_valid(p);
  return p;
}

std::string render_program(const ProgramList& p, Layout layout) {
  std::string out;
  if (layout == Layout::kHorizontal) {
    out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ", ";
      out += p[i].to_string();
    }
    out += ']';
  } else {
    for (const Statement& s : p) {
      out += s.to_string();
      out += '\n';
    }
  }
  return out;
}

}  // namespace seqproof
