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

// Straight-line programs: statements Name(inputs, outputs), ordered program
// lists, their well-formedness conditions and the horizontal / vertical text
// forms.

#ifndef SEQPROOF_PROGRAM_HPP_
#define SEQPROOF_PROGRAM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqproof/term.hpp"

namespace seqproof {

// One program invocation. Invariants, checked by the constructor:
//  - name and outputs are identifiers;
//  - outputs are pairwise distinct;
//  - no output is mentioned by the inputs.
// Inputs are kept exactly as written; nested lists are never flattened.
class Statement {
 public:
  Statement(std::string name, TermList inputs, std::vector<std::string> outputs);

  const std::string& name() const noexcept { return name_; }
  const TermList& inputs() const noexcept { return inputs_; }
  const std::vector<std::string>& outputs() const noexcept { return outputs_; }

  // "Name([in,...],[out,...])"
  std::string to_string() const;

  friend bool operator==(const Statement&, const Statement&) = default;

 private:
  std::string name_;
  TermList inputs_;
  std::vector<std::string> outputs_;
};

// Ordered statement sequence. Construction does not validate: use
// validate_program() or require_valid().
class ProgramList {
 public:
  ProgramList() = default;
  explicit ProgramList(std::vector<Statement> statements)
      : statements_(std::move(statements)) {}

  const std::vector<Statement>& statements() const noexcept { return statements_; }
  std::size_t size() const noexcept { return statements_.size(); }
  bool empty() const noexcept { return statements_.empty(); }
  const Statement& operator[](std::size_t i) const { return statements_[i]; }
  auto begin() const noexcept { return statements_.begin(); }
  auto end() const noexcept { return statements_.end(); }

  void push_back(Statement s) { statements_.push_back(std::move(s)); }

  friend bool operator==(const ProgramList&, const ProgramList&) = default;

 private:
  std::vector<Statement> statements_;
};

enum class Condition {
  kDistinctOutputs,  // an output name is produced twice
  kIoDependency,     // an input mentions an output of the same or a later statement
  kNameClash,        // a statement calls the enclosing program by name
};

struct Violation {
  Condition condition;
  std::size_t statement;  // 1-based offending statement
  std::size_t other;      // 1-based statement it conflicts with (0 if none)
  std::string identifier;

  std::string message() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Naming-convention notes. Never make a program invalid.
  std::vector<std::string> warnings;

  bool valid() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate_program(const ProgramList& p,
                                  std::optional<std::string_view> enclosing_name = {});
// Throws ValidationError carrying the report text.
void require_valid(const ProgramList& p, std::optional<std::string_view> enclosing_name = {});

// Main-program inputs and outputs.
struct MainIO {
  TermList inputs;
  std::vector<std::string> outputs;
};

// outputs: every statement output in order. inputs: the deduplicated
// concatenation of statement inputs with outputs removed.
// Throws ValidationError for an invalid program.
MainIO derive_io(const ProgramList& p);

// p followed by q, validated. Throws ValidationError when the result is not a
// well-formed program.
ProgramList conc(const ProgramList& p, const ProgramList& q);

// Parses "Name([t,...],[o,...])". Throws SyntaxError or ValidationError.
Statement parse_statement(std::string_view text, const MachineConfig& cfg = {});
// Reads one statement from the reader's current position.
Statement read_statement(TermReader& reader);

// Accepts a horizontal list "[S1, S2, ...]" or the vertical form: one
// statement per line, optionally preceded by a line number and followed by
// any trailing columns (connection list, annotation). Lines starting with
// '#' are comments. The result is validated.
ProgramList parse_program(std::string_view text, const MachineConfig& cfg = {});

enum class Layout { kHorizontal, kVertical };
std::string render_program(const ProgramList& p, Layout layout = Layout::kHorizontal);

// True when `name` follows the program naming convention: an upper-case
// letter followed by lower-case letters or digits.
bool follows_name_convention(std::string_view name) noexcept;

}  // namespace seqproof

#endif  // SEQPROOF_PROGRAM_HPP_
