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

// The axiom store: built-in substitution and identity-type schemas, concrete
// axioms and appended theorems, read from and written to a line-oriented
// text file.
//
// File format, one item per line:
//   # comment
//   integer-programs : Int Lt Eq ...
//   A1 : builtin id-type-input
//   A8 : [Add([a,b],[c])] => [Add([b,a],[d])]

#ifndef SEQPROOF_AXIOM_STORE_HPP_
#define SEQPROOF_AXIOM_STORE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqproof/equivalence.hpp"
#include "seqproof/program.hpp"

namespace seqproof {

enum class SchemaKind {
  kIdTypeInput,   // P(x,y) gives Int([x_i],[])
  kIdTypeOutput,  // P(x,y) gives Int([y_i],[])
  kSubstExist,    // P(x,y), Eq([x_i,a],[]) gives P(x', y') with x' = x|_{i->a}
  kSubstEq,       // ... plus a line P(x',y') gives [Eq([y'_k,y_k],[])]_k
};

std::string_view keyword(SchemaKind kind);
std::optional<SchemaKind> parse_schema_keyword(std::string_view word);
// Number of proof lines a schema instance cites.
std::size_t schema_premise_length(SchemaKind kind);

enum class EntryKind { kAxiom, kTheorem };

struct StoreEntry {
  std::string label;
  std::optional<SchemaKind> schema;
  ProgramList premise;     // empty for schemas
  ProgramList conclusion;  // empty for schemas
  EntryKind kind = EntryKind::kAxiom;

  bool is_schema() const noexcept { return schema.has_value(); }
  std::size_t premise_length() const;
  // The entry's line in the store file.
  std::string to_string() const;
};

// Throws StoreError unless the premise is a valid program, the conclusion is
// nonempty, every conclusion input is a constant, a premise identifier or an
// earlier conclusion output, and no conclusion output reuses a premise name.
void check_well_formed(const ProgramList& premise, const ProgramList& conclusion);

class AxiomStore {
 public:
  AxiomStore();

  // Throws StoreError with a 1-based line number.
  static AxiomStore parse(std::string_view text);

  const std::vector<StoreEntry>& entries() const noexcept { return entries_; }
  const StoreEntry* find(std::string_view label) const;
  bool is_integer_program(std::string_view name) const;
  const std::vector<std::string>& integer_programs() const noexcept { return integer_programs_; }
  std::size_t axiom_count() const;
  std::size_t theorem_count() const;

  // Appends a checked entry. Throws StoreError on a duplicate label or an
  // ill-formed entry.
  void add(StoreEntry entry);
  // Appends under the next free T-label and persists when a source path is
  // set. Returns the label.
  std::string add_theorem(ProgramList premise, ProgramList conclusion);

  // Keeps comments and entry order, so parse(serialize()) round-trips.
  std::string serialize() const;
  // Writes to a temporary file next to `path` and renames it into place.
  void save(const std::filesystem::path& path) const;

  const std::optional<std::filesystem::path>& source_path() const noexcept { return source_; }
  void set_source_path(std::optional<std::filesystem::path> path) { source_ = std::move(path); }

 private:
  struct Item {
    enum class Type { kText, kHeader, kEntry } type;
    std::string text;
    std::size_t entry = 0;
  };

  std::vector<StoreEntry> entries_;
  std::vector<std::string> integer_programs_;
  std::vector<Item> layout_;
  bool has_header_ = false;
  std::optional<std::filesystem::path> source_;
};

// Reads and parses `path`, remembering it as the source path. Throws
// StoreError when the file cannot be read.
AxiomStore load_store(const std::filesystem::path& path);

// Schema parameters. Lines are 1-based proof labels; `index` is 1-based into
// the target's inputs (or outputs for kIdTypeOutput).
struct SchemaParams {
  std::size_t target = 0;
  std::size_t index = 0;
  std::size_t equality = 0;  // kSubstExist, kSubstEq
  std::size_t copy = 0;      // kSubstEq

  std::vector<std::size_t> refs(SchemaKind kind) const;
  friend bool operator==(const SchemaParams&, const SchemaParams&) = default;
};

struct SchemaInstance {
  ProgramList premise;
  ProgramList conclusion;
};

// Builds the concrete premise and conclusion for a schema over proof lines.
// Throws ProofError for a bad line or index, an equality whose first
// argument is not the targeted element, or a target that is not an integer
// program.
SchemaInstance instantiate_schema(const AxiomStore& store, SchemaKind kind,
                                  const SchemaParams& params, std::span<const Statement> lines,
                                  NameSupply& fresh);

// Every parameter set for which instantiate_schema succeeds over the given
// lines, ordered by cited lines and then by index.
std::vector<SchemaParams> schema_candidates(const AxiomStore& store, SchemaKind kind,
                                            std::span<const Statement> lines);

}  // namespace seqproof

#endif  // SEQPROOF_AXIOM_STORE_HPP_
