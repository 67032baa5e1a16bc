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

// Proof sessions. A proof is a list of premise lines followed by derived
// lines, each derived line carrying the connection list [LABEL,ref,...] of the
// axiom, theorem or schema and the earlier lines it was matched against.

#ifndef SEQPROOF_PROOF_HPP_
#define SEQPROOF_PROOF_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqproof/axiom_store.hpp"
#include "seqproof/equivalence.hpp"
#include "seqproof/program.hpp"

namespace seqproof {

struct ConnectionList {
  std::string label;
  std::vector<std::size_t> refs;

  // "[A15,2]"
  std::string to_string() const;
  friend bool operator==(const ConnectionList&, const ConnectionList&) = default;
};

// Throws SyntaxError.
ConnectionList parse_connection_list(std::string_view text);

struct ProofLine {
  Statement statement;
  std::optional<ConnectionList> connection;  // absent on premises
};

class ProofState {
 public:
  ProofState() = default;
  // Throws ValidationError when the premises are not a valid program.
  explicit ProofState(ProgramList premises, const MachineConfig& cfg = {});

  std::size_t premise_count() const noexcept { return premise_count_; }
  std::size_t line_count() const noexcept { return lines_.size(); }
  std::size_t derived_count() const noexcept { return lines_.size() - premise_count_; }
  const std::vector<ProofLine>& lines() const noexcept { return lines_; }
  std::span<const Statement> statements() const noexcept { return statements_; }
  ProgramList premises() const;
  ProgramList program() const;
  const MachineConfig& config() const noexcept { return cfg_; }
  // Sizes of the derived groups, one group per applied derivation.
  const std::vector<std::size_t>& groups() const noexcept { return groups_; }

  // Every identifier that occurs on some line.
  std::set<std::string> used_names() const;
  // Fresh-name source positioned for the next derivation.
  NameSupply name_supply() const;
  // Changes whenever a line is added or removed.
  std::uint64_t fingerprint() const;

  // The first n lines. Throws ProofError unless n keeps every premise and
  // ends on a group boundary.
  ProofState prefix(std::size_t n) const;

  // Appends one derived group. Throws ValidationError when the statements
  // would break the program conditions.
  void append(const ProgramList& conclusion, const ConnectionList& connection);
  // Removes the last group. Throws ProofError when there is none.
  void pop();

 private:
  std::size_t premise_count_ = 0;
  std::vector<ProofLine> lines_;
  std::vector<Statement> statements_;
  std::vector<std::size_t> groups_;
  MachineConfig cfg_;
};

ProofState new_session(ProgramList premises, const MachineConfig& cfg = {});

// One way to extend the proof: a store entry matched against earlier lines.
struct DerivationOption {
  std::size_t index = 0;  // position in the enumeration
  std::string label;
  std::vector<std::size_t> refs;
  Renaming renaming;                    // concrete entries
  std::optional<SchemaParams> params;   // schemas
  ProgramList conclusion;               // outputs already named
  bool already_derived = false;         // every conclusion statement is an existing line
  std::uint64_t basis = 0;              // fingerprint of the enumerated state

  ConnectionList connection() const { return {label, refs}; }
};

// Every derivation available from the state, in store order and then in
// lexicographic order of refs. Identical options are listed once.
std::vector<DerivationOption> enumerate_options(const ProofState& state, const AxiomStore& store);

// Throws ProofError when the option is stale or not derivable from `state`.
ProofState apply_option(const ProofState& state, const AxiomStore& store,
                        const DerivationOption& option);

// Throws ProofError when there is no derived line.
ProofState undo(const ProofState& state);

struct Derivation {
  Renaming renaming;
  std::optional<SchemaParams> params;
  ProgramList conclusion;
};

// All conclusions the connection list yields on the state's lines, naming
// fresh outputs from a copy of `names`. Throws ProofError for an unknown
// label, a wrong number of refs, a ref that is not an earlier line, or a
// premise that does not unify.
std::vector<Derivation> derive(const ProofState& state, const AxiomStore& store,
                               const ConnectionList& connection, const NameSupply& names);

// Number of lines the entry adds when cited with these refs.
std::size_t conclusion_length(const AxiomStore& store, const ProofState& state,
                              const ConnectionList& connection);

// Listing text

struct ListingLine {
  std::size_t label;
  Statement statement;
  std::optional<ConnectionList> connection;
  std::size_t source_line;  // 1-based line in the text
};

struct ParsedListing {
  std::optional<std::string> title;    // "T1" from "Theorem T1."
  std::optional<std::string> theorem;  // header text "[[...], ...]"
  std::vector<ListingLine> lines;
};

// Annotation columns are ignored. Throws SyntaxError naming the text line.
ParsedListing parse_listing(std::string_view text, const MachineConfig& cfg = {});

struct LineVerdict {
  std::size_t line;
  bool ok;
  std::string detail;
};

struct ReplayReport {
  std::vector<LineVerdict> verdicts;  // one per derived line
  std::string error;                  // failure outside any one line
  std::optional<ProofState> state;    // the replayed proof when it passed
  // Whether every fresh output name is the one the default naming scheme
  // would choose.
  bool default_names = true;

  bool passed() const;
  std::size_t failures() const;
  const LineVerdict* first_failure() const;
  std::string to_string() const;
};

// Rebuilds every derived line from its connection list and compares it with
// the recorded statement. Fresh output names may be any names not yet used.
// Continues past failing lines.
ReplayReport replay(const ParsedListing& listing, const AxiomStore& store,
                    const MachineConfig& cfg = {});
ReplayReport replay(std::string_view text, const AxiomStore& store, const MachineConfig& cfg = {});

struct ExtractionResult {
  std::vector<std::size_t> used;       // premise labels the conclusion rests on
  std::vector<std::size_t> redundant;  // the other premise labels
  std::vector<std::vector<std::size_t>> rounds;  // d(1), d(2), ...
  ProgramList premise;                 // used premises in original order
  Statement conclusion;

  // "[[p1, p2], q]"
  std::string theorem_text() const;
};

// Traces the last line's connection list back to premise labels. Throws
// ProofError when there is no derived line.
ExtractionResult extract_theorem(const ProofState& state);

// Annotation column for each line: "a:I", "a<b", "c=(a+b)=(...)" etc.
std::vector<std::string> annotations(const ProofState& state);
// Numbered lines with statement, connection list and annotation columns.
std::string render_listing(const ProofState& state);
// "Theorem T1." header, theorem text, "Proof." and the listing.
std::string render_document(const ProofState& state, std::string_view title);

}  // namespace seqproof

#endif  // SEQPROOF_PROOF_HPP_
