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

// Sequential equivalence, I/O equivalence, and the renaming matcher that
// finds every way an axiom premise occurs among the lines of a proof.

#ifndef SEQPROOF_EQUIVALENCE_HPP_
#define SEQPROOF_EQUIVALENCE_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqproof/program.hpp"

namespace seqproof {

// Axiom-side identifier -> proof-side term. A function, not necessarily
// injective. Literals on the axiom side are never keys: they only match
// themselves.
using Renaming = std::map<std::string, Term>;

std::string to_string(const Renaming& r);

struct MatchResult {
  std::vector<std::size_t> refs;  // 1-based proof lines, one per premise statement
  Renaming renaming;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

// True iff q is a permutation of p and q keeps the I/O dependency condition.
// Throws ValidationError when p itself is not a valid program.
bool eqseq(const ProgramList& p, const ProgramList& q);

// True iff a bijective variable correspondence with constants fixed turns p
// into q. Throws ShapeMismatch unless p and q have the same length and
// position-wise equal names and arities.
bool eqio(const ProgramList& p, const ProgramList& q);

// Extends `r` so that pattern maps onto target. Returns false, leaving `r`
// unchanged, when no consistent extension exists.
bool unify(const Statement& pattern, const Statement& target, Renaming& r);

// Candidate index over proof lines keyed by statement name and arity.
class LineIndex {
 public:
  explicit LineIndex(std::span<const Statement> lines);

  std::span<const Statement> lines() const noexcept { return lines_; }
  // 0-based positions of lines with this name and arity, ascending.
  const std::vector<std::size_t>& candidates(const Statement& pattern) const;

 private:
  std::span<const Statement> lines_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_shape_;
  std::vector<std::size_t> none_;
};

// Every way to map the premise onto proof lines 1..upto. A line may fill
// several premise slots and refs need not be increasing. Results are in
// lexicographic order of refs.
std::vector<MatchResult> match_premise(const ProgramList& premise, const LineIndex& proof,
                                       std::size_t upto);
std::vector<MatchResult> match_premise(const ProgramList& premise,
                                       std::span<const Statement> proof, std::size_t upto);

// Fresh output names: the first letter a..z not yet used, then v1, v2, ...
// A scripted supply hands out a fixed sequence instead, which lets replay
// accept whatever unused names a recorded proof chose.
class NameSupply {
 public:
  explicit NameSupply(std::set<std::string> used, std::size_t max_len = 32)
      : used_(std::move(used)), max_len_(max_len) {}
  static NameSupply scripted(std::set<std::string> used, std::vector<std::string> names);

  // Throws ProofError when the pool is exhausted or a scripted name is
  // already in use.
  std::string next();
  bool is_used(const std::string& name) const { return used_.count(name) != 0; }
  void reserve(const std::string& name) { used_.insert(name); }
  // Scripted names not yet handed out.
  std::size_t remaining_script() const noexcept { return script_.size() - script_pos_; }

 private:
  std::set<std::string> used_;
  std::size_t max_len_;
  std::vector<std::string> script_;
  std::size_t script_pos_ = 0;
  bool is_scripted_ = false;
  std::size_t counter_ = 0;
};

// Replaces bound variables by their images and names every unbound output
// from `fresh`. Inputs may refer to outputs introduced earlier in p.
// Throws ValidationError for an unbound input variable.
ProgramList apply_renaming(const ProgramList& p, const Renaming& r, NameSupply& fresh);

}  // namespace seqproof

#endif  // SEQPROOF_EQUIVALENCE_HPP_
