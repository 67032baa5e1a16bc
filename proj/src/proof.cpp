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

#include "seqproof/proof.hpp"

#include <algorithm>

#include "seqproof/error.hpp"

namespace seqproof {

std::string ConnectionList::to_string() const {
  std::string out = "[" + label;
  for (std::size_t r : refs) out += "," + std::to_string(r);
  out += ']';
  return out;
}

// ProofState

ProofState::ProofState(ProgramList premises, const MachineConfig& cfg) : cfg_(cfg) {
  require_valid(premises);
  premise_count_ = premises.size();
  for (const Statement& s : premises) {
    lines_.push_back({s, std::nullopt});
    statements_.push_back(s);
  }
}

ProgramList ProofState::premises() const {
  return ProgramList(std::vector<Statement>(statements_.begin(),
                                            statements_.begin() + static_cast<std::ptrdiff_t>(premise_count_)));
}

ProgramList ProofState::program() const { return ProgramList(statements_); }

std::set<std::string> ProofState::used_names() const {
  std::set<std::string> used;
  std::vector<std::string> ids;
  for (const Statement& s : statements_) {
    ids.clear();
    for (const Term& t : s.inputs()) collect_identifiers(t, ids);
    used.insert(ids.begin(), ids.end());
    used.insert(s.outputs().begin(), s.outputs().end());
  }
  return used;
}

NameSupply ProofState::name_supply() const { return NameSupply(used_names(), cfg_.max_string_len); }

std::uint64_t ProofState::fingerprint() const {
  // FNV-1a over the statement and connection columns.
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::string_view s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
  };
  for (const ProofLine& line : lines_) {
    mix(line.statement.to_string());
    if (line.connection) mix(line.connection->to_string());
    mix("\n");
  }
  return h;
}

ProofState ProofState::prefix(std::size_t n) const {
  if (n < premise_count_ || n > lines_.size()) {
    throw ProofError("prefix of " + std::to_string(n) + " lines is outside [" +
                     std::to_string(premise_count_) + ", " + std::to_string(lines_.size()) + "]");
  }
  ProofState out = *this;
  while (out.lines_.size() > n) {
    if (out.lines_.size() - out.groups_.back() < n) {
      throw ProofError("line " + std::to_string(n) + " is inside a derived group");
    }
    out.pop();
  }
  return out;
}

void ProofState::append(const ProgramList& conclusion, const ConnectionList& connection) {
  if (conclusion.empty()) throw ValidationError("empty conclusion");
  std::set<std::string> used = used_names();
  for (const Statement& s : conclusion) {
    std::vector<std::string> ids;
    for (const Term& t : s.inputs()) collect_identifiers(t, ids);
    for (const std::string& y : s.outputs()) {
      if (used.count(y)) throw ValidationError("output " + y + " is already used in the proof");
    }
    used.insert(s.outputs().begin(), s.outputs().end());
    used.insert(ids.begin(), ids.end());
  }
  for (const Statement& s : conclusion) {
    lines_.push_back({s, connection});
    statements_.push_back(s);
  }
  groups_.push_back(conclusion.size());
}

void ProofState::pop() {
  if (groups_.empty()) throw ProofError("nothing to undo");
  const std::size_t k = groups_.back();
  groups_.pop_back();
  lines_.erase(lines_.end() - static_cast<std::ptrdiff_t>(k), lines_.end());
  statements_.erase(statements_.end() - static_cast<std::ptrdiff_t>(k), statements_.end());
}

ProofState new_session(ProgramList premises, const MachineConfig& cfg) {
  return ProofState(std::move(premises), cfg);
}

// Derivation

std::size_t conclusion_length(const AxiomStore& store, const ProofState& state,
                              const ConnectionList& connection) {
  const StoreEntry* entry = store.find(connection.label);
  if (!entry) return 1;
  if (!entry->schema) return entry->conclusion.size();
  if (*entry->schema == SchemaKind::kSubstEq && !connection.refs.empty()) {
    const std::size_t t = connection.refs[0];
    if (t >= 1 && t <= state.line_count()) {
      return std::max<std::size_t>(1, state.statements()[t - 1].outputs().size());
    }
  }
  return 1;
}

std::vector<Derivation> derive(const ProofState& state, const AxiomStore& store,
                               const ConnectionList& connection, const NameSupply& names) {
  const StoreEntry* entry = store.find(connection.label);
  if (!entry) throw ProofError("unknown label " + connection.label);
  const auto& refs = connection.refs;
  if (refs.size() != entry->premise_length()) {
    throw ProofError(connection.label + " needs " + std::to_string(entry->premise_length()) +
                     " refs, got " + std::to_string(refs.size()));
  }
  const auto lines = state.statements();
  for (std::size_t r : refs) {
    if (r < 1 || r > lines.size()) {
      throw ProofError("ref " + std::to_string(r) + " is not an earlier line");
    }
  }

  std::vector<Derivation> out;
  if (!entry->schema) {
    Renaming renaming;
    for (std::size_t k = 0; k < refs.size(); ++k) {
      if (!unify(entry->premise[k], lines[refs[k] - 1], renaming)) {
        throw ProofError(connection.label + " premise " + entry->premise[k].to_string() +
                         " does not match line " + std::to_string(refs[k]) + " " +
                         lines[refs[k] - 1].to_string() + " under " + to_string(renaming));
      }
    }
    NameSupply fresh = names;
    try {
      ProgramList conclusion = apply_renaming(entry->conclusion, renaming, fresh);
      out.push_back({std::move(renaming), std::nullopt, std::move(conclusion)});
    } catch (const ValidationError& e) {
      throw ProofError(connection.label + ": " + e.what());
    }
    return out;
  }

  const SchemaKind kind = *entry->schema;
  const Statement& target = lines[refs[0] - 1];
  const std::size_t positions =
      kind == SchemaKind::kIdTypeOutput ? target.outputs().size() : target.inputs().size();
  std::string last_error = connection.label + ": " + target.to_string() + " has no elements";
  for (std::size_t i = 1; i <= positions; ++i) {
    SchemaParams params{refs[0], i, refs.size() > 1 ? refs[1] : 0, refs.size() > 2 ? refs[2] : 0};
    NameSupply fresh = names;
    try {
      SchemaInstance inst = instantiate_schema(store, kind, params, lines, fresh);
      const bool seen = std::any_of(out.begin(), out.end(), [&](const Derivation& d) {
        return d.conclusion == inst.conclusion;
      });
      if (!seen) out.push_back({{}, params, std::move(inst.conclusion)});
    } catch (const Error& e) {
      last_error = connection.label + ": " + e.what();
    }
  }
  if (out.empty()) throw ProofError(last_error);
  return out;
}

std::vector<DerivationOption> enumerate_options(const ProofState& state, const AxiomStore& store) {
  const auto lines = state.statements();
  const LineIndex index(lines);
  const NameSupply base = state.name_supply();
  const std::uint64_t basis = state.fingerprint();
  std::set<std::string> existing;
  for (const Statement& s : lines) existing.insert(s.to_string());

  std::vector<DerivationOption> out;
  std::set<std::string> seen;
  auto push = [&](const std::string& label, std::vector<std::size_t> refs, Renaming renaming,
                  std::optional<SchemaParams> params, ProgramList conclusion) {
    std::string key = ConnectionList{label, refs}.to_string() + render_program(conclusion);
    if (!seen.insert(std::move(key)).second) return;
    DerivationOption opt;
    opt.index = out.size();
    opt.label = label;
    opt.refs = std::move(refs);
    opt.renaming = std::move(renaming);
    opt.params = params;
    opt.already_derived = std::all_of(conclusion.begin(), conclusion.end(), [&](const Statement& s) {
      return existing.count(s.to_string()) != 0;
    });
    opt.conclusion = std::move(conclusion);
    opt.basis = basis;
    out.push_back(std::move(opt));
  };

  for (const StoreEntry& entry : store.entries()) {
    if (entry.schema) {
      for (const SchemaParams& params : schema_candidates(store, *entry.schema, lines)) {
        NameSupply fresh = base;
        SchemaInstance inst = instantiate_schema(store, *entry.schema, params, lines, fresh);
        push(entry.label, params.refs(*entry.schema), {}, params, std::move(inst.conclusion));
      }
      continue;
    }
    for (MatchResult& m : match_premise(entry.premise, index, lines.size())) {
      NameSupply fresh = base;
      ProgramList conclusion;
      try {
        conclusion = apply_renaming(entry.conclusion, m.renaming, fresh);
      } catch (const Error&) {
        continue;
      }
      push(entry.label, std::move(m.refs), std::move(m.renaming), std::nullopt,
           std::move(conclusion));
    }
  }
  return out;
}

ProofState apply_option(const ProofState& state, const AxiomStore& store,
                        const DerivationOption& option) {
  if (option.basis != state.fingerprint()) {
    throw ProofError("stale option: the proof changed since the options were listed");
  }
  const ConnectionList connection = option.connection();
  for (const Derivation& d : derive(state, store, connection, state.name_supply())) {
    if (d.conclusion == option.conclusion && d.params == option.params) {
      ProofState next = state;
      next.append(option.conclusion, connection);
      return next;
    }
  }
  throw ProofError("option " + connection.to_string() + " " + render_program(option.conclusion) +
                   " is not derivable from the current proof");
}

ProofState undo(const ProofState& state) {
  ProofState next = state;
  next.pop();
  return next;
}

// Extraction

std::string ExtractionResult::theorem_text() const {
  return "[" + render_program(premise) + ", " + conclusion.to_string() + "]";
}

ExtractionResult extract_theorem(const ProofState& state) {
  if (state.derived_count() == 0) throw ProofError("the proof has no derived lines");
  const std::size_t n = state.premise_count();
  const auto& lines = state.lines();
  auto dedupe_labels = [](const std::vector<std::size_t>& in) {
    std::vector<std::size_t> out;
    for (std::size_t l : in) {
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    return out;
  };

  std::vector<std::vector<std::size_t>> rounds;
  std::vector<std::size_t> d = dedupe_labels(lines.back().connection->refs);
  rounds.push_back(d);
  while (std::any_of(d.begin(), d.end(), [n](std::size_t l) { return l > n; })) {
    std::vector<std::size_t> next;
    for (std::size_t l : d) {
      if (l <= n) {
        next.push_back(l);
      } else {
        const auto& refs = lines[l - 1].connection->refs;
        next.insert(next.end(), refs.begin(), refs.end());
      }
    }
    d = dedupe_labels(next);
    rounds.push_back(d);
  }

  std::vector<std::size_t> used = d;
  std::sort(used.begin(), used.end());
  std::vector<std::size_t> redundant;
  ProgramList premise;
  for (std::size_t l = 1; l <= n; ++l) {
    if (std::binary_search(used.begin(), used.end(), l)) {
      premise.push_back(lines[l - 1].statement);
    } else {
      redundant.push_back(l);
    }
  }
  return ExtractionResult{std::move(used), std::move(redundant), std::move(rounds),
                          std::move(premise), lines.back().statement};
}

}  // namespace seqproof
