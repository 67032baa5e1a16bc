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

#include "seqproof/axiom_store.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "seqproof/error.hpp"

namespace seqproof {

namespace {

constexpr std::string_view kHeaderKey = "integer-programs";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_entry_label(std::string_view label) {
  if (label.size() < 2 || (label[0] != 'A' && label[0] != 'T')) return false;
  return std::all_of(label.begin() + 1, label.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

std::string_view keyword(SchemaKind kind) {
  switch (kind) {
    case SchemaKind::kIdTypeInput: return "id-type-input";
    case SchemaKind::kIdTypeOutput: return "id-type-output";
    case SchemaKind::kSubstExist: return "subst-exist";
    case SchemaKind::kSubstEq: return "subst-eq";
  }
  return "";
}

std::optional<SchemaKind> parse_schema_keyword(std::string_view word) {
  for (SchemaKind k : {SchemaKind::kIdTypeInput, SchemaKind::kIdTypeOutput,
                       SchemaKind::kSubstExist, SchemaKind::kSubstEq}) {
    if (keyword(k) == word) return k;
  }
  return std::nullopt;
}

std::size_t schema_premise_length(SchemaKind kind) {
  switch (kind) {
    case SchemaKind::kIdTypeInput:
    case SchemaKind::kIdTypeOutput:
      return 1;
    case SchemaKind::kSubstExist:
      return 2;
    case SchemaKind::kSubstEq:
      return 3;
  }
  return 0;
}

std::size_t StoreEntry::premise_length() const {
  return schema ? schema_premise_length(*schema) : premise.size();
}

std::string StoreEntry::to_string() const {
  if (schema) return label + " : builtin " + std::string(keyword(*schema));
  return label + " : " + render_program(premise) + " => " + render_program(conclusion);
}

void check_well_formed(const ProgramList& premise, const ProgramList& conclusion) {
  ValidationReport report = validate_program(premise);
  if (!report.valid()) throw StoreError("premise is not a valid program: " + report.to_string());
  if (conclusion.empty()) throw StoreError("empty conclusion");
  std::set<std::string> bound;
  for (const Statement& s : premise) {
    std::vector<std::string> ids;
    for (const Term& t : s.inputs()) collect_identifiers(t, ids);
    bound.insert(ids.begin(), ids.end());
    bound.insert(s.outputs().begin(), s.outputs().end());
  }
  std::set<std::string> introduced;
  for (const Statement& s : conclusion) {
    std::vector<std::string> ids;
    for (const Term& t : s.inputs()) collect_identifiers(t, ids);
    for (const std::string& id : ids) {
      if (!bound.count(id) && !introduced.count(id)) {
        throw StoreError("conclusion input " + id + " is not bound by the premise");
      }
    }
    for (const std::string& y : s.outputs()) {
      if (bound.count(y)) throw StoreError("conclusion output " + y + " is already a premise name");
      if (!introduced.insert(y).second) throw StoreError("conclusion output " + y + " repeats");
    }
  }
}

AxiomStore::AxiomStore() : integer_programs_{"Int", "Lt", "Eq", "Neq", "Aid", "Add", "Mult", "Div"} {}

AxiomStore AxiomStore::parse(std::string_view text) {
  AxiomStore store;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      store.layout_.push_back({Item::Type::kText, std::string(raw), 0});
      continue;
    }
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw StoreError(where + "expected 'LABEL : ...'");
    const std::string label(trim(line.substr(0, colon)));
    const std::string_view body = trim(line.substr(colon + 1));
    if (label == kHeaderKey) {
      if (store.has_header_) throw StoreError(where + "second integer-programs line");
      store.integer_programs_ = split_words(body);
      for (const std::string& name : store.integer_programs_) {
        if (!is_identifier_text(name)) throw StoreError(where + "'" + name + "' is not a name");
      }
      store.has_header_ = true;
      store.layout_.push_back({Item::Type::kHeader, {}, 0});
      continue;
    }
    if (!is_entry_label(label)) throw StoreError(where + "bad label '" + label + "'");
    StoreEntry entry;
    entry.label = label;
    entry.kind = label[0] == 'T' ? EntryKind::kTheorem : EntryKind::kAxiom;
    if (body.rfind("builtin", 0) == 0) {
      const std::vector<std::string> words = split_words(body);
      if (words.size() != 2) throw StoreError(where + "expected 'builtin KEYWORD'");
      entry.schema = parse_schema_keyword(words[1]);
      if (!entry.schema) throw StoreError(where + "unknown schema '" + words[1] + "'");
      if (entry.kind == EntryKind::kTheorem) throw StoreError(where + "a theorem cannot be a schema");
    } else {
      const std::size_t arrow = body.find("=>");
      if (arrow == std::string_view::npos) throw StoreError(where + "expected '=>'");
      try {
        entry.premise = parse_program(trim(body.substr(0, arrow)));
        entry.conclusion = parse_program(trim(body.substr(arrow + 2)));
      } catch (const Error& e) {
        throw StoreError(where + e.what());
      }
    }
    try {
      store.add(std::move(entry));
    } catch (const StoreError& e) {
      throw StoreError(where + e.what());
    }
  }
  return store;
}

const StoreEntry* AxiomStore::find(std::string_view label) const {
  for (const StoreEntry& e : entries_) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

bool AxiomStore::is_integer_program(std::string_view name) const {
  return std::find(integer_programs_.begin(), integer_programs_.end(), name) !=
         integer_programs_.end();
}

std::size_t AxiomStore::axiom_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const StoreEntry& e) { return e.kind == EntryKind::kAxiom; }));
}

std::size_t AxiomStore::theorem_count() const { return entries_.size() - axiom_count(); }

void AxiomStore::add(StoreEntry entry) {
  if (!is_entry_label(entry.label)) throw StoreError("bad label '" + entry.label + "'");
  if (find(entry.label)) throw StoreError("duplicate label " + entry.label);
  if (!entry.schema) {
    try {
      check_well_formed(entry.premise, entry.conclusion);
    } catch (const StoreError& e) {
      throw StoreError(entry.label + ": " + e.what());
    }
  }
  layout_.push_back({Item::Type::kEntry, {}, entries_.size()});
  entries_.push_back(std::move(entry));
}

std::string AxiomStore::add_theorem(ProgramList premise, ProgramList conclusion) {
  std::size_t next = 1;
  for (const StoreEntry& e : entries_) {
    if (e.kind == EntryKind::kTheorem) next = std::max(next, std::stoul(e.label.substr(1)) + 1);
  }
  StoreEntry entry{"T" + std::to_string(next), std::nullopt, std::move(premise),
                   std::move(conclusion), EntryKind::kTheorem};
  add(std::move(entry));
  if (source_) save(*source_);
  return entries_.back().label;
}

std::string AxiomStore::serialize() const {
  std::string out;
  bool header_written = false;
  auto header = [&] {
    out += std::string(kHeaderKey) + " :";
    for (const std::string& name : integer_programs_) out += ' ' + name;
    out += '\n';
    header_written = true;
  };
  for (const Item& item : layout_) {
    switch (item.type) {
      case Item::Type::kText:
        out += item.text + '\n';
        break;
      case Item::Type::kHeader:
        header();
        break;
      case Item::Type::kEntry:
        if (!header_written && !has_header_) header();
        out += entries_[item.entry].to_string() + '\n';
        break;
    }
  }
  return out;
}

void AxiomStore::save(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StoreError("cannot write " + tmp.string());
    out << serialize();
    out.flush();
    if (!out) throw StoreError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw StoreError("cannot replace " + path.string() + ": " + ec.message());
}

AxiomStore load_store(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StoreError("cannot read axiom file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  AxiomStore store = AxiomStore::parse(text.str());
  store.set_source_path(path);
  return store;
}

// Schemas

std::vector<std::size_t> SchemaParams::refs(SchemaKind kind) const {
  switch (kind) {
    case SchemaKind::kIdTypeInput:
    case SchemaKind::kIdTypeOutput:
      return {target};
    case SchemaKind::kSubstExist:
      return {target, equality};
    case SchemaKind::kSubstEq:
      return {target, equality, copy};
  }
  return {};
}

namespace {

const Statement& line_at(std::span<const Statement> lines, std::size_t label, const char* role) {
  if (label < 1 || label > lines.size()) {
    throw ProofError(std::string(role) + " line " + std::to_string(label) + " does not exist");
  }
  return lines[label - 1];
}

// The substituted input list x|_{i->a} for target P(x,y) and Eq([x_i,a],[]).
TermList substituted_inputs(const Statement& target, std::size_t index, const Statement& eq) {
  if (eq.name() != "Eq" || eq.inputs().size() != 2 || !eq.outputs().empty()) {
    throw ProofError(eq.to_string() + " is not an equality");
  }
  if (index < 1 || index > target.inputs().size()) {
    throw ProofError("element " + std::to_string(index) + " is out of range for " +
                     target.to_string());
  }
  if (target.inputs()[index - 1] != eq.inputs()[0]) {
    throw ProofError(eq.to_string() + " does not start with element " + std::to_string(index) +
                     " of " + target.to_string());
  }
  return substitute(target.inputs(), index, eq.inputs()[1]);
}

}  // namespace

SchemaInstance instantiate_schema(const AxiomStore& store, SchemaKind kind,
                                  const SchemaParams& params, std::span<const Statement> lines,
                                  NameSupply& fresh) {
  const Statement& target = line_at(lines, params.target, "target");
  if (!store.is_integer_program(target.name())) {
    throw ProofError(target.name() + " is not an integer program");
  }
  SchemaInstance out;
  out.premise.push_back(target);
  switch (kind) {
    case SchemaKind::kIdTypeInput:
    case SchemaKind::kIdTypeOutput: {
      Term element = Term::literal(0);
      if (kind == SchemaKind::kIdTypeInput) {
        if (params.index < 1 || params.index > target.inputs().size()) {
          throw ProofError("input " + std::to_string(params.index) + " is out of range for " +
                           target.to_string());
        }
        element = target.inputs()[params.index - 1];
        if (element.is_list()) throw ProofError(element.to_string() + " is a list");
      } else {
        if (params.index < 1 || params.index > target.outputs().size()) {
          throw ProofError("output " + std::to_string(params.index) + " is out of range for " +
                           target.to_string());
        }
        element = Term::identifier(target.outputs()[params.index - 1]);
      }
      out.conclusion.push_back(Statement("Int", {element}, {}));
      break;
    }
    case SchemaKind::kSubstExist: {
      const Statement& eq = line_at(lines, params.equality, "equality");
      TermList inputs = substituted_inputs(target, params.index, eq);
      out.premise.push_back(eq);
      std::vector<std::string> outputs;
      for (std::size_t k = 0; k < target.outputs().size(); ++k) outputs.push_back(fresh.next());
      out.conclusion.push_back(Statement(target.name(), std::move(inputs), std::move(outputs)));
      break;
    }
    case SchemaKind::kSubstEq: {
      const Statement& eq = line_at(lines, params.equality, "equality");
      const Statement& copy = line_at(lines, params.copy, "copy");
      TermList inputs = substituted_inputs(target, params.index, eq);
      if (target.outputs().empty()) throw ProofError(target.to_string() + " has no outputs");
      if (copy.name() != target.name() || copy.inputs() != inputs ||
          copy.outputs().size() != target.outputs().size()) {
        throw ProofError(copy.to_string() + " is not the substituted copy of " +
                         target.to_string());
      }
      out.premise.push_back(eq);
      out.premise.push_back(copy);
      for (std::size_t k = 0; k < target.outputs().size(); ++k) {
        out.conclusion.push_back(Statement(
            "Eq", {Term::identifier(copy.outputs()[k]), Term::identifier(target.outputs()[k])},
            {}));
      }
      break;
    }
  }
  return out;
}

std::vector<SchemaParams> schema_candidates(const AxiomStore& store, SchemaKind kind,
                                            std::span<const Statement> lines) {
  std::vector<SchemaParams> out;
  std::vector<std::size_t> equalities;
  for (std::size_t e = 0; e < lines.size(); ++e) {
    const Statement& s = lines[e];
    if (s.name() == "Eq" && s.inputs().size() == 2 && s.outputs().empty()) equalities.push_back(e);
  }
  for (std::size_t t = 0; t < lines.size(); ++t) {
    const Statement& target = lines[t];
    if (!store.is_integer_program(target.name())) continue;
    switch (kind) {
      case SchemaKind::kIdTypeInput:
        for (std::size_t i = 0; i < target.inputs().size(); ++i) {
          if (!target.inputs()[i].is_list()) out.push_back({t + 1, i + 1, 0, 0});
        }
        break;
      case SchemaKind::kIdTypeOutput:
        for (std::size_t i = 0; i < target.outputs().size(); ++i) out.push_back({t + 1, i + 1, 0, 0});
        break;
      case SchemaKind::kSubstExist:
      case SchemaKind::kSubstEq:
        if (kind == SchemaKind::kSubstEq && target.outputs().empty()) break;
        for (std::size_t e : equalities) {
          for (std::size_t i = 0; i < target.inputs().size(); ++i) {
            if (target.inputs()[i] != lines[e].inputs()[0]) continue;
            if (kind == SchemaKind::kSubstExist) {
              out.push_back({t + 1, i + 1, e + 1, 0});
              continue;
            }
            const TermList inputs = substitute(target.inputs(), i + 1, lines[e].inputs()[1]);
            for (std::size_t c = 0; c < lines.size(); ++c) {
              const Statement& copy = lines[c];
              if (copy.name() == target.name() && copy.inputs() == inputs &&
                  copy.outputs().size() == target.outputs().size()) {
                out.push_back({t + 1, i + 1, e + 1, c + 1});
              }
            }
          }
        }
        break;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SchemaParams& a, const SchemaParams& b) {
    return std::tie(a.target, a.equality, a.copy, a.index) <
           std::tie(b.target, b.equality, b.copy, b.index);
  });
  return out;
}

}  // namespace seqproof
