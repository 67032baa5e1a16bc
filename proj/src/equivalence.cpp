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

#include "seqproof/equivalence.hpp"

#include <algorithm>

#include "seqproof/error.hpp"

namespace seqproof {

std::string to_string(const Renaming& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& [from, to] : r) {
    if (!first) out += ", ";
    first = false;
    out += from + "->" + to.to_string();
  }
  out += '}';
  return out;
}

bool eqseq(const ProgramList& p, const ProgramList& q) {
  require_valid(p);
  if (p.size() != q.size()) return false;
  std::vector<std::string> a, b;
  for (const Statement& s : p) a.push_back(s.to_string());
  for (const Statement& s : q) b.push_back(s.to_string());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  return validate_program(q).valid();
}

namespace {

struct Bijection {
  std::map<std::string, std::string> forward;
  std::map<std::string, std::string> backward;

  bool link(const std::string& x, const std::string& y) {
    auto f = forward.find(x);
    auto b = backward.find(y);
    if (f == forward.end() && b == backward.end()) {
      forward.emplace(x, y);
      backward.emplace(y, x);
      return true;
    }
    return f != forward.end() && b != backward.end() && f->second == y && b->second == x;
  }
};

bool correspond(const Term& x, const Term& y, Bijection& bij) {
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Term::Kind::kIdentifier:
      return bij.link(x.name(), y.name());
    case Term::Kind::kLiteral:
      return x.value() == y.value();
    case Term::Kind::kList: {
      const auto& xs = x.elements();
      const auto& ys = y.elements();
      if (xs.size() != ys.size()) return false;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!correspond(xs[i], ys[i], bij)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool eqio(const ProgramList& p, const ProgramList& q) {
  if (p.size() != q.size()) {
    throw ShapeMismatch("programs have " + std::to_string(p.size()) + " and " +
                        std::to_string(q.size()) + " statements");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].name() != q[i].name() || p[i].inputs().size() != q[i].inputs().size() ||
        p[i].outputs().size() != q[i].outputs().size()) {
      throw ShapeMismatch("statement " + std::to_string(i + 1) + ": " + p[i].to_string() +
                          " and " + q[i].to_string() + " differ in name or arity");
    }
  }
  Bijection bij;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t k = 0; k < p[i].inputs().size(); ++k) {
      if (!correspond(p[i].inputs()[k], q[i].inputs()[k], bij)) return false;
    }
    for (std::size_t k = 0; k < p[i].outputs().size(); ++k) {
      if (!bij.link(p[i].outputs()[k], q[i].outputs()[k])) return false;
    }
  }
  return true;
}

namespace {

// Binds pattern variables into `r`, recording new keys on `trail` so a
// failed attempt can be rolled back.
bool bind_term(const Term& pattern, const Term& target, Renaming& r,
               std::vector<std::string>& trail) {
  switch (pattern.kind()) {
    case Term::Kind::kIdentifier: {
      auto it = r.find(pattern.name());
      if (it != r.end()) return it->second == target;
      r.emplace(pattern.name(), target);
      trail.push_back(pattern.name());
      return true;
    }
    case Term::Kind::kLiteral:
      return target.is_literal() && target.value() == pattern.value();
    case Term::Kind::kList: {
      if (!target.is_list() || target.elements().size() != pattern.elements().size()) return false;
      for (std::size_t i = 0; i < pattern.elements().size(); ++i) {
        if (!bind_term(pattern.elements()[i], target.elements()[i], r, trail)) return false;
      }
      return true;
    }
  }
  return false;
}

bool bind_statement(const Statement& pattern, const Statement& target, Renaming& r,
                    std::vector<std::string>& trail) {
  if (pattern.name() != target.name() || pattern.inputs().size() != target.inputs().size() ||
      pattern.outputs().size() != target.outputs().size()) {
    return false;
  }
  for (std::size_t k = 0; k < pattern.inputs().size(); ++k) {
    if (!bind_term(pattern.inputs()[k], target.inputs()[k], r, trail)) return false;
  }
  for (std::size_t k = 0; k < pattern.outputs().size(); ++k) {
    auto it = r.find(pattern.outputs()[k]);
    if (it != r.end()) {
      if (!it->second.is_identifier() || it->second.name() != target.outputs()[k]) return false;
    } else {
      r.emplace(pattern.outputs()[k], Term::identifier(target.outputs()[k]));
      trail.push_back(pattern.outputs()[k]);
    }
  }
  return true;
}

void rollback(Renaming& r, std::vector<std::string>& trail, std::size_t mark) {
  while (trail.size() > mark) {
    r.erase(trail.back());
    trail.pop_back();
  }
}

std::string shape_key(const Statement& s) {
  return s.name() + '/' + std::to_string(s.inputs().size()) + '/' +
         std::to_string(s.outputs().size());
}

}  // namespace

bool unify(const Statement& pattern, const Statement& target, Renaming& r) {
  std::vector<std::string> trail;
  if (bind_statement(pattern, target, r, trail)) return true;
  rollback(r, trail, 0);
  return false;
}

LineIndex::LineIndex(std::span<const Statement> lines) : lines_(lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) by_shape_[shape_key(lines[i])].push_back(i);
}

const std::vector<std::size_t>& LineIndex::candidates(const Statement& pattern) const {
  auto it = by_shape_.find(shape_key(pattern));
  return it == by_shape_.end() ? none_ : it->second;
}

namespace {

struct Search {
  const ProgramList& premise;
  std::vector<std::vector<std::size_t>> slots;  // filtered candidates per premise statement
  const LineIndex& proof;
  Renaming renaming;
  std::vector<std::string> trail;
  std::vector<std::size_t> refs;
  std::vector<MatchResult> results;

  void run(std::size_t k) {
    if (k == premise.size()) {
      results.push_back({refs, renaming});
      return;
    }
    for (std::size_t line : slots[k]) {
      const std::size_t mark = trail.size();
      if (bind_statement(premise[k], proof.lines()[line], renaming, trail)) {
        refs.push_back(line + 1);
        run(k + 1);
        refs.pop_back();
      }
      // Abort this branch at the first inconsistent binding.
      rollback(renaming, trail, mark);
    }
  }
};

}  // namespace

std::vector<MatchResult> match_premise(const ProgramList& premise, const LineIndex& proof,
                                       std::size_t upto) {
  upto = std::min(upto, proof.lines().size());
  Search search{premise, {}, proof, {}, {}, {}, {}};
  search.slots.resize(premise.size());
  for (std::size_t k = 0; k < premise.size(); ++k) {
    // Prune on constant positions and internal repetition before the joint
    // search: each slot alone must unify with an empty renaming.
    for (std::size_t line : proof.candidates(premise[k])) {
      if (line >= upto) break;
      Renaming probe;
      std::vector<std::string> trail;
      if (bind_statement(premise[k], proof.lines()[line], probe, trail)) {
        search.slots[k].push_back(line);
      }
    }
    if (search.slots[k].empty()) return {};
  }
  search.run(0);
  return std::move(search.results);
}

std::vector<MatchResult> match_premise(const ProgramList& premise,
                                       std::span<const Statement> proof, std::size_t upto) {
  return match_premise(premise, LineIndex(proof), upto);
}

NameSupply NameSupply::scripted(std::set<std::string> used, std::vector<std::string> names) {
  NameSupply supply(std::move(used));
  supply.script_ = std::move(names);
  supply.is_scripted_ = true;
  return supply;
}

std::string NameSupply::next() {
  if (is_scripted_) {
    if (script_pos_ >= script_.size()) throw ProofError("recorded output names exhausted");
    const std::string& name = script_[script_pos_++];
    if (!is_identifier_text(name)) throw ProofError("'" + name + "' is not an identifier");
    if (!used_.insert(name).second) {
      throw ProofError("output name '" + name + "' is already in use");
    }
    return name;
  }
  for (char c = 'a'; c <= 'z'; ++c) {
    std::string name(1, c);
    if (used_.insert(name).second) return name;
  }
  for (;;) {
    std::string name = "v" + std::to_string(++counter_);
    if (name.size() > max_len_) throw ProofError("fresh name pool exhausted");
    if (used_.insert(name).second) return name;
  }
}

namespace {

Term rename_term(const Term& t, const Renaming& r, const std::map<std::string, std::string>& fresh) {
  switch (t.kind()) {
    case Term::Kind::kIdentifier: {
      if (auto it = r.find(t.name()); it != r.end()) return it->second;
      if (auto it = fresh.find(t.name()); it != fresh.end()) return Term::identifier(it->second);
      throw ValidationError("variable " + t.name() + " is not bound by the premise");
    }
    case Term::Kind::kLiteral:
      return t;
    case Term::Kind::kList: {
      Term::List out;
      for (const Term& e : t.elements()) out.push_back(rename_term(e, r, fresh));
      return Term::list(std::move(out));
    }
  }
  return t;
}

}  // namespace

ProgramList apply_renaming(const ProgramList& p, const Renaming& r, NameSupply& fresh) {
  std::map<std::string, std::string> introduced;
  ProgramList out;
  for (const Statement& s : p) {
    TermList inputs;
    inputs.reserve(s.inputs().size());
    for (const Term& t : s.inputs()) inputs.push_back(rename_term(t, r, introduced));
    std::vector<std::string> outputs;
    for (const std::string& y : s.outputs()) {
      if (auto it = r.find(y); it != r.end()) {
        if (!it->second.is_identifier()) {
          throw ValidationError("output " + y + " is bound to the constant " +
                                it->second.to_string());
        }
        outputs.push_back(it->second.name());
      } else {
        auto [pos, inserted] = introduced.emplace(y, std::string());
        if (!inserted) throw ValidationError("output " + y + " is introduced twice");
        pos->second = fresh.next();
        outputs.push_back(pos->second);
      }
    }
    out.push_back(Statement(s.name(), std::move(inputs), std::move(outputs)));
  }
  return out;
}

}  // namespace seqproof
