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

#include "seqproof/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "seqproof/error.hpp"

namespace seqproof {

void MachineConfig::check() const {
  if (max_int < 1) throw BoundError("max_int must be at least 1");
  if (max_string_len < 1) throw BoundError("max_string_len must be at least 1");
  if (max_list_len < 1) throw BoundError("max_list_len must be at least 1");
}

Term Term::identifier(std::string name) {
  if (!is_identifier_text(name)) {
    throw std::invalid_argument("not an identifier: '" + name + "'");
  }
  Term t;
  t.value_ = std::move(name);
  return t;
}

Term Term::literal(std::int64_t value) {
  Term t;
  t.value_ = value;
  return t;
}

Term Term::list(List elements) {
  Term t;
  t.value_ = std::move(elements);
  return t;
}

bool operator<(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case Term::Kind::kIdentifier:
      return a.name() < b.name();
    case Term::Kind::kLiteral:
      return a.value() < b.value();
    case Term::Kind::kList:
      return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                          b.elements().begin(), b.elements().end());
  }
  return false;
}

void Term::append_to(std::string& out) const {
  switch (kind()) {
    case Kind::kIdentifier:
      out += name();
      break;
    case Kind::kLiteral:
      out += std::to_string(value());
      break;
    case Kind::kList: {
      out += '[';
      bool first = true;
      for (const Term& e : elements()) {
        if (!first) out += ',';
        first = false;
        e.append_to(out);
      }
      out += ']';
      break;
    }
  }
}

std::string Term::to_string() const {
  std::string out;
  append_to(out);
  return out;
}

std::string to_string(std::span<const Term> list) {
  std::string out = "[";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ',';
    list[i].append_to(out);
  }
  out += ']';
  return out;
}

bool is_identifier_text(std::string_view text) noexcept {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  return std::all_of(text.begin(), text.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

void collect_identifiers(const Term& t, std::vector<std::string>& out) {
  if (t.is_identifier()) {
    out.push_back(t.name());
  } else if (t.is_list()) {
    for (const Term& e : t.elements()) collect_identifiers(e, out);
  }
}

namespace {

bool term_mentions(const Term& t, std::string_view id) {
  if (t.is_identifier()) return t.name() == id;
  if (t.is_list()) {
    return std::any_of(t.elements().begin(), t.elements().end(),
                       [&](const Term& e) { return term_mentions(e, id); });
  }
  return false;
}

bool contains(std::span<const Term> list, const Term& t) {
  return std::find(list.begin(), list.end(), t) != list.end();
}

}  // namespace

bool mentions(std::span<const Term> list, std::string_view identifier) {
  return std::any_of(list.begin(), list.end(),
                     [&](const Term& t) { return term_mentions(t, identifier); });
}

TermList concat(std::span<const Term> a, std::span<const Term> b, const MachineConfig& cfg) {
  if (a.size() + b.size() > cfg.max_list_len) {
    throw BoundError("concatenation of length " + std::to_string(a.size() + b.size()) +
                     " exceeds the list bound " + std::to_string(cfg.max_list_len));
  }
  TermList out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

TermList intersect(std::span<const Term> a, std::span<const Term> b) {
  TermList out;
  for (const Term& t : a) {
    if (contains(b, t) && !contains(out, t)) out.push_back(t);
  }
  return out;
}

TermList dedupe(std::span<const Term> a) {
  TermList out;
  for (const Term& t : a) {
    if (!contains(out, t)) out.push_back(t);
  }
  return out;
}

TermList substitute(std::span<const Term> a, std::size_t i, Term x) {
  if (i < 1 || i > a.size()) {
    throw ListError("substitution index " + std::to_string(i) + " outside [1, " +
                    std::to_string(a.size()) + "]");
  }
  TermList out(a.begin(), a.end());
  out[i - 1] = std::move(x);
  return out;
}

TermList extract(std::span<const Term> a, std::span<const Term> b) {
  for (const Term& t : b) {
    if (!contains(a, t)) {
      throw ListError("cannot extract " + t.to_string() + ": not an element of " + to_string(a));
    }
  }
  TermList out;
  for (const Term& t : a) {
    if (!contains(b, t)) out.push_back(t);
  }
  return out;
}

bool is_sublist(std::span<const Term> b, std::span<const Term> a) {
  if (b.size() > a.size()) return false;
  std::vector<bool> taken(a.size(), false);
  for (const Term& t : b) {
    bool found = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!taken[j] && a[j] == t) {
        taken[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// TermReader

void TermReader::fail(const std::string& what) const { throw SyntaxError(what, pos_); }

void TermReader::skip_space() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool TermReader::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char TermReader::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

void TermReader::expect(char c) {
  if (peek() != c) {
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
    fail(std::string("expected '") + c + "' but found '" + text_[pos_] + "'");
  }
  ++pos_;
}

bool TermReader::consume(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

std::string TermReader::read_identifier() {
  skip_space();
  const std::size_t start = pos_;
  if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
    fail("expected an identifier");
  }
  while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  std::string id(text_.substr(start, pos_ - start));
  if (id.size() > cfg_.max_string_len) {
    throw BoundError("identifier '" + id + "' is longer than the string bound " +
                     std::to_string(cfg_.max_string_len));
  }
  return id;
}

std::int64_t TermReader::read_integer() {
  skip_space();
  const std::size_t start = pos_;
  if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
  const std::size_t digits = pos_;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  if (pos_ == digits) {
    pos_ = start;
    fail("expected an integer");
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
  if (ec != std::errc()) {
    pos_ = start;
    fail("integer literal out of range");
  }
  return value;
}

Term TermReader::read_term() {
  const char c = peek();
  if (c == '[') return Term::list(read_list());
  if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return Term::literal(read_integer());
  if (std::isalpha(static_cast<unsigned char>(c))) return Term::identifier(read_identifier());
  if (c == '\0') fail("expected a term but input ended");
  fail(std::string("unexpected character '") + c + "'");
}

TermList TermReader::read_list() {
  expect('[');
  TermList out;
  if (consume(']')) return out;
  do {
    out.push_back(read_term());
    if (out.size() > cfg_.max_list_len) {
      throw BoundError("list longer than the list bound " + std::to_string(cfg_.max_list_len));
    }
  } while (consume(','));
  expect(']');
  return out;
}

Term parse_term(std::string_view text, const MachineConfig& cfg) {
  TermReader reader(text, cfg);
  Term t = reader.read_term();
  if (!reader.at_end()) reader.fail("trailing characters after term");
  return t;
}

TermList parse_term_list(std::string_view text, const MachineConfig& cfg) {
  TermReader reader(text, cfg);
  TermList l = reader.read_list();
  if (!reader.at_end()) reader.fail("trailing characters after list");
  return l;
}

std::size_t TermHash::operator()(const Term& t) const {
  return std::hash<std::string>{}(t.to_string());
}

}  // namespace seqproof
