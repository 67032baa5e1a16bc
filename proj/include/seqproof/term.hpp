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

// Terms are the universal syntactic value: an identifier, a signed integer
// literal, or a nested list of terms. Program statements, axioms and proofs
// are all built from lists of terms.

#ifndef SEQPROOF_TERM_HPP_
#define SEQPROOF_TERM_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace seqproof {

// Machine parameters. Every bound is enforced with an explicit error at
// construction or parse time; nothing is silently truncated.
struct MachineConfig {
  std::int64_t max_int = 2147483647;  // integers range over [-max_int, max_int]
  std::size_t max_string_len = 32;    // identifiers, including fresh names
  std::size_t max_list_len = 4096;    // elements of any one list
  std::size_t alphabet_size = 72;     // informational: letters, digits, . , + - * / ( ) [ ]

  // Throws BoundError when a field is not positive.
  void check() const;
};

class Term {
 public:
  using List = std::vector<Term>;
  enum class Kind { kIdentifier, kLiteral, kList };

  // Throws std::invalid_argument unless `name` is a letter followed by
  // letters or digits.
  static Term identifier(std::string name);
  static Term literal(std::int64_t value);
  static Term list(List elements);

  Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }
  bool is_identifier() const noexcept { return kind() == Kind::kIdentifier; }
  bool is_literal() const noexcept { return kind() == Kind::kLiteral; }
  bool is_list() const noexcept { return kind() == Kind::kList; }

  // Accessors require the matching kind.
  const std::string& name() const { return std::get<std::string>(value_); }
  std::int64_t value() const { return std::get<std::int64_t>(value_); }
  const List& elements() const { return std::get<List>(value_); }

  std::string to_string() const;
  void append_to(std::string& out) const;

  friend bool operator==(const Term& a, const Term& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  // Total order: identifiers < literals < lists, then by content.
  friend bool operator<(const Term& a, const Term& b);

 private:
  Term() = default;
  std::variant<std::string, std::int64_t, List> value_;
};

using TermList = std::vector<Term>;

std::string to_string(std::span<const Term> list);

bool is_identifier_text(std::string_view text) noexcept;

// Every identifier occurring in `t`, recursively, in reading order.
void collect_identifiers(const Term& t, std::vector<std::string>& out);
bool mentions(std::span<const Term> list, std::string_view identifier);

// List operations. Indices are 1-based.

// a followed by b. Throws BoundError when the result exceeds max_list_len.
TermList concat(std::span<const Term> a, std::span<const Term> b,
                const MachineConfig& cfg = {});
// Elements of a that occur in b, in a's order, without repeats.
TermList intersect(std::span<const Term> a, std::span<const Term> b);
// First occurrence of every element, in order.
TermList dedupe(std::span<const Term> a);
// a with position i replaced by x. Throws ListError unless 1 <= i <= len(a).
TermList substitute(std::span<const Term> a, std::size_t i, Term x);
// Elements of a not in b, in a's order. Throws ListError when some element of
// b does not occur in a.
TermList extract(std::span<const Term> a, std::span<const Term> b);
// True iff b selects distinct positions of a, in any order.
bool is_sublist(std::span<const Term> b, std::span<const Term> a);

// Recursive-descent reader over the term grammar:
//   list := "[" (term ("," term)*)? "]"
//   term := identifier | integer | list
// Whitespace between tokens is skipped. Used directly by the program and
// listing parsers, which layer their own productions on top.
class TermReader {
 public:
  explicit TermReader(std::string_view text, const MachineConfig& cfg = {})
      : text_(text), cfg_(cfg) {}

  Term read_term();
  TermList read_list();
  std::string read_identifier();
  std::int64_t read_integer();

  void skip_space();
  bool at_end();
  // Next non-space character, or '\0' at end of input.
  char peek();
  void expect(char c);
  bool consume(char c);

  std::size_t position() const noexcept { return pos_; }
  std::string_view rest() const noexcept { return text_.substr(pos_); }
  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  MachineConfig cfg_;
};

Term parse_term(std::string_view text, const MachineConfig& cfg = {});
TermList parse_term_list(std::string_view text, const MachineConfig& cfg = {});

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

}  // namespace seqproof

#endif  // SEQPROOF_TERM_HPP_
