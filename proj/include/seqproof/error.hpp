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

#ifndef SEQPROOF_ERROR_HPP_
#define SEQPROOF_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqproof {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text. position() is a 0-based character offset into the input
// that was being parsed.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A machine bound (string length, list length, integer range) was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

// A list operation's precondition failed (index range, extraction of an
// element that is not present).
class ListError : public Error {
 public:
  using Error::Error;
};

// Statement or program well-formedness violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two programs handed to an equivalence check do not have the same shape.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed axiom file, duplicate label, or ill-formed axiom/theorem.
class StoreError : public Error {
 public:
  using Error::Error;
};

// Proof-session misuse: stale option, nothing to undo, bad schema parameters.
class ProofError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqproof

#endif  // SEQPROOF_ERROR_HPP_
