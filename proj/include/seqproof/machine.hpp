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

// Concrete semantics of the atomic integer programs Int, Lt, Eq, Neq, Aid,
// Add, Mult and Div over machine integers in [-N, N], and an interpreter
// that decides whether a program list computes on given inputs.

#ifndef SEQPROOF_MACHINE_HPP_
#define SEQPROOF_MACHINE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seqproof/program.hpp"

namespace seqproof {

class MachineInt {
 public:
  // Throws BoundError outside [-cfg.max_int, cfg.max_int].
  MachineInt(std::int64_t value, const MachineConfig& cfg);

  std::int64_t value() const noexcept { return value_; }
  bool nonneg() const noexcept { return value_ >= 0; }
  bool positive() const noexcept { return value_ > 0; }

  friend bool operator==(const MachineInt&, const MachineInt&) = default;

 private:
  std::int64_t value_;
};

// Single-assignment variable bindings.
using Environment = std::map<std::string, MachineInt>;

// Binds `name` unless it is already bound. Returns false on rebinding.
bool try_bind(Environment& env, const std::string& name, MachineInt value);
std::string to_string(const Environment& env);

enum class ExecErrorKind {
  kNotAnInteger,
  kRangeOverflow,
  kRelationFailed,
  kDivisionUndefined,
  kUnboundInput,
  kRebinding,
};

std::string_view to_string(ExecErrorKind kind);

struct ExecError {
  ExecErrorKind kind;
  std::size_t statement;  // 1-based, first failing statement
  std::string detail;

  std::string message() const;
};

using ExecResult = std::variant<Environment, ExecError>;

inline bool computable(const ExecResult& r) { return std::holds_alternative<Environment>(r); }

bool is_atomic_program(std::string_view name) noexcept;

// Runs one atomic statement. `index` is reported in errors. Throws
// ValidationError when the statement is not an atomic program of the right
// arity.
ExecResult exec_atomic(const Statement& s, const Environment& env, const MachineConfig& cfg,
                       std::size_t index = 1);

// Runs p left to right from `env` and returns the full final environment.
ExecResult execute(const ProgramList& p, const Environment& env, const MachineConfig& cfg);

// Runs a valid program and returns only its main outputs. Throws
// ValidationError when p is not valid.
ExecResult run_program(const ProgramList& p, const Environment& inputs, const MachineConfig& cfg);

// The four closure failures of the axioms under a finite bound.
enum class ClosureScenario { kAssocAdd, kAssocMult, kDistFwd, kDistBwd };

std::string_view to_string(ClosureScenario s);
std::optional<ClosureScenario> parse_closure_scenario(std::string_view name);
std::vector<ClosureScenario> all_closure_scenarios();

struct ClosureRun {
  std::string description;
  ProgramList program;
  bool expect_computable;
  ExecResult result;

  bool as_expected() const { return computable(result) == expect_computable; }
};

struct ClosureReport {
  ClosureScenario scenario;
  Environment bindings;
  std::vector<ClosureRun> runs;

  bool reproduced() const;
  std::string to_string() const;
};

ClosureReport falsify_closure(ClosureScenario scenario, const MachineConfig& cfg);

// An input assignment under which the premise computes but the conclusion,
// run after it, does not.
struct Counterexample {
  Environment inputs;
  ExecError error;
};

// Enumerates every assignment of the premise's free identifiers over
// [-N, N]. `limit` caps the number of counterexamples collected.
std::vector<Counterexample> soundness_counterexamples(const ProgramList& premise,
                                                      const ProgramList& conclusion,
                                                      const MachineConfig& cfg,
                                                      std::size_t limit = 16);

}  // namespace seqproof

#endif  // SEQPROOF_MACHINE_HPP_
