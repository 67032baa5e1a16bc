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

#include "seqproof/machine.hpp"

#include <array>

#include "seqproof/error.hpp"

namespace seqproof {

MachineInt::MachineInt(std::int64_t value, const MachineConfig& cfg) : value_(value) {
  if (value < -cfg.max_int || value > cfg.max_int) {
    throw BoundError(std::to_string(value) + " is outside [-" + std::to_string(cfg.max_int) +
                     ", " + std::to_string(cfg.max_int) + "]");
  }
}

bool try_bind(Environment& env, const std::string& name, MachineInt value) {
  return env.emplace(name, value).second;
}

std::string to_string(const Environment& env) {
  std::string out;
  for (const auto& [name, v] : env) {
    if (!out.empty()) out += ' ';
    out += name + '=' + std::to_string(v.value());
  }
  return out;
}

std::string_view to_string(ExecErrorKind kind) {
  switch (kind) {
    case ExecErrorKind::kNotAnInteger: return "not-an-integer";
    case ExecErrorKind::kRangeOverflow: return "range-overflow";
    case ExecErrorKind::kRelationFailed: return "relation-failed";
    case ExecErrorKind::kDivisionUndefined: return "division-undefined";
    case ExecErrorKind::kUnboundInput: return "unbound-input";
    case ExecErrorKind::kRebinding: return "rebinding";
  }
  return "unknown";
}

std::string ExecError::message() const {
  return "statement " + std::to_string(statement) + ": " + std::string(to_string(kind)) + ": " +
         detail;
}

bool is_atomic_program(std::string_view name) noexcept {
  static constexpr std::array<std::string_view, 8> kNames = {"Int", "Lt",  "Eq",   "Neq",
                                                             "Aid", "Add", "Mult", "Div"};
  for (std::string_view n : kNames) {
    if (n == name) return true;
  }
  return false;
}

namespace {

struct Arity {
  std::size_t in;
  std::size_t out;
};

Arity arity_of(std::string_view name) {
  if (name == "Int") return {1, 0};
  if (name == "Aid") return {1, 1};
  if (name == "Lt" || name == "Eq" || name == "Neq") return {2, 0};
  return {2, 1};
}

// Evaluates one input term, or reports why it has no machine-integer value.
std::variant<std::int64_t, ExecError> evaluate(const Term& t, const Environment& env,
                                               const MachineConfig& cfg, std::size_t index) {
  switch (t.kind()) {
    case Term::Kind::kIdentifier: {
      auto it = env.find(t.name());
      if (it == env.end()) {
        return ExecError{ExecErrorKind::kUnboundInput, index, t.name() + " has no value"};
      }
      return it->second.value();
    }
    case Term::Kind::kLiteral:
      if (t.value() < -cfg.max_int || t.value() > cfg.max_int) {
        return ExecError{ExecErrorKind::kNotAnInteger, index,
                         "constant " + t.to_string() + " is not a machine integer"};
      }
      return t.value();
    case Term::Kind::kList:
      break;
  }
  return ExecError{ExecErrorKind::kNotAnInteger, index, t.to_string() + " is a list"};
}

}  // namespace

ExecResult exec_atomic(const Statement& s, const Environment& env, const MachineConfig& cfg,
                       std::size_t index) {
  if (!is_atomic_program(s.name())) {
    throw ValidationError(s.name() + " is not an atomic integer program");
  }
  const Arity arity = arity_of(s.name());
  if (s.inputs().size() != arity.in || s.outputs().size() != arity.out) {
    throw ValidationError(s.to_string() + ": wrong arity for " + s.name());
  }
  std::array<std::int64_t, 2> v{};
  for (std::size_t k = 0; k < arity.in; ++k) {
    auto r = evaluate(s.inputs()[k], env, cfg, index);
    if (auto* e = std::get_if<ExecError>(&r)) return *e;
    v[k] = std::get<std::int64_t>(r);
  }
  auto relation = [&](bool holds, const char* op) -> ExecResult {
    if (holds) return env;
    return ExecError{ExecErrorKind::kRelationFailed, index,
                     std::to_string(v[0]) + op + std::to_string(v[1]) + " does not hold"};
  };
  const std::string& name = s.name();
  if (name == "Int") return env;
  if (name == "Lt") return relation(v[0] < v[1], "<");
  if (name == "Eq") return relation(v[0] == v[1], "=");
  if (name == "Neq") return relation(v[0] != v[1], "/=");

  std::int64_t result = 0;
  bool overflow = false;
  if (name == "Aid") {
    result = v[0];
  } else if (name == "Add") {
    overflow = __builtin_add_overflow(v[0], v[1], &result);
  } else if (name == "Mult") {
    overflow = __builtin_mul_overflow(v[0], v[1], &result);
  } else {
    if (v[1] == 0 || v[0] % v[1] != 0) {
      return ExecError{ExecErrorKind::kDivisionUndefined, index,
                       std::to_string(v[0]) + "/" + std::to_string(v[1]) + " is not exact"};
    }
    result = v[0] / v[1];
  }
  if (overflow || result < -cfg.max_int || result > cfg.max_int) {
    return ExecError{ExecErrorKind::kRangeOverflow, index,
                     s.outputs()[0] + " would be outside [-" + std::to_string(cfg.max_int) + ", " +
                         std::to_string(cfg.max_int) + "]"};
  }
  Environment out = env;
  if (!try_bind(out, s.outputs()[0], MachineInt(result, cfg))) {
    return ExecError{ExecErrorKind::kRebinding, index, s.outputs()[0] + " is already bound"};
  }
  return out;
}

ExecResult execute(const ProgramList& p, const Environment& env, const MachineConfig& cfg) {
  ExecResult state = env;
  for (std::size_t i = 0; i < p.size(); ++i) {
    state = exec_atomic(p[i], std::get<Environment>(state), cfg, i + 1);
    if (!computable(state)) break;
  }
  return state;
}

ExecResult run_program(const ProgramList& p, const Environment& inputs,
                       const MachineConfig& cfg) {
  require_valid(p);
  ExecResult r = execute(p, inputs, cfg);
  if (!computable(r)) return r;
  const Environment& full = std::get<Environment>(r);
  Environment out;
  for (const std::string& y : derive_io(p).outputs) out.emplace(y, full.at(y));
  return out;
}

// Closure scenarios

std::string_view to_string(ClosureScenario s) {
  switch (s) {
    case ClosureScenario::kAssocAdd: return "assoc-add";
    case ClosureScenario::kAssocMult: return "assoc-mult";
    case ClosureScenario::kDistFwd: return "dist-fwd";
    case ClosureScenario::kDistBwd: return "dist-bwd";
  }
  return "unknown";
}

std::vector<ClosureScenario> all_closure_scenarios() {
  return {ClosureScenario::kAssocAdd, ClosureScenario::kAssocMult, ClosureScenario::kDistFwd,
          ClosureScenario::kDistBwd};
}

std::optional<ClosureScenario> parse_closure_scenario(std::string_view name) {
  for (ClosureScenario s : all_closure_scenarios()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool ClosureReport::reproduced() const {
  for (const ClosureRun& run : runs) {
    if (!run.as_expected()) return false;
  }
  return !runs.empty();
}

std::string ClosureReport::to_string() const {
  std::string out = std::string(seqproof::to_string(scenario)) + " with " +
                    seqproof::to_string(bindings) + "\n";
  for (const ClosureRun& run : runs) {
    out += "  " + run.description + " " + render_program(run.program) + ": ";
    if (const auto* env = std::get_if<Environment>(&run.result)) {
      out += "computes " + seqproof::to_string(*env);
    } else {
      out += std::get<ExecError>(run.result).message();
    }
    out += '\n';
  }
  return out;
}

ClosureReport falsify_closure(ClosureScenario scenario, const MachineConfig& cfg) {
  const std::int64_t n = cfg.max_int;
  struct Part {
    const char* description;
    const char* program;
    bool computes;
  };
  std::array<std::int64_t, 3> abc{};
  std::vector<Part> parts;
  switch (scenario) {
    case ClosureScenario::kAssocAdd:
      abc = {-n, n, 1};
      parts = {{"(a+b)+c", "[Add([a,b],[d]), Add([d,c],[x])]", true},
               {"b+c", "[Add([b,c],[e])]", false},
               {"a+(b+c)", "[Add([b,c],[e]), Add([a,e],[y])]", false}};
      break;
    case ClosureScenario::kAssocMult:
      abc = {0, n, 2};
      parts = {{"(a*b)*c", "[Mult([a,b],[d]), Mult([d,c],[x])]", true},
               {"b*c", "[Mult([b,c],[e])]", false},
               {"a*(b*c)", "[Mult([b,c],[e]), Mult([a,e],[y])]", false}};
      break;
    case ClosureScenario::kDistFwd:
      abc = {n, n, -n};
      parts = {{"a*(b+c)", "[Add([b,c],[d]), Mult([a,d],[x])]", true},
               {"a*b", "[Mult([a,b],[u])]", false},
               {"a*c", "[Mult([a,c],[v])]", false}};
      break;
    case ClosureScenario::kDistBwd:
      abc = {0, n, n};
      parts = {{"a*b+a*c", "[Mult([a,b],[u]), Mult([a,c],[v]), Add([u,v],[y])]", true},
               {"b+c", "[Add([b,c],[d])]", false},
               {"a*(b+c)", "[Add([b,c],[d]), Mult([a,d],[x])]", false}};
      break;
  }
  ClosureReport report{scenario, {}, {}};
  report.bindings.emplace("a", MachineInt(abc[0], cfg));
  report.bindings.emplace("b", MachineInt(abc[1], cfg));
  report.bindings.emplace("c", MachineInt(abc[2], cfg));
  for (const Part& part : parts) {
    ProgramList p = parse_program(part.program);
    ExecResult r = run_program(p, report.bindings, cfg);
    report.runs.push_back({part.description, std::move(p), part.computes, std::move(r)});
  }
  return report;
}

std::vector<Counterexample> soundness_counterexamples(const ProgramList& premise,
                                                      const ProgramList& conclusion,
                                                      const MachineConfig& cfg,
                                                      std::size_t limit) {
  std::vector<std::string> vars;
  for (const Term& t : derive_io(premise).inputs) {
    if (t.is_identifier()) vars.push_back(t.name());
  }
  const std::int64_t n = cfg.max_int;
  std::vector<std::int64_t> values(vars.size(), -n);
  std::vector<Counterexample> found;
  for (;;) {
    Environment env;
    for (std::size_t i = 0; i < vars.size(); ++i) env.emplace(vars[i], MachineInt(values[i], cfg));
    ExecResult before = execute(premise, env, cfg);
    if (computable(before)) {
      ExecResult after = execute(conclusion, std::get<Environment>(before), cfg);
      if (!computable(after)) {
        found.push_back({env, std::get<ExecError>(after)});
        if (found.size() >= limit) break;
      }
    }
    // Odometer step over [-n, n]^k.
    std::size_t i = 0;
    while (i < values.size() && values[i] == n) values[i++] = -n;
    if (i == values.size()) break;
    ++values[i];
  }
  return found;
}

}  // namespace seqproof
