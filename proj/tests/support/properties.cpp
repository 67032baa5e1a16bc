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

#include "properties.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>

#include "seqproof/error.hpp"

namespace seqproof::testing {

std::string source_path(const std::string& relative) {
  return std::string(SEQPROOF_SOURCE_DIR) + "/" + relative;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void PropertyResult::fail(const std::string& message) {
  if (failures++ == 0) first_failure = message;
}

std::string PropertyResult::summary() const {
  std::string out = name + ": " + std::to_string(cases) + " cases, " + std::to_string(failures) +
                    " failures";
  if (failures) out += " (first: " + first_failure + ")";
  return out;
}

// Generators

int Gen::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Gen::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

Term Gen::small_term(int depth) {
  const int r = uniform(0, 9);
  if (r < 5) return Term::identifier(std::string(1, static_cast<char>('x' + uniform(0, 2))));
  if (r < 9 || depth <= 0) return Term::literal(uniform(-1, 1));
  Term::List elements;
  for (int i = uniform(0, 2); i > 0; --i) elements.push_back(small_term(depth - 1));
  return Term::list(std::move(elements));
}

TermList Gen::small_list(int max_len) {
  TermList out;
  for (int i = uniform(0, max_len); i > 0; --i) out.push_back(small_term(0));
  return out;
}

ProgramList Gen::valid_program(int max_len) {
  struct Shape {
    const char* name;
    int in;
    int out;
  };
  static const std::vector<Shape> kShapes = {{"Add", 2, 1}, {"Mult", 2, 1}, {"Div", 2, 1},
                                             {"Eq", 2, 0},  {"Lt", 2, 0},   {"Int", 1, 0},
                                             {"Aid", 1, 1}, {"Sum", -1, -1}};
  std::vector<std::string> pool = {"a", "b", "c", "d"};
  ProgramList p;
  int counter = 0;
  for (int n = uniform(0, max_len); n > 0; --n) {
    const Shape& shape = pick(kShapes);
    const int in = shape.in >= 0 ? shape.in : uniform(1, 3);
    const int out = shape.out >= 0 ? shape.out : uniform(0, 2);
    TermList inputs;
    for (int k = 0; k < in; ++k) {
      if (chance(0.15)) {
        inputs.push_back(Term::literal(uniform(-1, 2)));
      } else if (chance(0.05)) {
        inputs.push_back(Term::list({Term::identifier(pick(pool)), Term::identifier(pick(pool))}));
      } else {
        inputs.push_back(Term::identifier(pick(pool)));
      }
    }
    std::vector<std::string> outputs;
    for (int k = 0; k < out; ++k) outputs.push_back("o" + std::to_string(counter++));
    p.push_back(Statement(shape.name, std::move(inputs), outputs));
    pool.insert(pool.end(), outputs.begin(), outputs.end());
  }
  return p;
}

// Oracles

bool brute_is_sublist(const TermList& b, const TermList& a) {
  if (b.size() > a.size()) return false;
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != b.size()) continue;
    TermList chosen;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (mask & (1u << j)) chosen.push_back(a[j]);
    }
    if (std::is_permutation(chosen.begin(), chosen.end(), b.begin(), b.end())) return true;
  }
  return false;
}

namespace {

Term rename_term(const Term& t, const std::map<std::string, std::string>& map) {
  if (t.is_identifier()) {
    auto it = map.find(t.name());
    return it == map.end() ? t : Term::identifier(it->second);
  }
  if (t.is_literal()) return t;
  Term::List out;
  for (const Term& e : t.elements()) out.push_back(rename_term(e, map));
  return Term::list(std::move(out));
}

std::vector<std::string> identifiers_in_order(const ProgramList& p) {
  std::vector<std::string> ids;
  auto add = [&ids](const std::string& id) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  };
  for (const Statement& s : p) {
    std::vector<std::string> in;
    for (const Term& t : s.inputs()) collect_identifiers(t, in);
    for (const std::string& id : in) add(id);
    for (const std::string& y : s.outputs()) add(y);
  }
  return ids;
}

bool naive_term(const Term& pattern, const Term& target, Renaming& r) {
  if (pattern.is_identifier()) {
    auto [it, inserted] = r.emplace(pattern.name(), target);
    return inserted || it->second == target;
  }
  if (pattern.is_literal()) return pattern == target;
  if (!target.is_list() || target.elements().size() != pattern.elements().size()) return false;
  for (std::size_t i = 0; i < pattern.elements().size(); ++i) {
    if (!naive_term(pattern.elements()[i], target.elements()[i], r)) return false;
  }
  return true;
}

bool naive_statement(const Statement& pattern, const Statement& target, Renaming& r) {
  if (pattern.name() != target.name() || pattern.inputs().size() != target.inputs().size() ||
      pattern.outputs().size() != target.outputs().size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.inputs().size(); ++i) {
    if (!naive_term(pattern.inputs()[i], target.inputs()[i], r)) return false;
  }
  for (std::size_t i = 0; i < pattern.outputs().size(); ++i) {
    if (!naive_term(Term::identifier(pattern.outputs()[i]), Term::identifier(target.outputs()[i]),
                    r)) {
      return false;
    }
  }
  return true;
}

}  // namespace

ProgramList rename_all(const ProgramList& p, const std::map<std::string, std::string>& map) {
  ProgramList out;
  for (const Statement& s : p) {
    TermList inputs;
    for (const Term& t : s.inputs()) inputs.push_back(rename_term(t, map));
    std::vector<std::string> outputs;
    for (const std::string& y : s.outputs()) {
      auto it = map.find(y);
      outputs.push_back(it == map.end() ? y : it->second);
    }
    out.push_back(Statement(s.name(), std::move(inputs), std::move(outputs)));
  }
  return out;
}

bool brute_eqio(const ProgramList& p, const ProgramList& q) {
  const std::vector<std::string> from = identifiers_in_order(p);
  std::vector<std::string> to = identifiers_in_order(q);
  if (from.size() != to.size()) return false;
  std::sort(to.begin(), to.end());
  do {
    std::map<std::string, std::string> map;
    for (std::size_t i = 0; i < from.size(); ++i) map[from[i]] = to[i];
    if (rename_all(p, map) == q) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

std::vector<MatchResult> brute_match(const ProgramList& premise, const std::vector<Statement>& lines,
                                     std::size_t upto) {
  std::vector<MatchResult> out;
  const std::size_t k = premise.size();
  upto = std::min(upto, lines.size());
  if (k > 0 && upto == 0) return out;
  std::vector<std::size_t> tuple(k, 0);
  for (;;) {
    Renaming r;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) ok = naive_statement(premise[j], lines[tuple[j]], r);
    if (ok) {
      std::vector<std::size_t> refs;
      for (std::size_t t : tuple) refs.push_back(t + 1);
      out.push_back({std::move(refs), std::move(r)});
    }
    // Odometer with the last slot fastest gives lexicographic order.
    std::size_t j = k;
    while (j > 0 && tuple[j - 1] + 1 == upto) tuple[--j] = 0;
    if (j == 0) break;
    ++tuple[j - 1];
  }
  return out;
}

// Properties

PropertyResult check_sublist_oracle(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"is_sublist oracle (n <= 6)"};
  Gen gen(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const TermList a = gen.small_list(6);
    TermList b;
    if (gen.chance(0.5)) {
      for (const Term& t : a) {
        if (gen.chance(0.6)) b.push_back(t);
      }
      if (gen.chance(0.3)) b.push_back(gen.small_term(0));
      std::shuffle(b.begin(), b.end(), gen.engine());
    } else {
      b = gen.small_list(6);
    }
    ++result.cases;
    if (is_sublist(b, a) != brute_is_sublist(b, a)) {
      result.fail("is_sublist(" + to_string(b) + ", " + to_string(a) + ")");
    }
  }
  return result;
}

PropertyResult check_list_laws(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"list operation laws"};
  Gen gen(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const TermList a = gen.small_list(6);
    const TermList b = gen.small_list(6);
    const std::string where = to_string(a) + " " + to_string(b);
    ++result.cases;
    const TermList d = dedupe(a);
    if (dedupe(d) != d || !is_sublist(d, a)) result.fail("dedupe " + where);
    const TermList ab = concat(a, b);
    if (ab.size() != a.size() + b.size() || !is_sublist(a, ab) || !is_sublist(b, ab)) {
      result.fail("concat " + where);
    }
    const TermList both = intersect(a, b);
    for (const Term& t : both) {
      if (std::find(a.begin(), a.end(), t) == a.end() || std::find(b.begin(), b.end(), t) == b.end()) {
        result.fail("intersect " + where);
      }
    }
    if (dedupe(both) != both) result.fail("intersect repeats " + where);
    const TermList rest = extract(a, both);
    const auto outside_b = static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [&](const Term& t) {
      return std::find(b.begin(), b.end(), t) == b.end();
    }));
    if (rest.size() != outside_b) result.fail("extract " + where);
    if (!is_sublist(a, a) || !is_sublist({}, a)) result.fail("is_sublist reflexive " + where);
    if (!a.empty()) {
      const std::size_t i = static_cast<std::size_t>(gen.uniform(1, static_cast<int>(a.size())));
      const Term x = gen.small_term(1);
      const TermList s = substitute(a, i, x);
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (s[j] != (j + 1 == i ? x : a[j])) result.fail("substitute " + where);
      }
    }
    try {
      substitute(a, a.size() + 1, Term::literal(0));
      result.fail("substitute past the end did not throw " + where);
    } catch (const ListError&) {
    }
  }
  return result;
}

PropertyResult check_eqseq_laws(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"eqseq equivalence laws"};
  Gen gen(seed);
  auto shuffled = [&gen](const ProgramList& p) {
    std::vector<Statement> s = p.statements();
    std::shuffle(s.begin(), s.end(), gen.engine());
    return ProgramList(std::move(s));
  };
  for (std::size_t c = 0; c < cases; ++c) {
    const ProgramList p = gen.valid_program(6);
    const ProgramList q = shuffled(p);
    const ProgramList r = shuffled(p);
    const std::string where = render_program(p) + " / " + render_program(q);
    ++result.cases;
    if (!eqseq(p, p)) result.fail("not reflexive: " + where);
    const bool pq = eqseq(p, q);
    if (pq != validate_program(q).valid()) result.fail("permutation verdict: " + where);
    if (pq && !eqseq(q, p)) result.fail("not symmetric: " + where);
    if (pq && validate_program(r).valid() && eqseq(q, r) != true) {
      result.fail("not transitive: " + where + " / " + render_program(r));
    }
    if (!p.empty()) {
      std::vector<Statement> shorter(p.begin(), p.end() - 1);
      if (eqseq(p, ProgramList(shorter))) result.fail("dropped statement accepted: " + where);
    }
  }
  return result;
}

PropertyResult check_adjacent_swap(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"adjacent swap"};
  Gen gen(seed);
  while (result.cases < cases) {
    const ProgramList p = gen.valid_program(6);
    if (p.size() < 2) continue;
    const std::size_t i = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(p.size()) - 2));
    std::vector<Statement> s = p.statements();
    std::swap(s[i], s[i + 1]);
    bool depends = false;
    for (const std::string& y : p[i].outputs()) depends = depends || mentions(p[i + 1].inputs(), y);
    ++result.cases;
    if (eqseq(p, ProgramList(s)) == depends) {
      result.fail("swap " + std::to_string(i + 1) + " in " + render_program(p));
    }
  }
  return result;
}

namespace {

std::map<std::string, std::string> random_bijection(Gen& gen, const ProgramList& p,
                                                    const std::string& prefix) {
  std::vector<std::string> ids = identifiers_in_order(p);
  std::vector<std::string> images;
  for (std::size_t i = 0; i < ids.size(); ++i) images.push_back(prefix + std::to_string(i));
  std::shuffle(images.begin(), images.end(), gen.engine());
  std::map<std::string, std::string> map;
  for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = images[i];
  return map;
}

}  // namespace

PropertyResult check_eqio_laws(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"eqio equivalence laws"};
  Gen gen(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const ProgramList p = gen.valid_program(5);
    const ProgramList q = rename_all(p, random_bijection(gen, p, "m"));
    const ProgramList r = rename_all(q, random_bijection(gen, q, "n"));
    const std::string where = render_program(p) + " / " + render_program(q);
    ++result.cases;
    if (!eqio(p, p)) result.fail("not reflexive: " + where);
    if (!eqio(p, q) || !eqio(q, p)) result.fail("renaming not equivalent: " + where);
    if (!eqio(q, r) || !eqio(p, r)) result.fail("not transitive: " + where);
    if (!p.empty()) {
      try {
        eqio(p, ProgramList(std::vector<Statement>(p.begin() + 1, p.end())));
        result.fail("length mismatch did not throw: " + where);
      } catch (const ShapeMismatch&) {
      }
    }
  }
  return result;
}

PropertyResult check_eqio_oracle(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"eqio vs brute-force bijections"};
  Gen gen(seed);
  while (result.cases < cases) {
    const ProgramList p = gen.valid_program(4);
    if (identifiers_in_order(p).size() > 7) continue;
    ProgramList q = rename_all(p, random_bijection(gen, p, "m"));
    if (gen.chance(0.7) && !q.empty()) {
      // Perturb one input occurrence.
      std::vector<Statement> s = q.statements();
      const std::size_t i = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(s.size()) - 1));
      if (s[i].inputs().empty()) continue;
      TermList inputs = s[i].inputs();
      const std::size_t k = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(inputs.size()) - 1));
      const std::vector<std::string> ids = identifiers_in_order(q);
      if (ids.empty()) continue;
      inputs[k] = gen.chance(0.2) ? Term::literal(0) : Term::identifier(gen.pick(ids));
      try {
        s[i] = Statement(s[i].name(), std::move(inputs), s[i].outputs());
      } catch (const ValidationError&) {
        continue;
      }
      q = ProgramList(std::move(s));
    }
    ++result.cases;
    if (eqio(p, q) != brute_eqio(p, q)) {
      result.fail(render_program(p) + " ~ " + render_program(q));
    }
  }
  return result;
}

PropertyResult check_match_oracle(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"match_premise vs brute force (<= 12 lines)"};
  Gen gen(seed);
  struct Shape {
    const char* name;
    int in;
    int out;
  };
  const std::vector<Shape> shapes = {{"P", 2, 1}, {"Q", 1, 0}, {"R", 2, 0}};
  const std::vector<std::string> line_vars = {"a", "b", "c"};
  const std::vector<std::string> line_outs = {"x", "y", "z", "w"};
  const std::vector<std::string> pattern_vars = {"u", "v", "s", "p"};
  const std::vector<std::string> pattern_outs = {"p", "q", "r"};
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<Statement> lines;
    for (int n = gen.uniform(1, 12); n > 0; --n) {
      const Shape& shape = gen.pick(shapes);
      TermList in;
      for (int k = 0; k < shape.in; ++k) {
        in.push_back(gen.chance(0.2) ? Term::literal(gen.uniform(0, 1))
                                     : Term::identifier(gen.pick(line_vars)));
      }
      std::vector<std::string> out;
      if (shape.out) out.push_back(gen.pick(line_outs));
      lines.emplace_back(shape.name, std::move(in), std::move(out));
    }
    ProgramList premise;
    for (int n = gen.uniform(1, 4); n > 0; --n) {
      const Shape& shape = gen.pick(shapes);
      TermList in;
      for (int k = 0; k < shape.in; ++k) {
        in.push_back(gen.chance(0.1) ? Term::literal(0) : Term::identifier(gen.pick(pattern_vars)));
      }
      std::vector<std::string> out;
      if (shape.out) {
        std::string y = gen.pick(pattern_outs);
        if (mentions(in, y)) continue;
        out.push_back(y);
      }
      premise.push_back(Statement(shape.name, std::move(in), std::move(out)));
    }
    const std::size_t upto = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(lines.size())));
    ++result.cases;
    const auto fast = match_premise(premise, std::span<const Statement>(lines), upto);
    const auto slow = brute_match(premise, lines, upto);
    if (fast != slow) {
      result.fail(render_program(premise) + " over " + render_program(ProgramList(lines)) +
                  " upto " + std::to_string(upto) + ": " + std::to_string(fast.size()) + " vs " +
                  std::to_string(slow.size()));
    }
  }
  return result;
}

std::vector<ProgramList> corpus_premises() {
  std::vector<ProgramList> out;
  for (int k = 1; k <= 17; ++k) {
    const ParsedListing listing =
        parse_listing(read_text(source_path("corpus/T" + std::to_string(k) + ".proof")));
    ProgramList p;
    for (const ListingLine& line : listing.lines) {
      if (!line.connection) p.push_back(line.statement);
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::vector<std::string> option_keys(const std::vector<DerivationOption>& options) {
  std::vector<std::string> keys;
  for (const DerivationOption& o : options) {
    keys.push_back(std::to_string(o.index) + o.connection().to_string() +
                   render_program(o.conclusion) + (o.already_derived ? "*" : ""));
  }
  return keys;
}

}  // namespace

PropertyResult check_random_walks(const AxiomStore& store, std::uint64_t seed, std::size_t walks,
                                  int max_depth) {
  PropertyResult result{"apply-render-replay walks"};
  Gen gen(seed);
  const std::vector<ProgramList> premises = corpus_premises();
  for (std::size_t w = 0; w < walks; ++w) {
    ProofState state = new_session(gen.pick(premises));
    const int depth = gen.uniform(1, max_depth);
    std::string trail;
    bool broken = false;
    for (int step = 0; step < depth && !broken; ++step) {
      const std::vector<DerivationOption> options = enumerate_options(state, store);
      if (options.empty()) break;
      const DerivationOption& chosen = gen.pick(options);
      trail += " " + chosen.connection().to_string();
      ProofState next = apply_option(state, store, chosen);
      const ProofState back = undo(next);
      if (render_listing(back) != render_listing(state) ||
          option_keys(enumerate_options(back, store)) != option_keys(options)) {
        result.fail("undo after" + trail + " does not restore the state");
        broken = true;
      }
      state = std::move(next);
    }
    ++result.cases;
    if (broken) continue;
    const std::string text = render_listing(state);
    const ReplayReport report = replay(text, store);
    if (!report.passed()) {
      result.fail("replay after" + trail + ":\n" + report.to_string());
      continue;
    }
    if (!report.default_names || render_listing(*report.state) != text) {
      result.fail("rendering not stable after" + trail);
      continue;
    }
    if (state.derived_count() > 0) {
      const ExtractionResult ex = extract_theorem(state);
      std::set<std::size_t> all(ex.used.begin(), ex.used.end());
      all.insert(ex.redundant.begin(), ex.redundant.end());
      if (all.size() != state.premise_count() || ex.used.size() + ex.redundant.size() != all.size() ||
          (!all.empty() && *all.rbegin() != state.premise_count())) {
        result.fail("extraction does not partition the premises after" + trail);
      }
    }
  }
  return result;
}

}  // namespace seqproof::testing
