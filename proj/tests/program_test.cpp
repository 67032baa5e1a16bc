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

#include <gtest/gtest.h>

#include "seqproof/error.hpp"
#include "seqproof/program.hpp"

namespace seqproof {
namespace {

ProgramList P(std::string_view text) { return parse_program(text); }

TEST(Statement, Parse) {
  const Statement s = parse_statement("Add([a,b],[c])");
  EXPECT_EQ(s.name(), "Add");
  EXPECT_EQ(s.inputs(), parse_term_list("[a,b]"));
  EXPECT_EQ(s.outputs(), std::vector<std::string>{"c"});
  const Statement t = parse_statement("Int([a],[])");
  EXPECT_TRUE(t.outputs().empty());
  EXPECT_EQ(t.to_string(), "Int([a],[])");
}

TEST(Statement, RejectsBadShapes) {
  EXPECT_THROW(parse_statement("Add([a,b],[a])"), ValidationError);
  EXPECT_THROW(parse_statement("Add([[a],b],[c,c])"), ValidationError);
  EXPECT_THROW(parse_statement("Add([a],[1])"), SyntaxError);
  EXPECT_THROW(parse_statement("Add([a],[c]"), SyntaxError);
}

TEST(Statement, OutputMentionedInsideNestedInputIsRejected) {
  EXPECT_THROW(parse_statement("Sum([[x,[c]]],[c])"), ValidationError);
}

TEST(Program, ParseAndRender) {
  const ProgramList p = P("[Add([a,b],[c]), Mult([-1,b],[d])]");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(render_program(p), "[Add([a,b],[c]), Mult([-1,b],[d])]");
  EXPECT_TRUE(P("[]").empty());
  EXPECT_EQ(render_program(ProgramList()), "[]");
  EXPECT_EQ(render_program(p, Layout::kVertical), "Add([a,b],[c])\nMult([-1,b],[d])\n");
}

TEST(Program, ParseRejectsDependencyViolation) {
  EXPECT_THROW(P("[Add([a,b],[c]), Add([c,b],[a])]"), ValidationError);
}

TEST(Program, Validate) {
  const auto dup = validate_program(ProgramList({parse_statement("Add([a,b],[c])"),
                                                 parse_statement("Add([b,a],[c])")}));
  ASSERT_FALSE(dup.valid());
  EXPECT_EQ(dup.violations[0].condition, Condition::kDistinctOutputs);

  EXPECT_TRUE(validate_program(P("[Mult([-1,b],[d]), Add([b,d],[e])]")).valid());

  const auto late = validate_program(ProgramList({parse_statement("Add([b,d],[e])"),
                                                  parse_statement("Mult([-1,b],[d])")}));
  ASSERT_FALSE(late.valid());
  EXPECT_EQ(late.violations[0].condition, Condition::kIoDependency);
  EXPECT_EQ(late.violations[0].statement, 1u);
  EXPECT_EQ(late.violations[0].other, 2u);
}

TEST(Program, NameClash) {
  const ProgramList p = P("[Add([a,b],[c])]");
  EXPECT_TRUE(validate_program(p, "Sum").valid());
  const auto r = validate_program(p, "Add");
  ASSERT_FALSE(r.valid());
  EXPECT_EQ(r.violations[0].condition, Condition::kNameClash);
  EXPECT_THROW(require_valid(p, "Add"), ValidationError);
}

TEST(Program, DeriveIo) {
  const MainIO io = derive_io(P("[Add([a,b],[c]), Add([c,d],[e])]"));
  EXPECT_EQ(io.inputs, parse_term_list("[a,b,d]"));
  EXPECT_EQ(io.outputs, (std::vector<std::string>{"c", "e"}));
  EXPECT_TRUE(derive_io(P("[]")).inputs.empty());
  const MainIO one = derive_io(P("[Int([a],[])]"));
  EXPECT_EQ(one.inputs, parse_term_list("[a]"));
  EXPECT_TRUE(one.outputs.empty());
}

TEST(Program, Conc) {
  const ProgramList a = P("[Add([a,b],[c])]");
  EXPECT_EQ(conc(a, P("[Mult([-1,b],[d])]")).size(), 2u);
  EXPECT_THROW(conc(a, a), ValidationError);
  EXPECT_EQ(conc(a, P("[]")), a);
}

TEST(Program, NameConvention) {
  EXPECT_TRUE(follows_name_convention("Add"));
  EXPECT_TRUE(follows_name_convention("Int"));
  EXPECT_FALSE(follows_name_convention("add"));
  EXPECT_FALSE(follows_name_convention("ADD"));
}

}  // namespace
}  // namespace seqproof
