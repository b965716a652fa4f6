// Copyright 2026 The dld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "dld/check/suites.hpp"
#include "dld/dld.hpp"

namespace dld {
namespace {

class RefineTest : public ::testing::Test {
 protected:
  Universe u = Universe::demo();
  DataLinkage L(const char* text) { return parse_linkage(text, u); }
};

TEST_F(RefineTest, RetrieveExamples) {
  EXPECT_EQ(canonical_text(retrieve(SetState::empty(u)), u), "0");

  SetState st = SetState::empty(u);
  st.sigma[0] = AtomId{0};
  st.zeta[AtomId{0}][FieldId{0}] = AtomId{1};
  st.zeta[AtomId{1}][FieldId{1}] = AtomId{0};
  st.xi[AtomId{0}] = std::nullopt;
  st.xi[AtomId{1}] = std::nullopt;
  EXPECT_EQ(canonical_text(retrieve(st), u), "r:#0, #0.up:#1, #1.dn:#0");
  EXPECT_EQ(represent(L("r:#0, #0.up:#1, #1.dn:#0"), u), st);

  SetState v = SetState::empty(u);
  v.sigma[1] = AtomId{0};
  v.zeta[AtomId{0}][FieldId{2}] = std::nullopt;
  v.xi[AtomId{0}] = MeadowValue{3};
  EXPECT_EQ(canonical_text(retrieve(v), u), "s:#0, #0.f:?, #0=3");
}

TEST_F(RefineTest, RepresentErrors) {
  EXPECT_EQ(represent(L("0"), u), SetState::empty(u));
  EXPECT_THROW(represent(L("s:#0, s:#1"), u), NonDeterministicState);
  const Universe small = Universe::with_counts(1, 0, 1, 2);
  EXPECT_THROW(represent(L("r:#5"), small), UndeclaredName);
}

TEST_F(RefineTest, CommutationExamples) {
  const DataLinkage ex1 = L("r:#0, #0.up:#1, #2.up:#3, #3.dn:#2");
  EXPECT_TRUE(check_commutation(u, parse_action("fgc", u), represent(ex1, u)).pass);
  EXPECT_TRUE(
      check_commutation(u, parse_action("setspot(s,t)", u), represent(L("t:#3"), u)).pass);
}

TEST_F(RefineTest, NonTightGetatobjCounterexample) {
  const Universe small = Universe::with_counts(1, 0, 2, 2);
  SetState st = SetState::empty(small);
  st.zeta[AtomId{0}];
  st.xi[AtomId{0}] = std::nullopt;
  const auto v = check_commutation(small, parse_action("getatobj(s0)", small), st);
  EXPECT_FALSE(v.pass);
  EXPECT_FALSE(v.tight);
  EXPECT_EQ(canonical_text(v.rewrite_state, small), "s0:#0");
  EXPECT_EQ(canonical_text(v.set_state, small), "s0:#1");
  EXPECT_NE(format_verdict(v, small).find("tight=false"), std::string::npos);
  // Tightening first removes the discrepancy.
  EXPECT_TRUE(check_commutation(small, parse_action("getatobj(s0)", small), tighten(st)).pass);
}

TEST_F(RefineTest, TraceCheck) {
  const Universe small = Universe::with_counts(2, 1, 3, 3);
  const auto acts = parse_action_list(
      "getatobj(s0); getatobj(s1); setfield(s0,f0,s1); assone(s1); "
      "udclrspot(s1); fgc; getatobj(s1)",
      small);
  EXPECT_EQ(check_trace(small, acts, SetState::empty(small), true), std::nullopt);
}

TEST(RefineEnumeration, TightCountOnTinyUniverse) {
  const Universe u = Universe::with_counts(1, 0, 1, 2);
  StateBounds tight;
  tight.tight_only = true;
  // s undefined with nothing in use; s on #0 with no value, 0 or 1; and #0
  // in use with value 0 or 1 but no spot on it (visible through its value).
  const auto states = collect_states(u, tight);
  EXPECT_EQ(states.size(), 6u);
  for (const auto& st : states) EXPECT_TRUE(is_tight(st));
  EXPECT_EQ(collect_states(u, StateBounds{}).size(), 7u);
}

TEST(RefineEnumeration, MonotoneAndDuplicateFree) {
  const Universe u = Universe::with_counts(2, 1, 2, 2);
  std::size_t prev = 0;
  for (std::size_t m = 0; m <= 2; ++m) {
    StateBounds b;
    b.max_atoms = m;
    const auto v = collect_states(u, b);
    EXPECT_GE(v.size(), prev);
    prev = v.size();
    std::set<SetState> uniq(v.begin(), v.end());
    EXPECT_EQ(uniq.size(), v.size());
    for (const auto& st : v) EXPECT_FALSE(dlr_violation(st, u).has_value());
  }
}

TEST(RefineProperties, RoundTripOnDeterministicLinkages) {
  const Universe u = Universe::with_counts(2, 1, 2, 2);
  std::size_t det = 0;
  check::detail::for_each_linkage(u, [&](const DataLinkage& l) {
    if (!is_deterministic(l)) return;
    ++det;
    const SetState st = represent(l, u);
    ASSERT_EQ(retrieve(st), l);
    ASSERT_TRUE(is_tight(st));
  });
  // Every tight state is the representation of exactly one deterministic linkage.
  std::size_t tight = 0;
  StateBounds b;
  b.tight_only = true;
  enumerate_states(u, b, [&](const SetState&) { ++tight; });
  EXPECT_EQ(tight, det);
}

TEST(RefineProperties, CommutationOnTightStates) {
  check::SuiteOptions opt;
  const auto rep = check::run_thm3(opt);
  EXPECT_EQ(rep.failed, 0u) << (rep.failures.empty() ? "" : rep.failures.front());
  EXPECT_GT(rep.checked, 100000u);
}

TEST(RefineProperties, LiteralEqvaltstFailsOnTightStates) {
  check::SuiteOptions opt;
  opt.set.literal_eqvaltst = true;
  EXPECT_GT(check::run_thm3(opt).failed, 0u);
}

}  // namespace
}  // namespace dld
