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

class ActionsTest : public ::testing::Test {
 protected:
  Universe u = Universe::demo();
  DataLinkage L(const char* text) { return parse_linkage(text, u); }
  Action A(const char* text) { return parse_action(text, u); }
  std::string eff(const char* a, const char* l) {
    return canonical_text(effect(u, A(a), L(l)), u);
  }
  char yld(const char* a, const char* l) {
    return reply_char(yield(u, A(a), L(l)));
  }
};

TEST_F(ActionsTest, EffectExamples) {
  EXPECT_EQ(eff("getatobj(r)", "0"), "r:#0");
  EXPECT_EQ(eff("setspot(s,t)", "s:#0, s:#1, t:#2"), "s:#0, s:#1, t:#2");
  EXPECT_EQ(eff("getfield(s,t,f)", "t:#0, #0.f:?, s:#2"), "t:#0, #0.f:?");
  EXPECT_EQ(eff("setfield(s,f,t)", "s:#0, #0.f:#1"), "s:#0, #0.f:?");
  EXPECT_EQ(eff("assadd(s,t,u)", "s:#0, t:#1, #1=7, u:#2, #2=8"),
            "s:#0, t:#1, u:#2, #0=4, #1=7, #2=8");
}

TEST_F(ActionsTest, YieldExamples) {
  EXPECT_EQ(yld("undeftst(s)", "0"), 'T');
  EXPECT_EQ(yld("equaltst(s,t)", "s:#0, t:#0"), 'T');
  EXPECT_EQ(yld("equaltst(s,t)", "0"), 'T');
  EXPECT_EQ(yld("eqvaltst(s,t)", "s:#0, #0=2, t:#1, #1=2"), 'T');
  EXPECT_EQ(yld("eqvaltst(s,t)", "s:#0, t:#1"), 'F');
  EXPECT_EQ(yld("undefvtst(s)", "s:#0"), 'T');
  EXPECT_EQ(yld("undefvtst(s)", "0"), 'F');
  EXPECT_EQ(yld("setspot(s,t)", "0"), 'T');
  EXPECT_EQ(yld("setspot(s,t)", "t:#0, t:#1"), 'F');
}

TEST_F(ActionsTest, GetatobjFailsWhenAllAtomsInUse) {
  const Universe small = Universe::with_counts(1, 0, 2, 2);
  const DataLinkage full = parse_linkage("s0:#0, #1=1", small);
  const Action a = parse_action("getatobj(s0)", small);
  EXPECT_EQ(yield(small, a, full), Reply::kFalse);
  EXPECT_EQ(effect(small, a, full), full);
}

TEST_F(ActionsTest, StepExamples) {
  auto s = step(u, A("clrspot(t)"), L("r:#0, t:#1, #0.up:#1, #1.dn:#0"));
  EXPECT_EQ(canonical_text(s.state, u), "r:#0, #0.up:#1, #1.dn:#0");
  EXPECT_EQ(s.reply, Reply::kTrue);
  EXPECT_FALSE(s.fired.empty());

  s = step(u, A("addfield(s,f)"), L("0"));
  EXPECT_EQ(canonical_text(s.state, u), "0");
  EXPECT_EQ(s.reply, Reply::kFalse);

  s = step(u, A("asszero(s)"), L("s:#0"));
  EXPECT_EQ(canonical_text(s.state, u), "s:#0, #0=0");
  EXPECT_EQ(s.reply, Reply::kTrue);
}

TEST_F(ActionsTest, FieldOperations) {
  EXPECT_EQ(eff("addfield(s,f)", "s:#0"), "s:#0, #0.f:?");
  EXPECT_EQ(eff("addfield(s,f)", "s:#0, #0.f:#1"), "s:#0, #0.f:#1");
  EXPECT_EQ(eff("rmvfield(s,f)", "s:#0, #0.f:#1"), "s:#0");
  EXPECT_EQ(yld("hasfield(s,f)", "s:#0, #0.f:?"), 'T');
  EXPECT_EQ(yld("hasfield(s,f)", "s:#0"), 'F');
  EXPECT_EQ(eff("setfield(s,f,t)", "s:#0, #0.f:?, t:#1"), "s:#0, t:#1, #0.f:#1");
  EXPECT_EQ(eff("clrfield(s,f)", "s:#0, #0.f:#1"), "s:#0, #0.f:?");
  EXPECT_EQ(eff("getfield(s,t,f)", "t:#0, #0.f:#1"), "s:#1, t:#0, #0.f:#1");
  // A missing field leaves the target spot alone and replies False.
  EXPECT_EQ(eff("getfield(s,t,f)", "s:#2, t:#0"), "s:#2, t:#0");
  EXPECT_EQ(yld("getfield(s,t,f)", "s:#2, t:#0"), 'F');
}

TEST_F(ActionsTest, SpotOperations) {
  EXPECT_EQ(eff("setspot(s,t)", "s:#0, t:#1"), "s:#1, t:#1");
  EXPECT_EQ(eff("setspot(s,t)", "s:#0"), "0");
  EXPECT_EQ(eff("clrspot(s)", "s:#0, t:#1"), "t:#1");
  EXPECT_EQ(yld("equaltst(s,t)", "s:#0, t:#1"), 'F');
  EXPECT_EQ(yld("equaltst(s,t)", "s:#0"), 'F');
}

TEST_F(ActionsTest, ValueOperations) {
  EXPECT_EQ(eff("assone(s)", "s:#0, #0=5"), "s:#0, #0=1");
  EXPECT_EQ(eff("assmul(s,t,u)", "s:#0, t:#1, #1=7, u:#2, #2=3"),
            "s:#0, t:#1, u:#2, #0=10, #1=7, #2=3");
  EXPECT_EQ(eff("assneg(s,t)", "s:#0, t:#1, #1=3"), "s:#0, t:#1, #0=8, #1=3");
  EXPECT_EQ(eff("assinv(s,t)", "s:#0, t:#1, #1=2"), "s:#0, t:#1, #0=6, #1=2");
  EXPECT_EQ(eff("assinv(s,t)", "s:#0, t:#1, #1=0"), "s:#0, t:#1, #0=0, #1=0");
  // Undefined operand value: no change, reply False.
  EXPECT_EQ(eff("assneg(s,t)", "s:#0, t:#1"), "s:#0, t:#1");
  EXPECT_EQ(yld("assneg(s,t)", "s:#0, t:#1"), 'F');
  EXPECT_EQ(eff("assneg(t,t)", "t:#1, #1=3"), "t:#1, #1=8");
}

TEST_F(ActionsTest, FiredRowsAreRecorded) {
  std::vector<RuleFire> fired;
  effect(u, A("setspot(s,t)"), L("s:#0, s:#1, t:#2"), {}, &fired);
  ASSERT_EQ(fired.size(), 1u);
  EXPECT_EQ(fired[0].priority, 1);
  EXPECT_EQ(fired[0].row, "E1");
  EXPECT_FALSE(fired[0].bindings.empty());
}

TEST_F(ActionsTest, StrictMultisetOption) {
  // By default one link may fill several operand positions; strict mode
  // needs a separate link per position, so the repeated-operand row no
  // longer matches and the default row leaves the state alone.
  EvalOptions strict;
  strict.strict_multiset = true;
  const DataLinkage l = L("s:#0, #0=3");
  EXPECT_EQ(canonical_text(effect(u, A("assadd(s,s,s)"), l), u), "s:#0, #0=6");
  EXPECT_EQ(effect(u, A("assadd(s,s,s)"), l, strict), l);
}

TEST_F(ActionsTest, ActionParsing) {
  EXPECT_EQ(format_action(A("getfield(s,t,up)"), u), "getfield(s,t,up)");
  EXPECT_EQ(format_action(A("fgc"), u), "fgc");
  EXPECT_THROW(A("getfield(s,t)"), ParseError);
  EXPECT_THROW(A("setspot(s,zz)"), UndeclaredName);
  EXPECT_THROW(A("frobnicate(s)"), ParseError);
  const auto list = parse_action_list("getatobj(r); setspot(s,r) ; fgc", u);
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[2].op, Op::kFgc);
}

TEST(ActionsEnumeration, CountsAndShapes) {
  const Universe u = Universe::with_counts(2, 1, 2, 2);
  const auto all = enumerate_actions(u);
  const auto basic = enumerate_actions(u, false);
  std::size_t n_basic = 0;
  for (const auto& a : basic) n_basic += is_basic(a.op);
  EXPECT_EQ(n_basic, basic.size());
  std::set<Op> ops;
  for (const auto& a : all) ops.insert(a.op);
  EXPECT_EQ(ops.size(), kOpCount);
  // No-field universes drop the field operations.
  const auto nf = enumerate_actions(Universe::with_counts(1, 0, 1, 2));
  for (const auto& a : nf)
    EXPECT_EQ(info(a.op).params.find('f'), std::string_view::npos);
}

// Exhaustive properties over every linkage of the small universe.
class ActionProperties : public ::testing::Test {
 protected:
  Universe u = Universe::with_counts(2, 1, 2, 2);
  std::vector<Action> actions = enumerate_actions(u, false);
};

TEST_F(ActionProperties, DeterminismFrameAndShield) {
  std::size_t shielded = 0, checked = 0;
  check::detail::for_each_linkage(u, [&](const DataLinkage& l) {
    const auto before = atobj(l);
    const auto fresh = detail::fresh_atom(u, l);
    for (const Action& a : actions) {
      const DataLinkage n = effect(u, a, l);
      const Reply r = yield(u, a, l);
      ++checked;
      if (is_deterministic(l)) {
        ASSERT_TRUE(is_deterministic(n));
      }
      for (AtomId x : atobj(n)) {
        const bool ok = before.count(x) ||
                        (a.op == Op::kGetAtObj && fresh && x == *fresh);
        ASSERT_TRUE(ok) << format_action(a, u) << " on " << canonical_text(l, u);
      }
      if (detail::shields(detail::Scan(l, {}), a)) {
        ++shielded;
        ASSERT_EQ(n, l);
        ASSERT_EQ(r, Reply::kFalse);
      }
    }
  });
  EXPECT_GT(shielded, 0u);
  EXPECT_GT(checked, 100000u);
}

TEST_F(ActionProperties, ShuffledScanOrderDoesNotMatter) {
  gen::Rng rng(3);
  const auto pool = all_links(u);
  for (int i = 0; i < 2000; ++i) {
    const DataLinkage l = gen::linkage(rng, pool, 8);
    const Action& a = actions[gen::pick(rng, actions.size())];
    EvalOptions sh;
    sh.shuffle_seed = rng();
    ASSERT_EQ(effect(u, a, l), effect(u, a, l, sh));
    ASSERT_EQ(yield(u, a, l), yield(u, a, l, sh));
  }
}

}  // namespace
}  // namespace dld
