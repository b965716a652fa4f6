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

#include "dld/check/oracles.hpp"
#include "dld/dld.hpp"

namespace dld {
namespace {

class SetModelTest : public ::testing::Test {
 protected:
  Universe u = Universe::demo();
  const SpotId r{0}, s{1}, t{2};
  const FieldId up{0}, dn{1}, f{2};
  static AtomId at(std::uint16_t i) { return AtomId{i}; }
  Action A(const char* text) { return parse_action(text, u); }
  SetState rep(const char* l) { return represent(parse_linkage(l, u), u); }
  std::string back(const SetState& st) { return canonical_text(retrieve(st), u); }

  // sigma={r->#0}, zeta={#0->{up->#1}, #1->{}, #2->{up->#3}, #3->{dn->#2}}
  SetState example1() {
    SetState st = SetState::empty(u);
    st.sigma[r.index] = at(0);
    st.zeta[at(0)][up] = at(1);
    st.zeta[at(1)];
    st.zeta[at(2)][up] = at(3);
    st.zeta[at(3)][dn] = at(2);
    for (int i = 0; i < 4; ++i) st.xi[at(i)] = std::nullopt;
    return st;
  }
};

TEST_F(SetModelTest, BasicEffects) {
  SetState st = SetState::empty(u);
  st.sigma[t.index] = at(1);
  st.zeta[at(1)];
  st.xi[at(1)] = std::nullopt;
  const SetState n = effect_set(u, A("setspot(s,t)"), st);
  EXPECT_EQ(n.sigma[s.index], at(1));

  const SetState e = SetState::empty(u);
  EXPECT_EQ(effect_set(u, A("addfield(s,f)"), e), e);
  EXPECT_EQ(yield_set(u, A("addfield(s,f)"), e), Reply::kFalse);

  SetState z = SetState::empty(u);
  z.sigma[s.index] = at(0);
  z.zeta[at(0)];
  z.xi[at(0)] = std::nullopt;
  const SetState zz = effect_set(u, A("asszero(s)"), z);
  EXPECT_EQ(zz.xi.at(at(0)), MeadowValue{0});
  EXPECT_EQ(yield_set(u, A("asszero(s)"), z), Reply::kTrue);
}

TEST_F(SetModelTest, GetatobjExtendsDomain) {
  const SetState n = effect_set(u, A("getatobj(s)"), SetState::empty(u));
  EXPECT_EQ(n.sigma[s.index], at(0));
  EXPECT_TRUE(n.in_use(at(0)));
  EXPECT_TRUE(n.zeta.at(at(0)).empty());
  EXPECT_EQ(n.xi.at(at(0)), std::nullopt);
}

TEST_F(SetModelTest, Reachability) {
  const SetState st = example1();
  EXPECT_EQ(reach_atoms(st), (std::set<AtomId>{at(0), at(1)}));
  EXPECT_TRUE(reach_atoms(SetState::empty(u)).empty());
  EXPECT_EQ(reach_from(at(2), st.zeta), (std::set<AtomId>{at(2), at(3)}));
}

TEST_F(SetModelTest, Incycle) {
  const SetState st = example1();
  const auto c = incycle(st.zeta);
  EXPECT_TRUE(c.count(at(2)) && c.count(at(3)));
  EXPECT_EQ(c, oracle::cycle_atoms(st.zeta));
  EXPECT_TRUE(incycle({}).empty());
  std::map<AtomId, SetState::FieldMap> self;
  self[at(0)][f] = at(0);
  EXPECT_EQ(incycle(self), (std::set<AtomId>{at(0)}));
}

TEST_F(SetModelTest, ClearRefs) {
  std::vector<std::optional<AtomId>> sigma(4);
  sigma[r.index] = at(0);
  sigma[s.index] = at(1);
  auto cleared = clear_spot_refs(at(0), sigma);
  EXPECT_EQ(cleared[r.index], std::nullopt);
  EXPECT_EQ(cleared[s.index], at(1));
  EXPECT_EQ(clear_spot_refs(at(9), sigma), sigma);

  std::map<AtomId, SetState::FieldMap> zeta;
  zeta[at(1)][f] = at(0);
  auto cz = clear_field_refs(at(0), zeta);
  ASSERT_TRUE(cz.at(at(1)).count(f));
  EXPECT_EQ(cz.at(at(1)).at(f), std::nullopt);
}

TEST_F(SetModelTest, Disposal) {
  const SetState ex2 = rep("r:#0, s:#0, #0.up:#1, t:#2, #2.up:#3");
  EXPECT_EQ(sd_set(at(0), ex2), ex2);
  EXPECT_EQ(back(effect_set(u, A("sdsetspot(s,t)"), ex2)),
            "r:#0, s:#2, t:#2, #0.up:#1, #2.up:#3");
  EXPECT_EQ(back(effect_set(u, A("udsetspot(s,t)"), ex2)), "s:#2, t:#2, #2.up:#3");
  EXPECT_EQ(sd_set(at(5), ex2), ex2);
  EXPECT_EQ(sd_set(std::nullopt, ex2), ex2);
}

TEST_F(SetModelTest, SdCleanupOption) {
  // #0 is unreachable but #1's field still points at it.
  SetState st = rep("#1.f:#0, #0=2, s:#2");
  const SetState clean = sd_set(at(0), st);
  EXPECT_EQ(back(clean), "s:#2");
  EXPECT_TRUE(clean.zeta.at(at(1)).empty());
  SetOptions lit;
  lit.literal_sd = true;
  const SetState raw = sd_set(at(0), st, lit);
  EXPECT_FALSE(raw.in_use(at(0)));
  ASSERT_TRUE(dlr_violation(raw, u).has_value());
}

TEST_F(SetModelTest, Collection) {
  const SetState st = example1();
  EXPECT_EQ(back(effect_set_reclaim(u, A("fgc"), st)), "r:#0, #0.up:#1");
  EXPECT_EQ(back(effect_set_reclaim(u, A("rgc"), st)),
            "r:#0, #0.up:#1, #2.up:#3, #3.dn:#2");
  EXPECT_EQ(yield_set_reclaim(u, A("rgc"), st), Reply::kTrue);
  EXPECT_EQ(yield_set_reclaim(u, A("rgc"), SetState::empty(u)), Reply::kTrue);
  EXPECT_THROW(effect_set_reclaim(u, A("getatobj(s)"), st), std::invalid_argument);
}

TEST_F(SetModelTest, RgcClosureVersusLiteral) {
  // An unreferenced atom hanging off a cycle.
  const SetState st = rep("#0.up:#1, #1.up:#0, #1.dn:#2, #2=4");
  EXPECT_EQ(back(effect_set(u, A("rgc"), st)), "#0.up:#1, #1.up:#0, #1.dn:#2, #2=4");
  SetOptions lit;
  lit.literal_rgc = true;
  EXPECT_FALSE(effect_set(u, A("rgc"), st, lit).in_use(at(2)));
}

TEST_F(SetModelTest, EqvaltstDefinedness) {
  const SetState st = rep("s:#0, t:#1");
  EXPECT_EQ(yield_set(u, A("eqvaltst(s,t)"), st), Reply::kFalse);
  SetOptions lit;
  lit.literal_eqvaltst = true;
  EXPECT_EQ(yield_set(u, A("eqvaltst(s,t)"), st, lit), Reply::kTrue);
}

TEST_F(SetModelTest, Tightness) {
  SetState st = SetState::empty(u);
  st.zeta[at(0)];
  st.xi[at(0)] = std::nullopt;
  EXPECT_FALSE(is_tight(st));
  EXPECT_EQ(tighten(st), SetState::empty(u));

  const SetState tight = example1();
  EXPECT_TRUE(is_tight(tight));
  EXPECT_EQ(tighten(tight), tight);

  SetState extra = SetState::empty(u);
  extra.sigma[r.index] = at(0);
  extra.zeta[at(0)];
  extra.zeta[at(1)];
  extra.xi[at(0)] = std::nullopt;
  extra.xi[at(1)] = std::nullopt;
  EXPECT_FALSE(is_tight(extra));
}

TEST_F(SetModelTest, Invariants) {
  EXPECT_FALSE(dlr_violation(example1(), u).has_value());
  SetState bad = SetState::empty(u);
  bad.sigma[r.index] = at(0);
  EXPECT_TRUE(dlr_violation(bad, u).has_value());
}

TEST_F(SetModelTest, Formatting) {
  const Universe small = Universe::with_counts(2, 1, 2, 2);
  SetState st = SetState::empty(small);
  st.sigma[0] = AtomId{1};
  st.zeta[AtomId{0}][FieldId{0}] = AtomId{1};
  st.zeta[AtomId{1}];
  st.xi[AtomId{0}] = std::nullopt;
  st.xi[AtomId{1}] = MeadowValue{1};
  EXPECT_EQ(format_set_state(st, small),
            "sigma{s0:#1 s1:_} zeta{#0:{f0:#1} #1:{}} xi{#0:_ #1:1}");
}

// Every effect keeps the DLR invariants, on every state of a small universe.
TEST(SetModelProperties, EffectsPreserveInvariants) {
  const Universe u = Universe::with_counts(2, 1, 2, 2);
  const auto actions = enumerate_actions(u);
  std::size_t n = 0;
  enumerate_states(u, StateBounds{}, [&](const SetState& st) {
    ASSERT_FALSE(dlr_violation(st, u).has_value());
    for (const Action& a : actions) {
      const SetState next = effect_set(u, a, st);
      ASSERT_FALSE(dlr_violation(next, u).has_value())
          << format_action(a, u) << " " << format_set_state(st, u);
      ASSERT_TRUE(is_deterministic(retrieve(next)));
      ++n;
    }
  });
  EXPECT_GT(n, 0u);
}

TEST(SetModelProperties, ReachAndCycleAgreeWithOracles) {
  const Universe u = Universe::with_counts(1, 2, 3, 2);
  enumerate_states(u, StateBounds{}, [&](const SetState& st) {
    ASSERT_EQ(incycle(st.zeta), oracle::cycle_atoms(st.zeta));
    for (const auto& [a, _] : st.zeta)
      ASSERT_EQ(reach_from(a, st.zeta), oracle::reach_from(a, st.zeta));
  });
}

}  // namespace
}  // namespace dld
