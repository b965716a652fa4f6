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
#include "dld/check/suites.hpp"
#include "dld/dld.hpp"

namespace dld {
namespace {

class ReclaimTest : public ::testing::Test {
 protected:
  Universe u = Universe::demo();
  DataLinkage L(const char* text) { return parse_linkage(text, u); }
  std::string T(const DataLinkage& l) { return canonical_text(l, u); }
  std::string eff(const char* a, const DataLinkage& l) {
    return T(effect_dldr(u, parse_action(a, u), l));
  }
  DataLinkage example1 = L("r:#0, #0.up:#1, #2.up:#3, #3.dn:#2");
  DataLinkage example2 = L("r:#0, s:#0, #0.up:#1, t:#2, #2.up:#3");
};

TEST_F(ReclaimTest, Example1Collection) {
  EXPECT_EQ(T(fgc(example1)), "r:#0, #0.up:#1");
  EXPECT_EQ(rgc(example1), example1);
  EXPECT_EQ(eff("fgc", example1), "r:#0, #0.up:#1");
  EXPECT_EQ(yield_dldr(u, parse_action("rgc", u), example1), Reply::kTrue);
}

TEST_F(ReclaimTest, Example2Disposal) {
  EXPECT_EQ(safe_dispose(AtomId{0}, example2), example2);
  EXPECT_EQ(eff("sdsetspot(s,t)", example2), "r:#0, s:#2, t:#2, #0.up:#1, #2.up:#3");
  EXPECT_EQ(eff("udsetspot(s,t)", example2), "s:#2, t:#2, #2.up:#3");
}

TEST_F(ReclaimTest, SafeDisposalReclaimsUnreachableAtom) {
  const DataLinkage l = L("s:#0, #0.up:#1, #0=5, t:#2");
  EXPECT_EQ(eff("sdsetspot(s,t)", l), "s:#2, t:#2");
  EXPECT_EQ(eff("sdclrspot(s)", L("s:#0, #0=5, t:#2")), "t:#2");
}

TEST_F(ReclaimTest, RgcDropsChainsButKeepsCyclesAndSelfLoops) {
  EXPECT_EQ(T(rgc(L("#0.up:#1, #1.up:#2, #2=3"))), "0");
  EXPECT_EQ(T(rgc(L("#0.up:#0, #0=1"))), "#0.up:#0, #0=1");
  EXPECT_EQ(T(fgc(L("#0.up:#0, #0=1"))), "0");
}

TEST_F(ReclaimTest, ClearRefs) {
  EXPECT_EQ(T(clear_refs(AtomId{0}, L("r:#0, s:#1, #1.up:#0, #0=2"))),
            "s:#1, #1.up:?, #0=2");
}

TEST_F(ReclaimTest, UnsafeDisposalShieldsLikeBase) {
  const DataLinkage l = L("s:#0, s:#1, t:#2");
  EXPECT_EQ(effect_dldr(u, parse_action("udsetspot(s,t)", u), l), l);
  EXPECT_EQ(yield_dldr(u, parse_action("udsetspot(s,t)", u), l), Reply::kFalse);
}

TEST_F(ReclaimTest, BasicActionsDelegate) {
  const DataLinkage l = L("r:#0, t:#1, #0.up:#1");
  for (const char* a : {"getatobj(s)", "setfield(r,dn,t)", "clrspot(t)"}) {
    const Action x = parse_action(a, u);
    EXPECT_EQ(effect_dldr(u, x, l), effect(u, x, l));
    EXPECT_EQ(yield_dldr(u, x, l), yield(u, x, l));
  }
}

TEST(ReclaimOracles, CollectorsAgreeExhaustively) {
  const Universe u = Universe::with_counts(2, 1, 2, 2);
  std::size_t n = 0;
  check::detail::for_each_linkage(u, [&](const DataLinkage& l) {
    ++n;
    const DataLinkage f = fgc(l), r = rgc(l);
    ASSERT_EQ(f, oracle::fgc(l));
    ASSERT_EQ(r, oracle::rgc(l));
    ASSERT_TRUE(r.includes(f));
    ASSERT_TRUE(l.includes(r));
    for (AtomId d : u.atoms()) ASSERT_EQ(safe_dispose(d, l), oracle::safe_dispose(d, l));
  });
  EXPECT_EQ(n, 1u << 14);
}

TEST(ReclaimOracles, ShuffleInvariance) {
  const Universe u = Universe::with_counts(2, 2, 3, 2);
  const auto pool = all_links(u);
  const auto actions = enumerate_actions(u);
  gen::Rng rng(5);
  for (int i = 0; i < 3000; ++i) {
    const DataLinkage l = gen::linkage(rng, pool, 10);
    const Action& a = actions[gen::pick(rng, actions.size())];
    EvalOptions sh;
    sh.shuffle_seed = rng();
    ASSERT_EQ(effect_dldr(u, a, l), effect_dldr(u, a, l, sh))
        << format_action(a, u) << " " << canonical_text(l, u);
    ASSERT_EQ(yield_dldr(u, a, l), yield_dldr(u, a, l, sh));
  }
}

}  // namespace
}  // namespace dld
