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
#include "dld/check/random.hpp"
#include "dld/dld.hpp"

namespace dld {
namespace {

class DlaTest : public ::testing::Test {
 protected:
  Universe u = Universe::demo();
  DataLinkage L(const char* text) { return parse_linkage(text, u); }
  std::string T(const DataLinkage& l) { return canonical_text(l, u); }
};

TEST_F(DlaTest, CombineIsUnion) {
  EXPECT_EQ(combine(L("r:#0"), L("0")), L("r:#0"));
  EXPECT_EQ(combine(L("r:#0"), L("r:#0")), L("r:#0"));
  EXPECT_EQ(combine(L("r:#0"), L("r:#1")), L("r:#0, r:#1"));
  EXPECT_FALSE(is_deterministic(combine(L("r:#0"), L("r:#1"))));
}

TEST_F(DlaTest, OverrideSingleKey) {
  EXPECT_EQ(override(L("s:#0"), L("s:#1")), L("s:#1"));
  EXPECT_EQ(override(L("#0.f:#1"), L("#0.f:?")), L("#0.f:?"));
  EXPECT_EQ(override(L("s:#0, s:#1"), L("s:#2")), L("s:#2"));
  EXPECT_EQ(override(L("s:#0, #0=3"), L("t:#1")), L("s:#0, #0=3, t:#1"));
}

TEST_F(DlaTest, DistributionOverEmptyPartIsNotSound) {
  // Taken literally with Z = 0, distribution gives s:#0 <| s:#1 = s:#1 + s:#0.
  const DataLinkage x = L("s:#0"), y = L("s:#1");
  EXPECT_EQ(override(x, combine(y, DataLinkage{})), y);
  EXPECT_NE(override(x, combine(y, DataLinkage{})), combine(override(x, y), override(x, DataLinkage{})));
}

TEST_F(DlaTest, OverrideWithEmptySides) {
  const DataLinkage l = L("r:#0, #0.up:#1, #1=4");
  EXPECT_EQ(override(l, DataLinkage{}), l);
  EXPECT_EQ(override(DataLinkage{}, l), l);
}

TEST_F(DlaTest, OverrideDistributesOverRightOperand) {
  // s:#0 <| (s:#1 + t:#2) = (s:#0 <| s:#1) + (s:#0 <| t:#2)
  EXPECT_EQ(override(L("s:#0"), L("s:#1, t:#2")), L("s:#0, s:#1, t:#2"));
  // Two right links on the same key both displace it.
  EXPECT_EQ(override(L("s:#0, t:#3"), L("s:#1, s:#2")), L("s:#1, s:#2, t:#3"));
  EXPECT_EQ(override(L("#0.f:#1"), L("#0.f:?, #0.f:#2")), L("#0.f:?, #0.f:#2"));
}

TEST_F(DlaTest, NormalizeExamples) {
  EXPECT_EQ(T(normalize(parse_term("0 <| s:#0", u))), "s:#0");
  EXPECT_EQ(T(normalize(parse_term("({s:#0} + {s:#1}) <| {s:#2}", u))), "s:#2");
  EXPECT_EQ(T(normalize(parse_term("{s:#0} + {s:#0}", u))), "s:#0");
  EXPECT_EQ(T(normalize(parse_term("0 <| 0", u))), "0");
}

TEST_F(DlaTest, TermPrecedenceAndAssociativity) {
  // + binds tighter than <|: a <| b + c is a <| (b + c).
  const auto t = parse_term("s:#0 <| s:#1 + t:#2", u);
  EXPECT_EQ(t.kind(), LinkageTerm::Kind::kOverride);
  EXPECT_EQ(t.rhs().kind(), LinkageTerm::Kind::kCombine);
  // Left-associative override: (s:#0 <| s:#1) <| t:#2.
  const auto v = parse_term("s:#0 <| s:#1 <| t:#2", u);
  EXPECT_EQ(v.kind(), LinkageTerm::Kind::kOverride);
  EXPECT_EQ(v.lhs().kind(), LinkageTerm::Kind::kOverride);
  EXPECT_EQ(T(normalize(v)), "s:#1, t:#2");
}

TEST_F(DlaTest, Determinism) {
  EXPECT_TRUE(is_deterministic(L("0")));
  EXPECT_FALSE(is_deterministic(L("s:#0, s:#1")));
  EXPECT_FALSE(is_deterministic(L("#0.f:#1, #0.f:?")));
  EXPECT_FALSE(is_deterministic(L("#0.f:#1, #0.f:#2")));
  EXPECT_FALSE(is_deterministic(L("#0=3, #0=4")));
  EXPECT_TRUE(is_deterministic(L("r:#0, #0.f:#1, #1=5")));
}

TEST_F(DlaTest, Atobj) {
  EXPECT_TRUE(atobj(L("0")).empty());
  EXPECT_EQ(atobj(L("#0.f:#1")), (std::set<AtomId>{AtomId{0}, AtomId{1}}));
  EXPECT_EQ(atobj(L("r:#2, #2=5")), (std::set<AtomId>{AtomId{2}}));
}

TEST_F(DlaTest, CanonicalText) {
  EXPECT_EQ(T(L("0")), "0");
  EXPECT_EQ(T(L("#0.up:#1, r:#0")), "r:#0, #0.up:#1");
  EXPECT_EQ(T(L("#1=4")), "#1=4");
  // Kind order: spot links, partial links, field links, values.
  EXPECT_EQ(T(L("#0=1, #0.up:#1, #0.dn:?, s:#0")), "s:#0, #0.dn:?, #0.up:#1, #0=1");
}

TEST_F(DlaTest, ContentAccessors) {
  EXPECT_TRUE(spot_content(L("r:#0"), SpotId{0}).is_defined());
  EXPECT_TRUE(spot_content(L("0"), SpotId{0}).is_undefined());
  EXPECT_TRUE(spot_content(L("r:#0, r:#1"), SpotId{0}).is_nondeterministic());
  const FieldId f = *u.find_field("f"), g = *u.find_field("g");
  EXPECT_EQ(fields_of(L("#0.f:?, #0.g:#1"), AtomId{0}), (std::set<FieldId>{f, g}));
  EXPECT_TRUE(field_content(L("#0.f:?"), AtomId{0}, f).is_undefined());
  EXPECT_TRUE(value_of(L("#0=3, #0=4"), AtomId{0}).is_nondeterministic());
}

TEST_F(DlaTest, ParseErrorsCarryOffsets) {
  try {
    parse_linkage("r:#0, s:", u);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 8u);
  }
  EXPECT_THROW(parse_linkage("zz:#0", u), UndeclaredName);
  EXPECT_THROW(parse_linkage("#0.nofield:?", u), UndeclaredName);
  EXPECT_THROW(parse_term("(s:#0 + s:#1", u), ParseError);
  EXPECT_THROW(parse_linkage("r:#0 r:#1", u), ParseError);
}

TEST_F(DlaTest, ValueLiteralsReducedModP) {
  EXPECT_EQ(T(L("#0=15")), "#0=4");
  EXPECT_EQ(T(L("{#0=11}")), "#0=0");
}

TEST(DlaRoundTrip, CanonicalTextParsesBack) {
  const Universe u = Universe::with_counts(2, 1, 2, 2);
  const auto pool = all_links(u);
  ASSERT_EQ(pool.size(), 14u);
  for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
    std::vector<AtomicLink> v;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) v.push_back(pool[i]);
    const DataLinkage l(v);
    ASSERT_EQ(parse_linkage(canonical_text(l, u), u), l);
    ASSERT_EQ(is_deterministic(l), [&] {
      std::set<OverrideKey> keys;
      for (const auto& x : l) keys.insert(key_of(x));
      return keys.size() == l.size();
    }());
  }
}

TEST(DlaProperties, CombineLaws) {
  const Universe u = Universe::with_counts(2, 2, 3, 3);
  const auto pool = all_links(u);
  gen::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto x = gen::linkage(rng, pool, 5), y = gen::linkage(rng, pool, 5),
               z = gen::linkage(rng, pool, 5);
    EXPECT_EQ(combine(x, y), combine(y, x));
    EXPECT_EQ(combine(x, combine(y, z)), combine(combine(x, y), z));
    EXPECT_EQ(combine(x, x), x);
    EXPECT_EQ(combine(x, {}), x);
    // Distribution needs both parts non-empty: with z = 0 it would force
    // x <| y to contain x, contradicting the collapse laws.
    if (!y.empty() && !z.empty()) {
      EXPECT_EQ(override(x, combine(y, z)), combine(override(x, y), override(x, z)));
    }
  }
}

TEST(DlaProperties, NormalizeAgreesWithAxiomChaining) {
  const Universe u = Universe::with_counts(2, 2, 3, 2);
  const auto pool = all_links(u);
  gen::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const LinkageTerm t = gen::term(rng, pool, 6);
    const DataLinkage n = normalize(t);
    ASSERT_EQ(n, oracle::axiom_normalize(t)) << format_term(t, u);
    ASSERT_EQ(normalize(LinkageTerm::of(n)), n);
    ASSERT_EQ(normalize(gen::mirror_combines(t)), n);
    ASSERT_EQ(normalize(parse_term(format_term(t, u), u)), n);
  }
}

TEST(DlaUniverse, Validation) {
  EXPECT_THROW(Universe({}, {"f"}, {"#0"}, 2), ConfigError);
  EXPECT_THROW(Universe({"s"}, {"f"}, {}, 2), ConfigError);
  EXPECT_THROW(Universe({"s", "s"}, {"f"}, {"#0"}, 2), ConfigError);
  EXPECT_THROW(Universe({"s"}, {"f"}, {"#0"}, 4), ConfigError);
  EXPECT_NO_THROW(Universe({"s"}, {}, {"#0"}, 2));
  const Universe u = Universe::with_counts(2, 1, 3, 5);
  EXPECT_EQ(u.name(SpotId{1}), "s1");
  EXPECT_EQ(u.name(AtomId{2}), "#2");
  EXPECT_EQ(u.find_field("f0"), FieldId{0});
}

}  // namespace
}  // namespace dld
