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

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dld/action.hpp"
#include "dld/linkage.hpp"

namespace dld {

enum class Reply { kFalse, kTrue };

inline Reply to_reply(bool b) { return b ? Reply::kTrue : Reply::kFalse; }
inline char reply_char(Reply r) { return r == Reply::kTrue ? 'T' : 'F'; }

struct Binding {
  char var;
  std::variant<AtomId, MeadowValue> value;
  bool operator==(const Binding&) const = default;
};

/// One rule application: which row of which operator decided, at which
/// priority, and with which pattern variables bound.
struct RuleFire {
  Action action;
  std::string row;  // "E3" for the third effect row, "Y2", "sd.1", ...
  int priority = 1;
  std::vector<Binding> bindings;
};

struct StepOutcome {
  DataLinkage state;
  Reply reply = Reply::kFalse;
  std::vector<RuleFire> fired;
};

struct EvalOptions {
  // Scan links in a pseudo-random order instead of canonical order. Results
  // must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
  // Require distinct pattern positions to match distinct links.
  bool strict_multiset = false;
};

inline std::string format_fire(const RuleFire& r, const Universe& u) {
  std::string out = format_action(r.action, u) + " " + r.row + " [p" +
                    std::to_string(r.priority) + "]";
  for (const auto& b : r.bindings) {
    out += " ";
    out += b.var;
    out += "=";
    if (const auto* a = std::get_if<AtomId>(&b.value))
      out += u.name(*a);
    else
      out += std::to_string(std::get<MeadowValue>(b.value).residue);
  }
  return out;
}

// l with every link keyed like `link` replaced by `link`.
inline DataLinkage override_one(DataLinkage l, const AtomicLink& link) {
  const OverrideKey k = key_of(link);
  l.erase_if([&](const AtomicLink& x) { return key_of(x) == k; });
  l.insert(link);
  return l;
}

namespace detail {

// Read access to a linkage in a chosen scan order. Guards pick the first
// matching link they meet, so the order is what a shuffled run perturbs.
class Scan {
 public:
  Scan(const DataLinkage& l, const EvalOptions& opt) : l_(l) {
    if (opt.shuffle_seed) {
      shuffled_ = l.links();
      std::mt19937_64 rng(*opt.shuffle_seed);
      std::shuffle(shuffled_.begin(), shuffled_.end(), rng);
      order_ = &shuffled_;
    } else {
      order_ = &l.links();
    }
  }

  const DataLinkage& linkage() const { return l_; }
  const std::vector<AtomicLink>& order() const { return *order_; }

  std::vector<AtomId> spots(SpotId s) const {
    std::vector<AtomId> out;
    for (const auto& x : *order_)
      if (const auto* p = std::get_if<SpotLink>(&x); p && p->spot == s)
        out.push_back(p->atom);
    return out;
  }

  std::optional<AtomId> first_spot(SpotId s) const {
    for (const auto& x : *order_)
      if (const auto* p = std::get_if<SpotLink>(&x); p && p->spot == s)
        return p->atom;
    return std::nullopt;
  }

  std::vector<std::optional<AtomId>> fields(AtomId a, FieldId f) const {
    std::vector<std::optional<AtomId>> out;
    for (const auto& x : *order_) {
      if (const auto* p = std::get_if<PartialFieldLink>(&x);
          p && p->atom == a && p->field == f)
        out.push_back(std::nullopt);
      if (const auto* p = std::get_if<FieldLink>(&x);
          p && p->source == a && p->field == f)
        out.push_back(p->target);
    }
    return out;
  }

  std::optional<AtomId> first_flink(AtomId a, FieldId f) const {
    for (const auto& x : *order_)
      if (const auto* p = std::get_if<FieldLink>(&x);
          p && p->source == a && p->field == f)
        return p->target;
    return std::nullopt;
  }

  bool has_pflink(AtomId a, FieldId f) const {
    return l_.contains(PartialFieldLink{a, f});
  }

  std::vector<MeadowValue> values(AtomId a) const {
    std::vector<MeadowValue> out;
    for (const auto& x : *order_)
      if (const auto* p = std::get_if<ValueAssociation>(&x); p && p->atom == a)
        out.push_back(p->value);
    return out;
  }

 private:
  const DataLinkage& l_;
  std::vector<AtomicLink> shuffled_;
  const std::vector<AtomicLink>* order_;
};

struct Hit {
  int row;
  int priority;
  std::vector<Binding> bindings;
};

inline Binding bind(char v, AtomId a) { return {v, a}; }
inline Binding bind(char v, MeadowValue n) { return {v, n}; }

// X + s:a + s:b with a != b.
inline std::optional<std::vector<Binding>> spot_nondet(const Scan& sc,
                                                       SpotId s) {
  auto ts = sc.spots(s);
  if (ts.size() < 2) return std::nullopt;
  return std::vector<Binding>{bind('a', ts[0]), bind('b', ts[1])};
}

// X + s:a + a.f:b + a.f:c (b != c), reported as kind 0, or
// X + s:a + a.f:b + a.f:?, reported as kind 1.
struct FieldShield {
  int kind;
  std::vector<Binding> bindings;
};

inline std::optional<FieldShield> field_nondet(const Scan& sc, SpotId s,
                                               FieldId f) {
  for (AtomId a : sc.spots(s)) {
    auto es = sc.fields(a, f);
    if (es.size() < 2) continue;
    std::vector<AtomId> targets;
    for (const auto& e : es)
      if (e) targets.push_back(*e);
    if (targets.size() >= 2)
      return FieldShield{0, {bind('a', a), bind('b', targets[0]),
                             bind('c', targets[1])}};
    return FieldShield{1, {bind('a', a), bind('b', targets[0])}};
  }
  return std::nullopt;
}

// X + s:a + a=n + a=m with n != m.
inline std::optional<std::vector<Binding>> value_nondet(const Scan& sc,
                                                        SpotId s) {
  for (AtomId a : sc.spots(s)) {
    auto vs = sc.values(a);
    if (vs.size() >= 2)
      return std::vector<Binding>{bind('a', a), bind('n', vs[0]),
                                  bind('m', vs[1])};
  }
  return std::nullopt;
}

// A spot together with its atom and that atom's value, as matched by
// X + s:a + a=n.
struct Valued {
  AtomId atom;
  MeadowValue value;
};

inline std::optional<Valued> valued(const Scan& sc, SpotId s) {
  for (AtomId a : sc.spots(s)) {
    auto vs = sc.values(a);
    if (!vs.empty()) return Valued{a, vs.front()};
  }
  return std::nullopt;
}

struct EffectHit {
  DataLinkage state;
  Hit hit;
};

struct YieldHit {
  Reply reply;
  Hit hit;
};

inline std::optional<AtomId> fresh_atom(const Universe& u,
                                        const DataLinkage& l) {
  const auto used = atobj(l);
  for (AtomId a : u.atoms())
    if (!used.count(a)) return a;
  return std::nullopt;
}

// The shields shared by effect and yield, listed in table order. Returns
// the row number it fired as (1-based) or nullopt.
struct ShieldHit {
  int row;
  std::vector<Binding> bindings;
};

inline std::optional<ShieldHit> shields(const Scan& sc, const Action& a) {
  int row = 0;
  auto spot = [&](SpotId s) -> std::optional<ShieldHit> {
    ++row;
    if (auto b = spot_nondet(sc, s)) return ShieldHit{row, *b};
    return std::nullopt;
  };
  auto field = [&](SpotId s, FieldId f) -> std::optional<ShieldHit> {
    row += 2;
    if (auto h = field_nondet(sc, s, f))
      return ShieldHit{row - 1 + h->kind, h->bindings};
    return std::nullopt;
  };
  auto value = [&](SpotId s) -> std::optional<ShieldHit> {
    ++row;
    if (auto b = value_nondet(sc, s)) return ShieldHit{row, *b};
    return std::nullopt;
  };
  std::optional<ShieldHit> h;
  switch (a.op) {
    case Op::kGetAtObj:
    case Op::kClrSpot:
    case Op::kAddField:
    case Op::kUndefVTst:
      return spot(a.s);
    case Op::kSetSpot:
    case Op::kEqualTst:
      if ((h = spot(a.s))) return h;
      return spot(a.t);
    case Op::kUndefTst:
      return std::nullopt;
    case Op::kRmvField:
    case Op::kHasField:
    case Op::kClrField:
      if ((h = spot(a.s))) return h;
      return field(a.s, a.f);
    case Op::kSetField:
      if ((h = spot(a.s))) return h;
      if ((h = field(a.s, a.f))) return h;
      return spot(a.t);
    case Op::kGetField:
      if ((h = spot(a.s))) return h;
      if ((h = spot(a.t))) return h;
      return field(a.t, a.f);
    case Op::kAssZero:
    case Op::kAssOne:
      if ((h = spot(a.s))) return h;
      return value(a.s);
    case Op::kAssAdd:
    case Op::kAssMul:
      for (SpotId s : {a.s, a.t, a.u}) {
        if ((h = spot(s))) return h;
        if ((h = value(s))) return h;
      }
      return std::nullopt;
    case Op::kAssNeg:
    case Op::kAssInv:
    case Op::kEqValTst:
      for (SpotId s : {a.s, a.t}) {
        if ((h = spot(s))) return h;
        if ((h = value(s))) return h;
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// Rows after the shields, for the effect operator. `first` is the row number
// of the first non-shield row.
inline EffectHit basic_effect_rows(const Universe& u, const Scan& sc,
                                   const Action& a, bool strict, int first) {
  const DataLinkage& l = sc.linkage();
  const PrimeMeadow& mdw = u.meadow();
  auto hit = [&](DataLinkage st, int offset, int prio,
                 std::vector<Binding> b = {}) {
    return EffectHit{std::move(st), Hit{first + offset, prio, std::move(b)}};
  };
  auto removed = [&](AtomicLink x) {
    DataLinkage out = l;
    out.erase(x);
    return out;
  };
  switch (a.op) {
    case Op::kGetAtObj: {
      if (auto fresh = fresh_atom(u, l))
        return hit(override_one(l, SpotLink{a.s, *fresh}), 0, 2,
                   {bind('a', *fresh)});
      return hit(l, 1, 2);
    }
    case Op::kSetSpot: {
      if (auto ta = sc.first_spot(a.t))
        return hit(override_one(l, SpotLink{a.s, *ta}), 0, 2, {bind('a', *ta)});
      if (auto sa = sc.first_spot(a.s))
        return hit(removed(SpotLink{a.s, *sa}), 1, 3, {bind('a', *sa)});
      return hit(l, 2, 4);
    }
    case Op::kClrSpot: {
      if (auto sa = sc.first_spot(a.s))
        return hit(removed(SpotLink{a.s, *sa}), 0, 2, {bind('a', *sa)});
      return hit(l, 1, 3);
    }
    case Op::kAddField: {
      if (auto sa = sc.first_spot(a.s)) {
        if (auto b = sc.first_flink(*sa, a.f))
          return hit(l, 0, 2, {bind('a', *sa), bind('b', *b)});
        if (sc.has_pflink(*sa, a.f)) return hit(l, 1, 2, {bind('a', *sa)});
        return hit(override_one(l, PartialFieldLink{*sa, a.f}), 2, 3,
                   {bind('a', *sa)});
      }
      return hit(l, 3, 4);
    }
    case Op::kRmvField: {
      if (auto sa = sc.first_spot(a.s)) {
        if (auto b = sc.first_flink(*sa, a.f))
          return hit(removed(FieldLink{*sa, a.f, *b}), 0, 2,
                     {bind('a', *sa), bind('b', *b)});
        if (sc.has_pflink(*sa, a.f))
          return hit(removed(PartialFieldLink{*sa, a.f}), 1, 2,
                     {bind('a', *sa)});
      }
      return hit(l, 2, 3);
    }
    case Op::kSetField: {
      auto sa = sc.first_spot(a.s);
      auto tc = sc.first_spot(a.t);
      if (sa && tc) {
        // Under strict matching s:a and t:c must be different links.
        const bool distinct = !(a.s == a.t && *sa == *tc);
        if (!strict || distinct) {
          if (auto b = sc.first_flink(*sa, a.f)) {
            DataLinkage out = removed(FieldLink{*sa, a.f, *b});
            out.insert(FieldLink{*sa, a.f, *tc});
            return hit(std::move(out), 0, 2,
                       {bind('a', *sa), bind('b', *b), bind('c', *tc)});
          }
          if (sc.has_pflink(*sa, a.f)) {
            DataLinkage out = removed(PartialFieldLink{*sa, a.f});
            out.insert(FieldLink{*sa, a.f, *tc});
            return hit(std::move(out), 1, 2, {bind('a', *sa), bind('b', *tc)});
          }
        }
      }
      if (sa) {
        if (auto b = sc.first_flink(*sa, a.f)) {
          DataLinkage out = removed(FieldLink{*sa, a.f, *b});
          out.insert(PartialFieldLink{*sa, a.f});
          return hit(std::move(out), 2, 3, {bind('a', *sa), bind('b', *b)});
        }
      }
      return hit(l, 3, 4);
    }
    case Op::kClrField: {
      if (auto sa = sc.first_spot(a.s)) {
        if (auto b = sc.first_flink(*sa, a.f)) {
          DataLinkage out = removed(FieldLink{*sa, a.f, *b});
          out.insert(PartialFieldLink{*sa, a.f});
          return hit(std::move(out), 0, 2, {bind('a', *sa), bind('b', *b)});
        }
      }
      return hit(l, 1, 3);
    }
    case Op::kGetField: {
      if (auto ta = sc.first_spot(a.t)) {
        if (auto b = sc.first_flink(*ta, a.f))
          return hit(override_one(l, SpotLink{a.s, *b}), 0, 2,
                     {bind('a', *ta), bind('b', *b)});
        if (sc.has_pflink(*ta, a.f)) {
          if (auto sc_ = sc.first_spot(a.s)) {
            const bool distinct = a.s != a.t;
            if (!strict || distinct)
              return hit(removed(SpotLink{a.s, *sc_}), 1, 2,
                         {bind('a', *ta), bind('c', *sc_)});
          }
        }
      }
      return hit(l, 2, 3);
    }
    case Op::kAssZero:
    case Op::kAssOne: {
      if (auto sa = sc.first_spot(a.s)) {
        MeadowValue n = a.op == Op::kAssZero ? mdw.zero() : mdw.one();
        return hit(override_one(l, ValueAssociation{*sa, n}), 0, 2,
                   {bind('a', *sa)});
      }
      return hit(l, 1, 3);
    }
    case Op::kAssAdd:
    case Op::kAssMul: {
      auto sa = sc.first_spot(a.s);
      auto tb = valued(sc, a.t);
      auto uc = valued(sc, a.u);
      if (sa && tb && uc) {
        const bool distinct = a.s != a.t && a.t != a.u && a.s != a.u &&
                              tb->atom != uc->atom;
        if (!strict || distinct) {
          MeadowValue r = a.op == Op::kAssAdd ? mdw.add(tb->value, uc->value)
                                              : mdw.mul(tb->value, uc->value);
          return hit(override_one(l, ValueAssociation{*sa, r}), 0, 2,
                     {bind('a', *sa), bind('b', tb->atom), bind('n', tb->value),
                      bind('c', uc->atom), bind('m', uc->value)});
        }
      }
      return hit(l, 1, 3);
    }
    case Op::kAssNeg:
    case Op::kAssInv: {
      auto sa = sc.first_spot(a.s);
      auto tb = valued(sc, a.t);
      if (sa && tb && (!strict || a.s != a.t)) {
        MeadowValue r =
            a.op == Op::kAssNeg ? mdw.neg(tb->value) : mdw.inv(tb->value);
        return hit(override_one(l, ValueAssociation{*sa, r}), 0, 2,
                   {bind('a', *sa), bind('b', tb->atom), bind('n', tb->value)});
      }
      return hit(l, 1, 3);
    }
    case Op::kEqualTst:
    case Op::kUndefTst:
    case Op::kHasField:
    case Op::kEqValTst:
    case Op::kUndefVTst:
      return hit(l, 0, 1);
    default:
      throw std::invalid_argument("not a basic action");
  }
}

inline YieldHit basic_yield_rows(const Scan& sc, const Action& a,
                                 bool strict, int first,
                                 const Universe& u) {
  const DataLinkage& l = sc.linkage();
  auto hit = [&](bool r, int offset, int prio, std::vector<Binding> b = {}) {
    return YieldHit{to_reply(r), Hit{first + offset, prio, std::move(b)}};
  };
  switch (a.op) {
    case Op::kGetAtObj:
      if (fresh_atom(u, l)) return hit(true, 0, 2);
      return hit(false, 1, 2);
    case Op::kSetSpot:
    case Op::kClrSpot:
      return hit(true, 0, 2);
    case Op::kEqualTst: {
      auto ss = sc.spots(a.s);
      auto ts = sc.spots(a.t);
      for (AtomId x : ss) {
        if (std::find(ts.begin(), ts.end(), x) == ts.end()) continue;
        if (strict && a.s == a.t) continue;
        return hit(true, 0, 2, {bind('a', x)});
      }
      if (!ss.empty()) return hit(false, 1, 3, {bind('a', ss.front())});
      if (!ts.empty()) return hit(false, 2, 3, {bind('a', ts.front())});
      return hit(true, 3, 4);
    }
    case Op::kUndefTst:
      if (auto sa = sc.first_spot(a.s)) return hit(false, 0, 1, {bind('a', *sa)});
      return hit(true, 1, 2);
    case Op::kAddField:
      if (auto sa = sc.first_spot(a.s)) {
        if (auto b = sc.first_flink(*sa, a.f))
          return hit(false, 0, 2, {bind('a', *sa), bind('b', *b)});
        if (sc.has_pflink(*sa, a.f)) return hit(false, 1, 2, {bind('a', *sa)});
        return hit(true, 2, 3, {bind('a', *sa)});
      }
      return hit(false, 3, 4);
    case Op::kRmvField:
    case Op::kHasField:
    case Op::kSetField:
    case Op::kClrField:
      if (auto sa = sc.first_spot(a.s)) {
        if (auto b = sc.first_flink(*sa, a.f))
          return hit(true, 0, 2, {bind('a', *sa), bind('b', *b)});
        if (sc.has_pflink(*sa, a.f)) return hit(true, 1, 2, {bind('a', *sa)});
      }
      return hit(false, 2, 3);
    case Op::kGetField:
      if (auto ta = sc.first_spot(a.t)) {
        if (auto b = sc.first_flink(*ta, a.f))
          return hit(true, 0, 2, {bind('a', *ta), bind('b', *b)});
        if (sc.has_pflink(*ta, a.f)) return hit(true, 1, 2, {bind('a', *ta)});
      }
      return hit(false, 2, 3);
    case Op::kAssZero:
    case Op::kAssOne:
      if (auto sa = sc.first_spot(a.s)) return hit(true, 0, 2, {bind('a', *sa)});
      return hit(false, 1, 3);
    case Op::kAssAdd:
    case Op::kAssMul: {
      auto sa = sc.first_spot(a.s);
      auto tb = valued(sc, a.t);
      auto uc = valued(sc, a.u);
      if (sa && tb && uc) {
        const bool distinct = a.s != a.t && a.t != a.u && a.s != a.u &&
                              tb->atom != uc->atom;
        if (!strict || distinct)
          return hit(true, 0, 2,
                     {bind('a', *sa), bind('b', tb->atom), bind('n', tb->value),
                      bind('c', uc->atom), bind('m', uc->value)});
      }
      return hit(false, 1, 3);
    }
    case Op::kAssNeg:
    case Op::kAssInv: {
      auto sa = sc.first_spot(a.s);
      auto tb = valued(sc, a.t);
      if (sa && tb && (!strict || a.s != a.t))
        return hit(true, 0, 2,
                   {bind('a', *sa), bind('b', tb->atom), bind('n', tb->value)});
      return hit(false, 1, 3);
    }
    case Op::kEqValTst: {
      for (AtomId x : sc.spots(a.s)) {
        for (MeadowValue n : sc.values(x)) {
          for (AtomId y : sc.spots(a.t)) {
            if (strict && (a.s == a.t || x == y)) continue;
            auto vs = sc.values(y);
            if (std::find(vs.begin(), vs.end(), n) != vs.end())
              return hit(true, 0, 2, {bind('a', x), bind('n', n), bind('b', y)});
          }
        }
      }
      return hit(false, 1, 3);
    }
    case Op::kUndefVTst: {
      if (auto sa = sc.first_spot(a.s)) {
        auto vs = sc.values(*sa);
        if (!vs.empty())
          return hit(false, 0, 2, {bind('a', *sa), bind('n', vs.front())});
        return hit(true, 1, 3, {bind('a', *sa)});
      }
      return hit(false, 2, 4);
    }
    default:
      throw std::invalid_argument("not a basic action");
  }
}

// Number of priority-1 shield rows for the action (effect and yield share
// them, except where the operator's only effect row is the identity).
inline int shield_rows(Op op) {
  switch (op) {
    case Op::kGetAtObj:
    case Op::kClrSpot:
    case Op::kAddField:
    case Op::kUndefVTst:
      return 1;
    case Op::kSetSpot:
    case Op::kEqualTst:
      return 2;
    case Op::kUndefTst:
      return 0;
    case Op::kRmvField:
    case Op::kHasField:
    case Op::kClrField:
      return 3;
    case Op::kSetField:
    case Op::kGetField:
      return 4;
    case Op::kAssZero:
    case Op::kAssOne:
      return 2;
    case Op::kAssAdd:
    case Op::kAssMul:
      return 6;
    case Op::kAssNeg:
    case Op::kAssInv:
    case Op::kEqValTst:
      return 4;
    default:
      return 0;
  }
}

// Test actions leave every state unchanged through a single identity row.
inline bool is_pure_test(Op op) {
  return op == Op::kEqualTst || op == Op::kUndefTst || op == Op::kHasField ||
         op == Op::kEqValTst || op == Op::kUndefVTst;
}

inline RuleFire make_fire(const Action& a, char kind, const Hit& h) {
  return RuleFire{a, std::string(1, kind) + std::to_string(h.row), h.priority,
                  h.bindings};
}

}  // namespace detail

/// Effect of a basic action. Guards are tried in descending priority; the
/// first enabled row decides.
inline DataLinkage effect(const Universe& u, const Action& a,
                          const DataLinkage& l, const EvalOptions& opt = {},
                          std::vector<RuleFire>* fired = nullptr) {
  if (!is_basic(a.op)) throw std::invalid_argument("effect: not a basic action");
  detail::Scan sc(l, opt);
  if (detail::is_pure_test(a.op)) {
    if (fired) fired->push_back(detail::make_fire(a, 'E', {1, 1, {}}));
    return l;
  }
  if (auto sh = detail::shields(sc, a)) {
    if (fired)
      fired->push_back(detail::make_fire(a, 'E', {sh->row, 1, sh->bindings}));
    return l;
  }
  auto r = detail::basic_effect_rows(u, sc, a, opt.strict_multiset,
                                     detail::shield_rows(a.op) + 1);
  if (fired) fired->push_back(detail::make_fire(a, 'E', r.hit));
  return std::move(r.state);
}

inline Reply yield(const Universe& u, const Action& a, const DataLinkage& l,
                   const EvalOptions& opt = {},
                   std::vector<RuleFire>* fired = nullptr) {
  if (!is_basic(a.op)) throw std::invalid_argument("yield: not a basic action");
  detail::Scan sc(l, opt);
  if (auto sh = detail::shields(sc, a)) {
    if (fired)
      fired->push_back(detail::make_fire(a, 'Y', {sh->row, 1, sh->bindings}));
    return Reply::kFalse;
  }
  auto r = detail::basic_yield_rows(sc, a, opt.strict_multiset,
                                    detail::shield_rows(a.op) + 1, u);
  if (fired) fired->push_back(detail::make_fire(a, 'Y', r.hit));
  return r.reply;
}

inline StepOutcome step(const Universe& u, const Action& a,
                        const DataLinkage& l, const EvalOptions& opt = {}) {
  StepOutcome out;
  out.state = effect(u, a, l, opt, &out.fired);
  out.reply = yield(u, a, l, opt, &out.fired);
  return out;
}

}  // namespace dld
