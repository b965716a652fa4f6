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

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dld/check/oracles.hpp"
#include "dld/check/random.hpp"
#include "dld/refine.hpp"
#include "dld/thread.hpp"

namespace dld::check {

struct SuiteOptions {
  std::size_t spots = 2;
  std::size_t fields = 1;
  std::size_t atoms = 2;
  std::uint32_t modulus = 2;
  std::size_t cases = 100;
  std::uint64_t seed = 1;
  std::size_t shuffles = 5;
  std::size_t term_depth = 6;
  std::size_t oracle_samples = 100;
  std::size_t unfold_depth = 32;
  bool include_nontight = false;
  bool include_reclaim = true;
  SetOptions set;
  std::size_t max_failure_lines = 20;

  Universe universe() const {
    return Universe::with_counts(spots, fields, atoms, modulus);
  }
};

struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // the first few, for the report
  std::size_t max_lines = 20;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < max_lines) failures.push_back(describe());
  }

  void merge(const SuiteReport& o) {
    checked += o.checked;
    passed += o.passed;
    failed += o.failed;
    for (const auto& f : o.failures)
      if (failures.size() < max_lines) failures.push_back(f);
  }

  bool ok() const { return failed == 0; }

  std::string summary() const {
    return "checked=" + std::to_string(checked) + " passed=" +
           std::to_string(passed) + " failed=" + std::to_string(failed);
  }
};

namespace detail {

inline SuiteReport report_for(const char* name, const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = name;
  r.max_lines = opt.max_failure_lines;
  return r;
}

// Every subset of the universe's atomic links, i.e. every state.
inline void for_each_linkage(const Universe& u,
                             const std::function<void(const DataLinkage&)>& f) {
  const auto pool = all_links(u);
  if (pool.size() > 24)
    throw ConfigError("universe too large for exhaustive linkage enumeration");
  std::vector<AtomicLink> cur;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    cur.clear();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) cur.push_back(pool[i]);
    f(DataLinkage(cur));
  }
}

inline std::string text(const DataLinkage& l, const Universe& u) {
  return "{" + canonical_text(l, u) + "}";
}

// Axiom family: builds both sides of one random instance.
struct AxiomFamily {
  std::string name;
  std::function<std::pair<LinkageTerm, LinkageTerm>(gen::Rng&)> instance;
};

enum class LinkKind { kSpot, kPartial, kField, kValue };

inline LinkKind kind_of(const AtomicLink& l) {
  return static_cast<LinkKind>(l.index());
}

inline bool has_leaf(const LinkageTerm& t) {
  switch (t.kind()) {
    case LinkageTerm::Kind::kEmpty:
      return false;
    case LinkageTerm::Kind::kLeaf:
      return true;
    default:
      return has_leaf(t.lhs()) || has_leaf(t.rhs());
  }
}

inline std::vector<AxiomFamily> axiom_families(const Universe& u,
                                               std::size_t depth) {
  using T = LinkageTerm;
  const auto pool = all_links(u);
  auto rand_term = [pool, depth](gen::Rng& rng) { return gen::term(rng, pool, depth); };
  auto of_kind = [pool](gen::Rng& rng, LinkKind k) {
    while (true) {
      AtomicLink l = gen::link(rng, pool);
      if (kind_of(l) == k) return l;
    }
  };
  std::vector<AxiomFamily> fams;
  fams.push_back({"X+Y=Y+X", [=](gen::Rng& r) {
                    T x = rand_term(r), y = rand_term(r);
                    return std::pair{T::combine(x, y), T::combine(y, x)};
                  }});
  fams.push_back({"X+(Y+Z)=(X+Y)+Z", [=](gen::Rng& r) {
                    T x = rand_term(r), y = rand_term(r), z = rand_term(r);
                    return std::pair{T::combine(x, T::combine(y, z)),
                                     T::combine(T::combine(x, y), z)};
                  }});
  fams.push_back({"X+X=X", [=](gen::Rng& r) {
                    T x = rand_term(r);
                    return std::pair{T::combine(x, x), x};
                  }});
  fams.push_back({"X+0=X", [=](gen::Rng& r) {
                    T x = rand_term(r);
                    return std::pair{T::combine(x, T::empty()), x};
                  }});
  fams.push_back({"0<|X=X", [=](gen::Rng& r) {
                    T x = rand_term(r);
                    return std::pair{T::override(T::empty(), x), x};
                  }});
  fams.push_back({"X<|0=X", [=](gen::Rng& r) {
                    T x = rand_term(r);
                    return std::pair{T::override(x, T::empty()), x};
                  }});
  // Distribution is only sound for non-empty Y and Z: with Z = 0 it would
  // make X <| Y contain X. A term denotes 0 exactly when it has no leaf.
  auto nonempty_term = [rand_term](gen::Rng& rng) {
    while (true) {
      T t = rand_term(rng);
      if (has_leaf(t)) return t;
    }
  };
  fams.push_back({"X<|(Y+Z)=(X<|Y)+(X<|Z)", [=](gen::Rng& r) {
                    T x = rand_term(r), y = nonempty_term(r), z = nonempty_term(r);
                    return std::pair{T::override(x, T::combine(y, z)),
                                     T::combine(T::override(x, y), T::override(x, z))};
                  }});

  // Link-level families: (X + x) <| y = X <| y when x and y collide,
  // (X <| y) + x otherwise, with x and y drawn subject to the side
  // condition.
  struct LinkFamily {
    const char* name;
    LinkKind kx, ky;
    bool drop;
    std::function<bool(const AtomicLink&, const AtomicLink&)> cond;
  };
  auto same_key = [](const AtomicLink& x, const AtomicLink& y) {
    return key_of(x) == key_of(y);
  };
  auto distinct_key = [](const AtomicLink& x, const AtomicLink& y) {
    return key_of(x) != key_of(y);
  };
  auto any = [](const AtomicLink&, const AtomicLink&) { return true; };
  using K = LinkKind;
  const std::vector<LinkFamily> links = {
      {"(X+s^a)<|s^b", K::kSpot, K::kSpot, true, same_key},
      {"(X+a.f)<|a.f", K::kPartial, K::kPartial, true, same_key},
      {"(X+a.f>b)<|a.f", K::kField, K::kPartial, true, same_key},
      {"(X+a.f)<|a.f>b", K::kPartial, K::kField, true, same_key},
      {"(X+a.f>b)<|a.f>c", K::kField, K::kField, true, same_key},
      {"(X+a=n)<|a=m", K::kValue, K::kValue, true, same_key},
      {"(X+s^a)<|t^b,s!=t", K::kSpot, K::kSpot, false, distinct_key},
      {"(X+a.f)<|s^b", K::kPartial, K::kSpot, false, any},
      {"(X+a.f>b)<|s^c", K::kField, K::kSpot, false, any},
      {"(X+a=n)<|s^b", K::kValue, K::kSpot, false, any},
      {"(X+s^a)<|b.f", K::kSpot, K::kPartial, false, any},
      {"(X+a.f)<|b.g,(a,f)!=(b,g)", K::kPartial, K::kPartial, false, distinct_key},
      {"(X+a.f>b)<|c.g,(a,f)!=(c,g)", K::kField, K::kPartial, false, distinct_key},
      {"(X+a=n)<|b.f", K::kValue, K::kPartial, false, any},
      {"(X+s^a)<|b.f>c", K::kSpot, K::kField, false, any},
      {"(X+a.f)<|b.g>c,(a,f)!=(b,g)", K::kPartial, K::kField, false, distinct_key},
      {"(X+a.f>b)<|c.g>d,(a,f)!=(c,g)", K::kField, K::kField, false, distinct_key},
      {"(X+a=n)<|b.f>c", K::kValue, K::kField, false, any},
      {"(X+s^a)<|b=n", K::kSpot, K::kValue, false, any},
      {"(X+a.f)<|b=n", K::kPartial, K::kValue, false, any},
      {"(X+a.f>b)<|c=n", K::kField, K::kValue, false, any},
      {"(X+a=n)<|b=m,a!=b", K::kValue, K::kValue, false, distinct_key},
  };
  for (const LinkFamily& lf : links) {
    fams.push_back({lf.name, [=](gen::Rng& r) {
                      AtomicLink x, y;
                      do {
                        x = of_kind(r, lf.kx);
                        y = of_kind(r, lf.ky);
                      } while (!lf.cond(x, y));
                      T big_x = rand_term(r);
                      T lhs = T::override(T::combine(big_x, T::leaf(x)), T::leaf(y));
                      T rhs = lf.drop ? T::override(big_x, T::leaf(y))
                                      : T::combine(T::override(big_x, T::leaf(y)), T::leaf(x));
                      return std::pair{lhs, rhs};
                    }});
  }
  return fams;
}

}  // namespace detail

/// Random instances of every DLA axiom, both sides normalized.
inline SuiteReport run_axioms(const SuiteOptions& opt) {
  SuiteReport rep = detail::report_for("axioms", opt);
  const Universe u = opt.universe();
  gen::Rng rng(opt.seed);
  for (const auto& fam : detail::axiom_families(u, 3)) {
    for (std::size_t i = 0; i < opt.cases; ++i) {
      auto [lhs, rhs] = fam.instance(rng);
      const DataLinkage l = normalize(lhs), r = normalize(rhs);
      rep.record(l == r, [&] {
        return "FAIL axiom " + fam.name + " lhs=" + format_term(lhs, u) + " -> " +
               detail::text(l, u) + " rhs=" + format_term(rhs, u) + " -> " +
               detail::text(r, u);
      });
    }
  }
  return rep;
}

/// Elimination of overriding: random terms normalize to basic forms, the
/// result is stable, independent of operand order under combination, and
/// agrees with literal axiom chaining on a sample.
inline SuiteReport run_thm1(const SuiteOptions& opt) {
  SuiteReport rep = detail::report_for("thm1", opt);
  const Universe u = opt.universe();
  const auto pool = all_links(u);
  gen::Rng rng(opt.seed);
  for (std::size_t i = 0; i < opt.cases; ++i) {
    const LinkageTerm t = gen::term(rng, pool, opt.term_depth);
    const DataLinkage n = normalize(t);
    const LinkageTerm basic = LinkageTerm::of(n);
    bool ok = fits(n, u) && normalize(basic) == n &&
              normalize(gen::mirror_combines(t)) == n;
    std::optional<DataLinkage> slow;
    if (i < opt.oracle_samples) {
      slow = oracle::axiom_normalize(t);
      ok = ok && *slow == n;
    }
    rep.record(ok, [&] {
      return "FAIL thm1 term=" + format_term(t, u) + " normalize=" +
             detail::text(n, u) +
             (slow ? " oracle=" + detail::text(*slow, u) : std::string());
    });
  }
  return rep;
}

/// Unique normal forms: every action on every state (deterministic or not)
/// yields one canonical state and one reply, unchanged by shuffling the
/// evaluator's internal iteration order.
inline SuiteReport run_thm2(const SuiteOptions& opt) {
  SuiteReport rep = detail::report_for("thm2", opt);
  const Universe u = opt.universe();
  const auto actions = enumerate_actions(u, opt.include_reclaim);
  detail::for_each_linkage(u, [&](const DataLinkage& l) {
    for (const Action& a : actions) {
      const DataLinkage e = effect_dldr(u, a, l);
      const Reply y = yield_dldr(u, a, l);
      bool ok = fits(e, u) && DataLinkage(e.links()) == e;
      std::size_t diverged_at = 0;
      for (std::size_t k = 1; ok && k <= opt.shuffles; ++k) {
        EvalOptions eo;
        eo.shuffle_seed = opt.seed * 1000003 + k;
        if (effect_dldr(u, a, l, eo) != e || yield_dldr(u, a, l, eo) != y) {
          ok = false;
          diverged_at = k;
        }
      }
      rep.record(ok, [&] {
        return "FAIL thm2 " + format_action(a, u) + " " + detail::text(l, u) +
               " shuffle=" + std::to_string(diverged_at);
      });
    }
  });
  return rep;
}

/// Effects keep deterministic states deterministic.
inline SuiteReport run_determinism(const SuiteOptions& opt) {
  SuiteReport rep = detail::report_for("determinism", opt);
  const Universe u = opt.universe();
  const auto actions = enumerate_actions(u, opt.include_reclaim);
  detail::for_each_linkage(u, [&](const DataLinkage& l) {
    if (!is_deterministic(l)) return;
    for (const Action& a : actions) {
      const DataLinkage e = effect_dldr(u, a, l);
      rep.record(is_deterministic(e), [&] {
        return "FAIL determinism " + format_action(a, u) + " " +
               detail::text(l, u) + " -> " + detail::text(e, u);
      });
    }
  });
  return rep;
}

/// Differential check of the rewrite semantics against the set semantics
/// through retrieve. Only tight states unless include_nontight is set.
inline SuiteReport run_thm3(const SuiteOptions& opt) {
  SuiteReport rep = detail::report_for("thm3", opt);
  const Universe u = opt.universe();
  const auto actions = enumerate_actions(u, opt.include_reclaim);
  RefineOptions ro;
  ro.set = opt.set;
  StateBounds b;
  b.tight_only = !opt.include_nontight;
  enumerate_states(u, b, [&](const SetState& st) {
    for (const Action& a : actions) {
      const CommutationVerdict v = check_commutation(u, a, st, ro);
      rep.record(v.pass, [&] { return format_verdict(v, u); });
    }
  });
  return rep;
}

/// Failing verdicts among the non-tight states, for documenting the
/// counterexample families.
inline std::vector<CommutationVerdict> nontight_failures(
    const SuiteOptions& opt, std::optional<Op> only = std::nullopt) {
  std::vector<CommutationVerdict> out;
  const Universe u = opt.universe();
  const auto actions = enumerate_actions(u, opt.include_reclaim);
  RefineOptions ro;
  ro.set = opt.set;
  enumerate_states(u, StateBounds{}, [&](const SetState& st) {
    if (is_tight(st)) return;
    for (const Action& a : actions) {
      if (only && a.op != *only) continue;
      CommutationVerdict v = check_commutation(u, a, st, ro);
      if (!v.pass) out.push_back(std::move(v));
    }
  });
  return out;
}

/// Collection cross-checks: each collector against its oracle, the two
/// collectors against each other, and the rewrite collectors against the
/// set-model ones on tight states.
inline SuiteReport run_gc_cross(const SuiteOptions& opt) {
  SuiteReport rep = detail::report_for("gc-cross", opt);
  const Universe u = opt.universe();
  auto t = [&](const DataLinkage& l) { return detail::text(l, u); };
  detail::for_each_linkage(u, [&](const DataLinkage& l) {
    const DataLinkage f = fgc(l), r = rgc(l);
    rep.record(f == oracle::fgc(l), [&] { return "FAIL fgc-vs-bfs " + t(l) + " -> " + t(f); });
    rep.record(r == oracle::rgc(l), [&] { return "FAIL rgc-vs-refcount " + t(l) + " -> " + t(r); });
    rep.record(r.includes(f), [&] { return "FAIL rgc-includes-fgc " + t(l); });
    rep.record(fgc(r) == f, [&] { return "FAIL fgc-after-rgc " + t(l); });
    rep.record(fgc(f) == f && rgc(r) == r, [&] { return "FAIL gc-idempotent " + t(l); });
    for (AtomId d : u.atoms()) {
      const DataLinkage s = safe_dispose(d, l);
      rep.record(s == oracle::safe_dispose(d, l), [&] {
        return "FAIL sd-closed-form " + u.name(d) + " " + t(l) + " -> " + t(s);
      });
    }
  });
  StateBounds all;
  enumerate_states(u, all, [&](const SetState& st) {
    const std::string st_text = format_set_state(st, u);
    rep.record(incycle(st.zeta) == oracle::cycle_atoms(st.zeta),
               [&] { return "FAIL incycle-vs-scc " + st_text; });
    bool reach_ok = true;
    for (const auto& [a, _] : st.zeta)
      reach_ok = reach_ok && reach_from(a, st.zeta) == oracle::reach_from(a, st.zeta);
    rep.record(reach_ok, [&] { return "FAIL reach-vs-bfs " + st_text; });
    if (!is_tight(st)) return;
    const DataLinkage l = retrieve(st);
    const Action fa = make_action(Op::kFgc), ra = make_action(Op::kRgc);
    rep.record(retrieve(effect_set(u, fa, st, opt.set)) == fgc(l),
               [&] { return "FAIL fgc-set-vs-rewrite " + st_text; });
    rep.record(retrieve(effect_set(u, ra, st, opt.set)) == rgc(l),
               [&] { return "FAIL rgc-set-vs-rewrite " + st_text; });
  });
  return rep;
}

/// The copy and subtraction laws, exhaustively over deterministic states
/// with the operands in place. Spot roles: copy uses (s0, s1); subtraction
/// uses (s0, s1, s2) and, when available, (s0, s0, s1).
inline SuiteReport run_identities(const SuiteOptions& opt) {
  SuiteReport rep = detail::report_for("identities", opt);
  const Universe u = opt.universe();
  if (u.spot_count() < 2) throw ConfigError("identities needs at least two spots");
  auto sp = [](std::uint16_t i) { return SpotId{i}; };
  auto val = [](const SetState& st, SpotId s) -> std::optional<MeadowValue> {
    auto a = st.sigma[s.index];
    return a ? st.xi.at(*a) : std::nullopt;
  };
  std::vector<std::array<SpotId, 3>> sub_roles;
  if (u.spot_count() >= 3) sub_roles.push_back({sp(0), sp(1), sp(2)});
  sub_roles.push_back({sp(0), sp(0), sp(1)});
  const PrimeMeadow& m = u.meadow();
  StateBounds tight;
  tight.tight_only = true;
  enumerate_states(u, tight, [&](const SetState& st) {
    const DataLinkage l = retrieve(st);
    // Copy: asszero(s); assadd(s,s,t) assigns t's value to s's atom, when
    // both spots are defined on distinct atoms and t's atom has a value.
    {
      const SpotId s = sp(0), t = sp(1);
      auto a = st.sigma[s.index], b = st.sigma[t.index];
      auto n = val(st, t);
      if (a && b && *a != *b && n) {
        DataLinkage got = effect(u, make_action(Op::kAssZero, {s}), l);
        got = effect(u, make_action(Op::kAssAdd, {s, s, t}), got);
        const DataLinkage want = override(l, ValueAssociation{*a, *n});
        rep.record(got == want, [&] {
          return "FAIL copy " + detail::text(l, u) + " got=" + detail::text(got, u) +
                 " want=" + detail::text(want, u);
        });
      }
    }
    // Subtraction: assneg(u,u); assadd(s,t,u); assneg(u,u), with u's atom
    // distinct from s's and t's.
    for (const auto& role : sub_roles) {
      const SpotId s = role[0], t = role[1], w = role[2];
      auto a = st.sigma[s.index], b = st.sigma[t.index], c = st.sigma[w.index];
      auto n = val(st, t), k = val(st, w);
      if (!a || !b || !c || *a == *c || *b == *c || !n || !k) continue;
      DataLinkage got = effect(u, make_action(Op::kAssNeg, {w, w}), l);
      got = effect(u, make_action(Op::kAssAdd, {s, t, w}), got);
      got = effect(u, make_action(Op::kAssNeg, {w, w}), got);
      const DataLinkage want = override(l, ValueAssociation{*a, m.add(*n, m.neg(*k))});
      rep.record(got == want, [&] {
        return "FAIL subtraction " + detail::text(l, u) + " got=" +
               detail::text(got, u) + " want=" + detail::text(want, u);
      });
    }
  });
  return rep;
}

/// The use-operator axioms on random finite threads and table services,
/// execution agreeing with use, and absorption of the blocked state.
inline SuiteReport run_tsu(const SuiteOptions& opt) {
  SuiteReport rep = detail::report_for("tsu", opt);
  gen::Rng rng(opt.seed);
  const std::vector<std::string> foci = {"f", "g"};
  const std::vector<std::string> methods = {"m0", "m1", "m2"};
  const ThreadSpec none;
  const std::size_t depth = opt.unfold_depth;
  auto eq = [&](const Thread& a, const Thread& b) {
    return bounded_equal(a, none, b, none, depth);
  };
  for (std::size_t i = 0; i < opt.cases; ++i) {
    gen::TableService table(methods, 3, rng);
    table.set_initial_reply(0, ServiceReply::kTrue);
    table.set_initial_reply(1, ServiceReply::kFalse);
    table.set_initial_reply(2, ServiceReply::kBlocked);
    const Service h(table);
    const Thread x = gen::thread(rng, foci, methods, 5);
    const Thread y = gen::thread(rng, foci, methods, 5);
    auto use_f = [&](const Thread& t, const Service& s) { return use(t, none, "f", s); };
    auto fa = [&](const char* m) { return FocusedAction{"f", m}; };
    auto note = [&](const char* ax) {
      return [&, ax] {
        return std::string("FAIL ") + ax + " case=" + std::to_string(i) +
               " x=" + format_thread(x) + " y=" + format_thread(y);
      };
    };
    rep.record(eq(use_f(Thread::stop(), h), Thread::stop()), note("TSU1"));
    rep.record(eq(use_f(Thread::deadlock(), h), Thread::deadlock()), note("TSU2"));
    rep.record(eq(use_f(Thread::tau(x), h), Thread::tau(use_f(x, h))), note("TSU3"));
    const FocusedAction other{"g", methods[gen::pick(rng, methods.size())]};
    rep.record(eq(use_f(Thread::post(other, x, y), h),
                  Thread::post(other, use_f(x, h), use_f(y, h))),
               note("TSU4"));
    rep.record(eq(use_f(Thread::post(fa("m0"), x, y), h),
                  Thread::tau(use_f(x, h.derive("m0")))),
               note("TSU5"));
    rep.record(eq(use_f(Thread::post(fa("m1"), x, y), h),
                  Thread::tau(use_f(y, h.derive("m1")))),
               note("TSU6"));
    rep.record(eq(use_f(Thread::post(fa("m2"), x, y), h), Thread::deadlock()),
               note("TSU7"));

    // The small-step executor and use must agree on threads over focus f:
    // same terminal, one tau per performed action.
    const Thread z = gen::thread(rng, {"f"}, methods, 6);
    const Thread used = use_f(z, h);
    std::size_t taus = 0;
    const Thread* cur = &used;
    while (cur->kind() == Thread::Kind::kPost) {
      ++taus;
      cur = &cur->then();
    }
    const ExecTrace tr = run(ThreadSpec::of(z), {{"f", h}}, 1000);
    const Terminal want = cur->kind() == Thread::Kind::kStop ? Terminal::kStop
                                                             : Terminal::kDeadlock;
    std::size_t answered = 0;
    for (const auto& s : tr.steps) answered += s.reply != ServiceReply::kBlocked;
    rep.record(tr.terminal == want && answered == taus,
               [&] { return "FAIL run-vs-use case=" + std::to_string(i) + " z=" + format_thread(z); });
  }

  // Blocked absorption over random method sequences, including methods the
  // service does not know.
  std::vector<std::string> alphabet = methods;
  alphabet.push_back("unknown");
  for (std::size_t i = 0; i < opt.cases; ++i) {
    Service h{gen::TableService(methods, 3, rng)};
    const std::size_t len = 1 + gen::pick(rng, 12);
    bool blocked = false, ok = true;
    std::string seq;
    for (std::size_t k = 0; k < len; ++k) {
      const std::string& m = alphabet[gen::pick(rng, alphabet.size())];
      seq += m + " ";
      const ServiceReply r = h.reply(m);
      if (blocked && r != ServiceReply::kBlocked) ok = false;
      if (r == ServiceReply::kBlocked) blocked = true;
      h = h.derive(m);
      if (blocked)
        for (const auto& probe : alphabet)
          ok = ok && h.reply(probe) == ServiceReply::kBlocked;
    }
    rep.record(ok, [&] { return "FAIL blocked-absorption seq=" + seq; });
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "axioms", "thm1", "thm2", "thm3", "gc-cross", "tsu", "determinism", "identities"};
  return names;
}

inline std::optional<SuiteReport> run_suite(const std::string& name,
                                            const SuiteOptions& opt) {
  if (name == "axioms") return run_axioms(opt);
  if (name == "thm1") return run_thm1(opt);
  if (name == "thm2") return run_thm2(opt);
  if (name == "thm3") return run_thm3(opt);
  if (name == "gc-cross") return run_gc_cross(opt);
  if (name == "tsu") return run_tsu(opt);
  if (name == "determinism") return run_determinism(opt);
  if (name == "identities") return run_identities(opt);
  return std::nullopt;
}

}  // namespace dld::check
