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

#include <functional>
#include <string>
#include <vector>

#include "dld/linkage.hpp"
#include "dld/reclaim.hpp"
#include "dld/set_model.hpp"

namespace dld {

inline DataLinkage retrieve(const SetState& st) {
  std::vector<AtomicLink> out;
  for (std::size_t i = 0; i < st.sigma.size(); ++i)
    if (st.sigma[i])
      out.push_back(SpotLink{SpotId{static_cast<std::uint16_t>(i)}, *st.sigma[i]});
  for (const auto& [a, fm] : st.zeta)
    for (const auto& [f, c] : fm) {
      if (c)
        out.push_back(FieldLink{a, f, *c});
      else
        out.push_back(PartialFieldLink{a, f});
    }
  for (const auto& [a, v] : st.xi)
    if (v) out.push_back(ValueAssociation{a, *v});
  return DataLinkage(std::move(out));
}

// The tight representation of a deterministic linkage.
inline SetState represent(const DataLinkage& l, const Universe& u) {
  if (!is_deterministic(l))
    throw NonDeterministicState("represent: linkage is not deterministic");
  if (!fits(l, u)) throw UndeclaredName("represent: linkage not over universe");
  SetState st = SetState::empty(u);
  for (AtomId a : atobj(l)) {
    st.zeta[a] = {};
    st.xi[a] = std::nullopt;
  }
  for (const AtomicLink& x : l) {
    if (const auto* sl = std::get_if<SpotLink>(&x))
      st.sigma[sl->spot.index] = sl->atom;
    else if (const auto* pl = std::get_if<PartialFieldLink>(&x))
      st.zeta[pl->atom][pl->field] = std::nullopt;
    else if (const auto* fl = std::get_if<FieldLink>(&x))
      st.zeta[fl->source][fl->field] = fl->target;
    else if (const auto* va = std::get_if<ValueAssociation>(&x))
      st.xi[va->atom] = va->value;
  }
  return st;
}

struct RefineOptions {
  SetOptions set;
  EvalOptions eval;
};

struct CommutationVerdict {
  Action action;
  SetState input;
  bool pass = false;
  bool tight = false;
  DataLinkage rewrite_state;
  Reply rewrite_reply = Reply::kFalse;
  DataLinkage set_state;  // retrieve of the set-model effect
  Reply set_reply = Reply::kFalse;
};

inline CommutationVerdict check_commutation(const Universe& u, const Action& a,
                                            const SetState& st,
                                            const RefineOptions& opt = {}) {
  CommutationVerdict v;
  v.action = a;
  v.input = st;
  v.tight = is_tight(st);
  const DataLinkage l = retrieve(st);
  v.rewrite_state = effect_dldr(u, a, l, opt.eval);
  v.rewrite_reply = yield_dldr(u, a, l, opt.eval);
  v.set_state = retrieve(effect_set(u, a, st, opt.set));
  v.set_reply = yield_set(u, a, st, opt.set);
  v.pass = v.rewrite_state == v.set_state && v.rewrite_reply == v.set_reply;
  return v;
}

// Follows a whole action sequence in both models. With tighten_each, the
// set-model state is tightened after every step, which keeps invisible atoms
// from accumulating. Returns the index of the first diverging step, or
// nullopt when the two runs agree throughout.
inline std::optional<std::size_t> check_trace(const Universe& u,
                                              const std::vector<Action>& actions,
                                              SetState st, bool tighten_each,
                                              const RefineOptions& opt = {}) {
  DataLinkage l = retrieve(st);
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const Action& a = actions[i];
    if (yield_dldr(u, a, l, opt.eval) != yield_set(u, a, st, opt.set)) return i;
    l = effect_dldr(u, a, l, opt.eval);
    st = effect_set(u, a, st, opt.set);
    if (tighten_each) st = tighten(std::move(st));
    if (retrieve(st) != l) return i;
  }
  return std::nullopt;
}

inline std::string format_verdict(const CommutationVerdict& v,
                                  const Universe& u) {
  auto side = [&](const DataLinkage& l, Reply r) {
    return "{" + canonical_text(l, u) + "}/" + reply_char(r);
  };
  return std::string(v.pass ? "PASS " : "FAIL ") + format_action(v.action, u) +
         " " + format_set_state(v.input, u) +
         " rewrite=" + side(v.rewrite_state, v.rewrite_reply) +
         " set=" + side(v.set_state, v.set_reply) +
         " tight=" + (v.tight ? "true" : "false");
}

struct StateBounds {
  std::size_t max_atoms = static_cast<std::size_t>(-1);
  bool tight_only = false;
};

namespace detail {

// Odometer over a vector of digits with per-position radix; false once it
// wraps around.
inline bool advance(std::vector<std::size_t>& digits,
                    const std::vector<std::size_t>& radix) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace detail

/// Visits every DLR state over u exactly once: each subset of atoms as the
/// in-use domain (up to max_atoms of them), then every spot assignment,
/// every field map (absent, undefined, or an in-use atom per field) and
/// every value assignment. Returns the number of states visited.
inline std::size_t enumerate_states(
    const Universe& u, const StateBounds& bounds,
    const std::function<void(const SetState&)>& visit) {
  const std::size_t n_atoms = u.atom_count();
  const std::size_t n_spots = u.spot_count();
  const std::size_t n_fields = u.field_count();
  const std::size_t p = u.modulus();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_atoms); ++mask) {
    std::vector<AtomId> dom;
    for (std::size_t i = 0; i < n_atoms; ++i)
      if (mask >> i & 1) dom.push_back(AtomId{static_cast<std::uint16_t>(i)});
    if (dom.size() > bounds.max_atoms) continue;
    const std::size_t d = dom.size();
    // Layout: spots, then fields per atom, then values per atom.
    std::vector<std::size_t> radix;
    radix.insert(radix.end(), n_spots, d + 1);
    radix.insert(radix.end(), d * n_fields, d + 2);
    radix.insert(radix.end(), d, p + 1);
    std::vector<std::size_t> digit(radix.size(), 0);
    do {
      SetState st;
      std::size_t k = 0;
      st.sigma.resize(n_spots);
      for (std::size_t s = 0; s < n_spots; ++s, ++k)
        if (digit[k]) st.sigma[s] = dom[digit[k] - 1];
      for (AtomId a : dom) {
        auto& fm = st.zeta[a];
        for (std::size_t f = 0; f < n_fields; ++f, ++k) {
          if (digit[k] == 0) continue;
          fm[FieldId{static_cast<std::uint16_t>(f)}] =
              digit[k] == 1 ? std::nullopt : std::optional<AtomId>(dom[digit[k] - 2]);
        }
      }
      for (AtomId a : dom) {
        auto& v = st.xi[a];
        if (digit[k]) v = MeadowValue{static_cast<std::uint32_t>(digit[k] - 1)};
        ++k;
      }
      if (!bounds.tight_only || is_tight(st)) {
        visit(st);
        ++count;
      }
    } while (detail::advance(digit, radix));
  }
  return count;
}

inline std::vector<SetState> collect_states(const Universe& u,
                                            const StateBounds& bounds) {
  std::vector<SetState> out;
  enumerate_states(u, bounds, [&](const SetState& st) { out.push_back(st); });
  return out;
}

}  // namespace dld
