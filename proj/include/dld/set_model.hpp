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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dld/action.hpp"
#include "dld/effect.hpp"
#include "dld/universe.hpp"

namespace dld {

/// Function-based state: spot contents, the field maps of the atoms in use,
/// and their values. nullopt plays the role of the undefined marker inside
/// a codomain; absence from a map means "not in the domain".
struct SetState {
  using FieldMap = std::map<FieldId, std::optional<AtomId>>;

  std::vector<std::optional<AtomId>> sigma;
  std::map<AtomId, FieldMap> zeta;
  std::map<AtomId, std::optional<MeadowValue>> xi;

  static SetState empty(const Universe& u) {
    SetState st;
    st.sigma.assign(u.spot_count(), std::nullopt);
    return st;
  }

  bool in_use(AtomId a) const { return zeta.count(a) > 0; }

  bool operator==(const SetState&) const = default;
  auto operator<=>(const SetState&) const = default;
};

struct SetOptions {
  // Reply True to eqvaltst when both values are undefined, as the equation
  // reads without the definedness conjunct.
  bool literal_eqvaltst = false;
  // Keep only reach + incycle on rgc, without the atoms hanging off cycles.
  bool literal_rgc = false;
  // Leave field entries that point at a disposed atom in place.
  bool literal_sd = false;
};

// nullopt when the state satisfies the three domain conditions, otherwise a
// description of the first violation.
inline std::optional<std::string> dlr_violation(const SetState& st,
                                                const Universe& u) {
  if (st.sigma.size() != u.spot_count()) return "sigma is not total";
  for (const auto& [a, _] : st.zeta) {
    if (a.index >= u.atom_count()) return "zeta mentions an unknown atom";
    if (!st.xi.count(a)) return "dom(zeta) != dom(xi)";
  }
  for (const auto& [a, _] : st.xi)
    if (!st.zeta.count(a)) return "dom(zeta) != dom(xi)";
  for (const auto& c : st.sigma)
    if (c && !st.in_use(*c)) return "a spot refers to an atom not in use";
  for (const auto& [a, fm] : st.zeta)
    for (const auto& [f, c] : fm) {
      if (f.index >= u.field_count()) return "zeta mentions an unknown field";
      if (c && !st.in_use(*c)) return "a field refers to an atom not in use";
    }
  for (const auto& [a, v] : st.xi)
    if (v && v->residue >= u.modulus()) return "value outside the meadow";
  return std::nullopt;
}

// Atoms reachable from a through field contents, a included.
inline std::set<AtomId> reach_from(
    AtomId a, const std::map<AtomId, SetState::FieldMap>& zeta) {
  std::set<AtomId> seen{a};
  std::vector<AtomId> todo{a};
  while (!todo.empty()) {
    AtomId x = todo.back();
    todo.pop_back();
    auto it = zeta.find(x);
    if (it == zeta.end()) continue;
    for (const auto& [f, c] : it->second)
      if (c && seen.insert(*c).second) todo.push_back(*c);
  }
  return seen;
}

inline std::set<AtomId> reach_atoms(const SetState& st) {
  std::set<AtomId> out;
  for (const auto& c : st.sigma)
    if (c && !out.count(*c)) out.merge(reach_from(*c, st.zeta));
  return out;
}

// Atoms a in use such that some field content of a reaches back to a.
inline std::set<AtomId> incycle(
    const std::map<AtomId, SetState::FieldMap>& zeta) {
  std::set<AtomId> out;
  for (const auto& [a, fm] : zeta)
    for (const auto& [f, c] : fm)
      if (c && reach_from(*c, zeta).count(a)) {
        out.insert(a);
        break;
      }
  return out;
}

inline std::vector<std::optional<AtomId>> clear_spot_refs(
    AtomId a, std::vector<std::optional<AtomId>> sigma) {
  for (auto& c : sigma)
    if (c == a) c.reset();
  return sigma;
}

inline std::map<AtomId, SetState::FieldMap> clear_field_refs(
    AtomId a, std::map<AtomId, SetState::FieldMap> zeta) {
  for (auto& [_, fm] : zeta)
    for (auto& [f, c] : fm)
      if (c == a) c.reset();
  return zeta;
}

inline SetState restrict_to(SetState st, const std::set<AtomId>& keep) {
  std::erase_if(st.zeta, [&](const auto& kv) { return !keep.count(kv.first); });
  std::erase_if(st.xi, [&](const auto& kv) { return !keep.count(kv.first); });
  return st;
}

inline SetState sd_set(std::optional<AtomId> a, SetState st,
                       const SetOptions& opt = {}) {
  if (!a || !st.in_use(*a) || reach_atoms(st).count(*a)) return st;
  st.zeta.erase(*a);
  st.xi.erase(*a);
  if (!opt.literal_sd)
    for (auto& [_, fm] : st.zeta)
      std::erase_if(fm, [&](const auto& kv) { return kv.second == a; });
  return st;
}

inline SetState ud_set(std::optional<AtomId> a, SetState st,
                       const SetOptions& opt = {}) {
  if (!a) return st;
  st.sigma = clear_spot_refs(*a, std::move(st.sigma));
  st.zeta = clear_field_refs(*a, std::move(st.zeta));
  return sd_set(a, std::move(st), opt);
}

// Atoms the retrieved linkage would mention.
inline std::set<AtomId> visible_atoms(const SetState& st) {
  std::set<AtomId> out;
  for (const auto& c : st.sigma)
    if (c) out.insert(*c);
  for (const auto& [a, fm] : st.zeta) {
    if (!fm.empty()) out.insert(a);
    for (const auto& [f, c] : fm)
      if (c) out.insert(*c);
  }
  for (const auto& [a, v] : st.xi)
    if (v) out.insert(a);
  return out;
}

inline bool is_tight(const SetState& st) {
  const auto vis = visible_atoms(st);
  if (vis.size() != st.zeta.size()) return false;
  for (const auto& [a, _] : st.zeta)
    if (!vis.count(a)) return false;
  return true;
}

// Drops atoms that are in use but invisible: unreferenced, no fields, no
// value.
inline SetState tighten(SetState st) {
  return restrict_to(std::move(st), visible_atoms(st));
}

namespace detail {

inline std::optional<AtomId> sigma_at(const SetState& st, SpotId s) {
  return st.sigma.at(s.index);
}

inline std::optional<MeadowValue> value_at(const SetState& st, SpotId s) {
  auto a = sigma_at(st, s);
  if (!a) return std::nullopt;
  auto it = st.xi.find(*a);
  return it == st.xi.end() ? std::nullopt : it->second;
}

inline bool has_field(const SetState& st, SpotId s, FieldId f) {
  auto a = sigma_at(st, s);
  if (!a) return false;
  auto it = st.zeta.find(*a);
  return it != st.zeta.end() && it->second.count(f);
}

// zeta(sigma(s))(f), nullopt when undefined anywhere along the way.
inline std::optional<AtomId> field_at(const SetState& st, SpotId s, FieldId f) {
  if (!has_field(st, s, f)) return std::nullopt;
  return st.zeta.at(*sigma_at(st, s)).at(f);
}

inline SetState set_basic_effect(const Universe& u, const Action& a,
                                 SetState st) {
  const PrimeMeadow& m = u.meadow();
  switch (a.op) {
    case Op::kGetAtObj: {
      for (AtomId x : u.atoms()) {
        if (st.in_use(x)) continue;
        st.sigma[a.s.index] = x;
        st.zeta[x] = {};
        st.xi[x] = std::nullopt;
        return st;
      }
      return st;
    }
    case Op::kSetSpot:
      st.sigma[a.s.index] = sigma_at(st, a.t);
      return st;
    case Op::kClrSpot:
      st.sigma[a.s.index].reset();
      return st;
    case Op::kAddField:
      if (sigma_at(st, a.s) && !has_field(st, a.s, a.f))
        st.zeta[*sigma_at(st, a.s)][a.f] = std::nullopt;
      return st;
    case Op::kRmvField:
      if (has_field(st, a.s, a.f)) st.zeta[*sigma_at(st, a.s)].erase(a.f);
      return st;
    case Op::kSetField:
      if (has_field(st, a.s, a.f))
        st.zeta[*sigma_at(st, a.s)][a.f] = sigma_at(st, a.t);
      return st;
    case Op::kClrField:
      if (has_field(st, a.s, a.f))
        st.zeta[*sigma_at(st, a.s)][a.f] = std::nullopt;
      return st;
    case Op::kGetField:
      if (has_field(st, a.t, a.f)) st.sigma[a.s.index] = field_at(st, a.t, a.f);
      return st;
    case Op::kAssZero:
    case Op::kAssOne:
      if (auto x = sigma_at(st, a.s))
        st.xi[*x] = a.op == Op::kAssZero ? m.zero() : m.one();
      return st;
    case Op::kAssAdd:
    case Op::kAssMul: {
      auto x = sigma_at(st, a.s);
      auto n = value_at(st, a.t);
      auto k = value_at(st, a.u);
      if (x && n && k) st.xi[*x] = a.op == Op::kAssAdd ? m.add(*n, *k) : m.mul(*n, *k);
      return st;
    }
    case Op::kAssNeg:
    case Op::kAssInv: {
      auto x = sigma_at(st, a.s);
      auto n = value_at(st, a.t);
      if (x && n) st.xi[*x] = a.op == Op::kAssNeg ? m.neg(*n) : m.inv(*n);
      return st;
    }
    case Op::kEqualTst:
    case Op::kUndefTst:
    case Op::kHasField:
    case Op::kEqValTst:
    case Op::kUndefVTst:
      return st;
    default:
      throw std::invalid_argument("not a basic action");
  }
}

inline bool set_basic_yield(const Universe& u, const Action& a,
                            const SetState& st, const SetOptions& opt) {
  switch (a.op) {
    case Op::kGetAtObj:
      return st.zeta.size() < u.atom_count();
    case Op::kSetSpot:
    case Op::kClrSpot:
      return true;
    case Op::kEqualTst:
      return sigma_at(st, a.s) == sigma_at(st, a.t);
    case Op::kUndefTst:
      return !sigma_at(st, a.s);
    case Op::kAddField:
      return sigma_at(st, a.s) && !has_field(st, a.s, a.f);
    case Op::kRmvField:
    case Op::kHasField:
    case Op::kSetField:
    case Op::kClrField:
      return has_field(st, a.s, a.f);
    case Op::kGetField:
      return has_field(st, a.t, a.f);
    case Op::kAssZero:
    case Op::kAssOne:
      return sigma_at(st, a.s).has_value();
    case Op::kAssAdd:
    case Op::kAssMul:
      return sigma_at(st, a.s) && value_at(st, a.t) && value_at(st, a.u);
    case Op::kAssNeg:
    case Op::kAssInv:
      return sigma_at(st, a.s) && value_at(st, a.t);
    case Op::kEqValTst: {
      if (!sigma_at(st, a.s) || !sigma_at(st, a.t)) return false;
      auto n = value_at(st, a.s);
      if (n != value_at(st, a.t)) return false;
      return opt.literal_eqvaltst || n.has_value();
    }
    case Op::kUndefVTst:
      return sigma_at(st, a.s) && !value_at(st, a.s);
    default:
      throw std::invalid_argument("not a basic action");
  }
}

// The atom a disposal variant hands to sd/ud, read before the underlying
// action runs.
inline std::optional<AtomId> set_displaced(const SetState& st, const Action& a) {
  switch (underlying(a.op)) {
    case Op::kSetField:
    case Op::kClrField:
      return field_at(st, a.s, a.f);
    default:
      return sigma_at(st, a.s);
  }
}

}  // namespace detail

inline SetState effect_set(const Universe& u, const Action& a,
                           const SetState& st, const SetOptions& opt = {}) {
  if (is_basic(a.op)) return detail::set_basic_effect(u, a, st);
  if (a.op == Op::kFgc) return restrict_to(st, reach_atoms(st));
  if (a.op == Op::kRgc) {
    std::set<AtomId> keep = reach_atoms(st);
    for (AtomId c : incycle(st.zeta)) {
      if (opt.literal_rgc)
        keep.insert(c);
      else
        keep.merge(reach_from(c, st.zeta));
    }
    return restrict_to(st, keep);
  }
  const auto d = detail::set_displaced(st, a);
  SetState next = detail::set_basic_effect(u, a.with_op(underlying(a.op)), st);
  if (is_safe_disposal(a.op)) return sd_set(d, std::move(next), opt);
  return ud_set(d, std::move(next), opt);
}

inline Reply yield_set(const Universe& u, const Action& a, const SetState& st,
                       const SetOptions& opt = {}) {
  if (is_gc(a.op)) return Reply::kTrue;
  return to_reply(
      detail::set_basic_yield(u, a.with_op(underlying(a.op)), st, opt));
}

inline SetState effect_set_reclaim(const Universe& u, const Action& a,
                                   const SetState& st,
                                   const SetOptions& opt = {}) {
  if (is_basic(a.op))
    throw std::invalid_argument("effect_set_reclaim: not a reclamation action");
  return effect_set(u, a, st, opt);
}

inline Reply yield_set_reclaim(const Universe& u, const Action& a,
                               const SetState& st, const SetOptions& opt = {}) {
  if (is_basic(a.op))
    throw std::invalid_argument("yield_set_reclaim: not a reclamation action");
  return yield_set(u, a, st, opt);
}

// One-line rendering: sigma{r:#0 s:_} zeta{#0:{up:#1} #1:{}} xi{#0:_ #1:3}
inline std::string format_set_state(const SetState& st, const Universe& u) {
  auto atom = [&](const std::optional<AtomId>& a) {
    return a ? u.name(*a) : std::string("_");
  };
  std::string out = "sigma{";
  for (std::size_t i = 0; i < st.sigma.size(); ++i) {
    if (i) out += " ";
    out += u.name(SpotId{static_cast<std::uint16_t>(i)}) + ":" + atom(st.sigma[i]);
  }
  out += "} zeta{";
  bool first = true;
  for (const auto& [a, fm] : st.zeta) {
    if (!first) out += " ";
    first = false;
    out += u.name(a) + ":{";
    bool ff = true;
    for (const auto& [f, c] : fm) {
      if (!ff) out += " ";
      ff = false;
      out += u.name(f) + ":" + atom(c);
    }
    out += "}";
  }
  out += "} xi{";
  first = true;
  for (const auto& [a, v] : st.xi) {
    if (!first) out += " ";
    first = false;
    out += u.name(a) + ":" + (v ? std::to_string(v->residue) : std::string("_"));
  }
  return out + "}";
}

}  // namespace dld
