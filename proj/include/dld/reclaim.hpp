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

#include <set>
#include <vector>

#include "dld/effect.hpp"

namespace dld {

namespace detail {

// Anchor of a non-spot link: the atom whose field or value it describes.
inline std::optional<AtomId> anchor(const AtomicLink& x) {
  if (const auto* p = std::get_if<PartialFieldLink>(&x)) return p->atom;
  if (const auto* p = std::get_if<FieldLink>(&x)) return p->source;
  if (const auto* p = std::get_if<ValueAssociation>(&x)) return p->atom;
  return std::nullopt;
}

inline std::optional<AtomId> reference_target(const AtomicLink& x) {
  if (const auto* p = std::get_if<SpotLink>(&x)) return p->atom;
  if (const auto* p = std::get_if<FieldLink>(&x)) return p->target;
  return std::nullopt;
}

// Moves links from `pending` to `moved` while their anchor is reachable.
// Reachable atoms are the targets of moved spot and field links. Scans the
// pending list in its given order, pass after pass, until nothing moves.
inline void move_reachable(std::vector<AtomicLink>& pending,
                           std::vector<AtomicLink>& moved,
                           std::set<AtomId>& reached) {
  std::vector<AtomicLink> rest;
  for (auto& x : pending) {
    if (std::holds_alternative<SpotLink>(x)) {
      reached.insert(std::get<SpotLink>(x).atom);
      moved.push_back(x);
    } else {
      rest.push_back(x);
    }
  }
  pending.swap(rest);
  bool progress = true;
  while (progress) {
    progress = false;
    rest.clear();
    for (auto& x : pending) {
      if (reached.count(*anchor(x))) {
        if (auto t = reference_target(x)) reached.insert(*t);
        moved.push_back(x);
        progress = true;
      } else {
        rest.push_back(x);
      }
    }
    pending.swap(rest);
  }
}

}  // namespace detail

/// Full garbage collection: keeps exactly the part reachable from spots.
inline DataLinkage fgc(const DataLinkage& l, const EvalOptions& opt = {}) {
  detail::Scan sc(l, opt);
  std::vector<AtomicLink> pending = sc.order();
  std::vector<AtomicLink> moved;
  std::set<AtomId> reached;
  detail::move_reachable(pending, moved, reached);
  return DataLinkage(std::move(moved));
}

/// Restricted garbage collection: repeatedly drops the field links, partial
/// field links and values of atoms nothing links to. Atoms on a cycle, and
/// everything hanging off one, survive.
inline DataLinkage rgc(const DataLinkage& l, const EvalOptions& opt = {}) {
  detail::Scan sc(l, opt);
  std::vector<AtomicLink> current = sc.order();
  while (true) {
    std::set<AtomId> referenced;
    for (const auto& x : current)
      if (auto t = detail::reference_target(x)) referenced.insert(*t);
    std::vector<AtomicLink> kept;
    for (const auto& x : current) {
      auto a = detail::anchor(x);
      if (!a || referenced.count(*a)) kept.push_back(x);
    }
    if (kept.size() == current.size()) break;
    current.swap(kept);
  }
  return DataLinkage(std::move(current));
}

/// Safe disposal of d, staged: the reachable part first, then the field
/// links into d if d turned out reachable, then everything not involving d.
/// Whatever is left over is dropped.
inline DataLinkage safe_dispose(AtomId d, const DataLinkage& l,
                                const EvalOptions& opt = {}) {
  detail::Scan sc(l, opt);
  std::vector<AtomicLink> pending = sc.order();
  std::vector<AtomicLink> moved;
  std::set<AtomId> reached;
  detail::move_reachable(pending, moved, reached);
  if (reached.count(d)) {
    std::vector<AtomicLink> rest;
    for (auto& x : pending) {
      const auto* fl = std::get_if<FieldLink>(&x);
      if (fl && fl->target == d)
        moved.push_back(x);
      else
        rest.push_back(x);
    }
    pending.swap(rest);
  }
  for (auto& x : pending)
    if (!involves(x, d)) moved.push_back(x);
  return DataLinkage(std::move(moved));
}

/// Drops spot links to d and turns field links to d into partial links.
inline DataLinkage clear_refs(AtomId d, const DataLinkage& l) {
  std::vector<AtomicLink> out;
  out.reserve(l.size());
  for (const auto& x : l) {
    if (const auto* s = std::get_if<SpotLink>(&x); s && s->atom == d) continue;
    if (const auto* f = std::get_if<FieldLink>(&x); f && f->target == d) {
      out.push_back(PartialFieldLink{f->source, f->field});
      continue;
    }
    out.push_back(x);
  }
  return DataLinkage(std::move(out));
}

namespace detail {

// The atom a disposal variant reclaims, if the first non-shield row of its
// table entry matches: the old content of s, or for setfield/clrfield the
// old content of field f of that atom.
inline std::optional<AtomId> displaced(const Scan& sc, const Action& a) {
  auto sa = sc.first_spot(a.s);
  if (!sa) return std::nullopt;
  switch (underlying(a.op)) {
    case Op::kSetField:
    case Op::kClrField:
      return sc.first_flink(*sa, a.f);
    default:
      return sa;
  }
}

}  // namespace detail

/// Effect in the extended system: basic actions, collection, and disposal.
inline DataLinkage effect_dldr(const Universe& u, const Action& a,
                               const DataLinkage& l,
                               const EvalOptions& opt = {},
                               std::vector<RuleFire>* fired = nullptr) {
  if (is_basic(a.op)) return effect(u, a, l, opt, fired);
  auto note = [&](std::string row, int prio, std::vector<Binding> b = {}) {
    if (fired) fired->push_back(RuleFire{a, std::move(row), prio, std::move(b)});
  };
  if (a.op == Op::kFgc) {
    note("E1", 1);
    return fgc(l, opt);
  }
  if (a.op == Op::kRgc) {
    note("E1", 1);
    return rgc(l, opt);
  }
  const Action base = a.with_op(underlying(a.op));
  detail::Scan sc(l, opt);
  if (is_safe_disposal(a.op)) {
    if (auto d = detail::displaced(sc, a)) {
      note("E1", 1, {detail::bind('d', *d)});
      return safe_dispose(*d, effect(u, base, l, opt, fired), opt);
    }
    note("E2", 2);
    return effect(u, base, l, opt, fired);
  }
  // Unsafe disposal shields exactly the operands the underlying action does.
  const int n_shields = detail::shield_rows(base.op);
  if (auto sh = detail::shields(sc, base)) {
    note("E" + std::to_string(sh->row), 1, sh->bindings);
    return l;
  }
  if (auto d = detail::displaced(sc, a)) {
    note("E" + std::to_string(n_shields + 1), 2, {detail::bind('d', *d)});
    return safe_dispose(*d, clear_refs(*d, effect(u, base, l, opt, fired)), opt);
  }
  note("E" + std::to_string(n_shields + 2), 3);
  return effect(u, base, l, opt, fired);
}

inline Reply yield_dldr(const Universe& u, const Action& a,
                        const DataLinkage& l, const EvalOptions& opt = {},
                        std::vector<RuleFire>* fired = nullptr) {
  if (is_basic(a.op)) return yield(u, a, l, opt, fired);
  if (is_gc(a.op)) {
    if (fired) fired->push_back(RuleFire{a, "Y1", 1, {}});
    return Reply::kTrue;
  }
  if (fired) fired->push_back(RuleFire{a, "Y1", 1, {}});
  return yield(u, a.with_op(underlying(a.op)), l, opt, fired);
}

inline StepOutcome step_dldr(const Universe& u, const Action& a,
                             const DataLinkage& l,
                             const EvalOptions& opt = {}) {
  StepOutcome out;
  out.state = effect_dldr(u, a, l, opt, &out.fired);
  out.reply = yield_dldr(u, a, l, opt, &out.fired);
  return out;
}

}  // namespace dld
