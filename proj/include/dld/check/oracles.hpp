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

// Slow, independently written reference implementations used to validate
// the shipped fast paths. None of these share code with the operations they
// check beyond the plain data types.

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "dld/linkage.hpp"
#include "dld/set_model.hpp"
#include "dld/term.hpp"

namespace dld::oracle {

// A basic term modulo associativity, commutativity and the unit: a list of
// atomic links, possibly with repeats.
using BasicTerm = std::vector<AtomicLink>;

namespace detail {

enum class Rewrite { kDrop, kSwap };

// Which DLA axiom rewrites (X + x) <| y. kDrop: = X <| y. kSwap:
// = (X <| y) + x. Every pair of link kinds is covered by exactly one axiom
// once its side condition is taken into account.
inline Rewrite axiom_for(const AtomicLink& x, const AtomicLink& y) {
  const auto* xs = std::get_if<SpotLink>(&x);
  const auto* xp = std::get_if<PartialFieldLink>(&x);
  const auto* xf = std::get_if<FieldLink>(&x);
  const auto* xv = std::get_if<ValueAssociation>(&x);
  const auto* ys = std::get_if<SpotLink>(&y);
  const auto* yp = std::get_if<PartialFieldLink>(&y);
  const auto* yf = std::get_if<FieldLink>(&y);
  const auto* yv = std::get_if<ValueAssociation>(&y);

  if (ys) {
    // (X + s^a) <| s^b = X <| s^b; every other left link commutes with a
    // spot link (for spot links, if s != t).
    if (xs && xs->spot == ys->spot) return Rewrite::kDrop;
    return Rewrite::kSwap;
  }
  if (yp) {
    if (xp && xp->atom == yp->atom && xp->field == yp->field) return Rewrite::kDrop;
    if (xf && xf->source == yp->atom && xf->field == yp->field) return Rewrite::kDrop;
    return Rewrite::kSwap;
  }
  if (yf) {
    if (xp && xp->atom == yf->source && xp->field == yf->field) return Rewrite::kDrop;
    if (xf && xf->source == yf->source && xf->field == yf->field) return Rewrite::kDrop;
    return Rewrite::kSwap;
  }
  if (yv) {
    if (xv && xv->atom == yv->atom) return Rewrite::kDrop;
    return Rewrite::kSwap;
  }
  throw std::logic_error("axiom_for: unknown link kind");
}

// X <| y for basic X and a single link y, by peeling the last summand of X.
inline BasicTerm override_link(BasicTerm x, const AtomicLink& y) {
  if (x.empty()) return {y};  // 0 <| X = X
  const AtomicLink last = x.back();
  x.pop_back();  // X' + last, with X' = 0 if nothing is left (X + 0 = X)
  if (axiom_for(last, y) == Rewrite::kDrop) return override_link(std::move(x), y);
  BasicTerm out = override_link(std::move(x), y);
  out.push_back(last);
  return out;
}

inline BasicTerm chain(const LinkageTerm& t) {
  switch (t.kind()) {
    case LinkageTerm::Kind::kEmpty:
      return {};
    case LinkageTerm::Kind::kLeaf:
      return {t.link()};
    case LinkageTerm::Kind::kCombine: {
      BasicTerm l = chain(t.lhs());
      BasicTerm r = chain(t.rhs());
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    case LinkageTerm::Kind::kOverride: {
      BasicTerm x = chain(t.lhs());
      BasicTerm y = chain(t.rhs());
      if (y.empty()) return x;  // X <| 0 = X
      // X <| (Y + Z) = (X <| Y) + (X <| Z), down to single links.
      BasicTerm out;
      for (const AtomicLink& link : y) {
        BasicTerm part = override_link(x, link);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
  }
  return {};
}

}  // namespace detail

/// Normal form obtained by chaining the DLA axioms literally; idempotence
/// (X + X = X) is applied last, when the basic term is read as a set.
inline DataLinkage axiom_normalize(const LinkageTerm& t) {
  BasicTerm b = detail::chain(t);
  std::set<AtomicLink> uniq(b.begin(), b.end());
  return DataLinkage(std::vector<AtomicLink>(uniq.begin(), uniq.end()));
}

/// Atoms reachable from spot targets along field links, by breadth-first
/// search over an explicit adjacency map.
inline std::set<AtomId> bfs_reachable(const DataLinkage& l) {
  std::map<AtomId, std::vector<AtomId>> succ;
  std::queue<AtomId> q;
  std::set<AtomId> seen;
  for (const AtomicLink& x : l) {
    if (const auto* f = std::get_if<FieldLink>(&x)) succ[f->source].push_back(f->target);
    if (const auto* s = std::get_if<SpotLink>(&x))
      if (seen.insert(s->atom).second) q.push(s->atom);
  }
  while (!q.empty()) {
    AtomId a = q.front();
    q.pop();
    for (AtomId b : succ[a])
      if (seen.insert(b).second) q.push(b);
  }
  return seen;
}

inline std::optional<AtomId> owner(const AtomicLink& x) {
  if (const auto* p = std::get_if<PartialFieldLink>(&x)) return p->atom;
  if (const auto* f = std::get_if<FieldLink>(&x)) return f->source;
  if (const auto* v = std::get_if<ValueAssociation>(&x)) return v->atom;
  return std::nullopt;
}

/// Full collection: keep spot links and everything owned by a reachable
/// atom.
inline DataLinkage fgc(const DataLinkage& l) {
  const auto reach = bfs_reachable(l);
  std::vector<AtomicLink> out;
  for (const AtomicLink& x : l) {
    auto o = owner(x);
    if (!o || reach.count(*o)) out.push_back(x);
  }
  return DataLinkage(std::move(out));
}

/// Restricted collection by reference counting: an atom whose count drops
/// to zero loses its outgoing links, which may in turn release others.
inline DataLinkage rgc(const DataLinkage& l) {
  std::map<AtomId, int> refs;
  std::map<AtomId, std::vector<AtomicLink>> owned;
  for (const AtomicLink& x : l) {
    if (const auto* s = std::get_if<SpotLink>(&x)) ++refs[s->atom];
    if (const auto* f = std::get_if<FieldLink>(&x)) ++refs[f->target];
    if (auto o = owner(x)) owned[*o].push_back(x);
  }
  std::set<AtomicLink> dropped;
  std::vector<AtomId> work;
  for (const auto& [a, _] : owned)
    if (refs[a] == 0) work.push_back(a);
  std::set<AtomId> released;
  while (!work.empty()) {
    AtomId a = work.back();
    work.pop_back();
    if (!released.insert(a).second) continue;
    for (const AtomicLink& x : owned[a]) {
      dropped.insert(x);
      if (const auto* f = std::get_if<FieldLink>(&x))
        if (--refs[f->target] == 0) work.push_back(f->target);
    }
  }
  std::vector<AtomicLink> out;
  for (const AtomicLink& x : l)
    if (!dropped.count(x)) out.push_back(x);
  return DataLinkage(std::move(out));
}

/// Safe disposal in closed form.
inline DataLinkage safe_dispose(AtomId d, const DataLinkage& l) {
  if (bfs_reachable(l).count(d)) return l;
  std::vector<AtomicLink> out;
  for (const AtomicLink& x : l) {
    const auto atoms = atoms_of(x);
    if (std::find(atoms.begin(), atoms.end(), d) == atoms.end()) out.push_back(x);
  }
  return DataLinkage(std::move(out));
}

/// Atoms on a field cycle of zeta, via Tarjan's strongly connected
/// components: members of a component with more than one atom, plus atoms
/// with a field pointing at themselves.
inline std::set<AtomId> cycle_atoms(
    const std::map<AtomId, SetState::FieldMap>& zeta) {
  std::map<AtomId, int> index, low;
  std::set<AtomId> on_stack, out;
  std::vector<AtomId> stack;
  int counter = 0;
  std::function<void(AtomId)> visit = [&](AtomId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    auto it = zeta.find(v);
    if (it != zeta.end())
      for (const auto& [f, c] : it->second) {
        if (!c) continue;
        if (*c == v) out.insert(v);
        if (!index.count(*c)) {
          visit(*c);
          low[v] = std::min(low[v], low[*c]);
        } else if (on_stack.count(*c)) {
          low[v] = std::min(low[v], index[*c]);
        }
      }
    if (low[v] == index[v]) {
      std::vector<AtomId> comp;
      AtomId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        comp.push_back(w);
      } while (w != v);
      if (comp.size() > 1) out.insert(comp.begin(), comp.end());
    }
  };
  for (const auto& [a, _] : zeta)
    if (!index.count(a)) visit(a);
  return out;
}

/// Transitive field-successor closure by BFS.
inline std::set<AtomId> reach_from(
    AtomId a, const std::map<AtomId, SetState::FieldMap>& zeta) {
  std::set<AtomId> seen{a};
  std::queue<AtomId> q;
  q.push(a);
  while (!q.empty()) {
    AtomId x = q.front();
    q.pop();
    auto it = zeta.find(x);
    if (it == zeta.end()) continue;
    for (const auto& [f, c] : it->second)
      if (c && seen.insert(*c).second) q.push(*c);
  }
  return seen;
}

}  // namespace dld::oracle
