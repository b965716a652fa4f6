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
#include <compare>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dld/meadow.hpp"
#include "dld/universe.hpp"

namespace dld {

// s:a
struct SpotLink {
  SpotId spot;
  AtomId atom;
  auto operator<=>(const SpotLink&) const = default;
};

// a.f:?
struct PartialFieldLink {
  AtomId atom;
  FieldId field;
  auto operator<=>(const PartialFieldLink&) const = default;
};

// a.f:b
struct FieldLink {
  AtomId source;
  FieldId field;
  AtomId target;
  auto operator<=>(const FieldLink&) const = default;
};

// a=n
struct ValueAssociation {
  AtomId atom;
  MeadowValue value;
  auto operator<=>(const ValueAssociation&) const = default;
};

// The alternative order fixes the canonical order: spot links, partial field
// links, field links, value associations.
using AtomicLink =
    std::variant<SpotLink, PartialFieldLink, FieldLink, ValueAssociation>;

struct SpotKey {
  SpotId spot;
  auto operator<=>(const SpotKey&) const = default;
};

struct FieldKey {
  AtomId atom;
  FieldId field;
  auto operator<=>(const FieldKey&) const = default;
};

struct ValueKey {
  AtomId atom;
  auto operator<=>(const ValueKey&) const = default;
};

/// The position an atomic link occupies. Two links with the same key cannot
/// coexist in a deterministic linkage, and overriding replaces by key.
using OverrideKey = std::variant<SpotKey, FieldKey, ValueKey>;

inline OverrideKey key_of(const AtomicLink& link) {
  struct Visitor {
    OverrideKey operator()(const SpotLink& l) const { return SpotKey{l.spot}; }
    OverrideKey operator()(const PartialFieldLink& l) const {
      return FieldKey{l.atom, l.field};
    }
    OverrideKey operator()(const FieldLink& l) const {
      return FieldKey{l.source, l.field};
    }
    OverrideKey operator()(const ValueAssociation& l) const {
      return ValueKey{l.atom};
    }
  };
  return std::visit(Visitor{}, link);
}

// Atoms the link mentions, in argument order (a flink may repeat one).
inline std::vector<AtomId> atoms_of(const AtomicLink& link) {
  struct Visitor {
    std::vector<AtomId> operator()(const SpotLink& l) const { return {l.atom}; }
    std::vector<AtomId> operator()(const PartialFieldLink& l) const {
      return {l.atom};
    }
    std::vector<AtomId> operator()(const FieldLink& l) const {
      return {l.source, l.target};
    }
    std::vector<AtomId> operator()(const ValueAssociation& l) const {
      return {l.atom};
    }
  };
  return std::visit(Visitor{}, link);
}

inline bool involves(const AtomicLink& link, AtomId a) {
  for (AtomId x : atoms_of(link))
    if (x == a) return true;
  return false;
}

/// The content of a spot, field or value position: absent, unique, or
/// occupied more than once.
template <class T>
struct Content {
  enum class Kind { kUndefined, kDefined, kNonDeterministic };
  Kind kind = Kind::kUndefined;
  T value{};

  static Content undefined() { return {}; }
  static Content defined(T v) { return {Kind::kDefined, v}; }
  static Content nondeterministic() { return {Kind::kNonDeterministic, T{}}; }

  bool is_undefined() const { return kind == Kind::kUndefined; }
  bool is_defined() const { return kind == Kind::kDefined; }
  bool is_nondeterministic() const { return kind == Kind::kNonDeterministic; }
  bool operator==(const Content&) const = default;
};

/// A finite duplicate-free set of atomic links, kept sorted in canonical
/// order.
class DataLinkage {
 public:
  using const_iterator = std::vector<AtomicLink>::const_iterator;

  DataLinkage() = default;
  DataLinkage(std::initializer_list<AtomicLink> links)
      : DataLinkage(std::vector<AtomicLink>(links)) {}
  explicit DataLinkage(std::vector<AtomicLink> links) : links_(std::move(links)) {
    std::sort(links_.begin(), links_.end());
    links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
  }

  // Caller guarantees links are sorted and unique.
  static DataLinkage from_sorted(std::vector<AtomicLink> links) {
    DataLinkage l;
    l.links_ = std::move(links);
    return l;
  }

  const_iterator begin() const { return links_.begin(); }
  const_iterator end() const { return links_.end(); }
  std::size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }
  const std::vector<AtomicLink>& links() const { return links_; }

  bool contains(const AtomicLink& link) const {
    return std::binary_search(links_.begin(), links_.end(), link);
  }

  void insert(const AtomicLink& link) {
    auto it = std::lower_bound(links_.begin(), links_.end(), link);
    if (it == links_.end() || *it != link) links_.insert(it, link);
  }

  bool erase(const AtomicLink& link) {
    auto it = std::lower_bound(links_.begin(), links_.end(), link);
    if (it == links_.end() || *it != link) return false;
    links_.erase(it);
    return true;
  }

  template <class Pred>
  std::size_t erase_if(Pred pred) {
    auto it = std::remove_if(links_.begin(), links_.end(), pred);
    std::size_t n = static_cast<std::size_t>(links_.end() - it);
    links_.erase(it, links_.end());
    return n;
  }

  bool includes(const DataLinkage& other) const {
    return std::includes(links_.begin(), links_.end(), other.links_.begin(),
                         other.links_.end());
  }

  bool operator==(const DataLinkage&) const = default;
  auto operator<=>(const DataLinkage& o) const {
    return links_ <=> o.links_;
  }

  // Contiguous run of spot links via s.
  std::vector<AtomId> spot_targets(SpotId s) const {
    std::vector<AtomId> out;
    auto it = std::lower_bound(links_.begin(), links_.end(),
                               AtomicLink(SpotLink{s, AtomId{0}}));
    for (; it != links_.end(); ++it) {
      const auto* sl = std::get_if<SpotLink>(&*it);
      if (!sl || sl->spot != s) break;
      out.push_back(sl->atom);
    }
    return out;
  }

  // Entries at (a, f): nullopt for a partial link, the target for a link.
  std::vector<std::optional<AtomId>> field_entries(AtomId a, FieldId f) const {
    std::vector<std::optional<AtomId>> out;
    if (contains(PartialFieldLink{a, f})) out.push_back(std::nullopt);
    auto it = std::lower_bound(links_.begin(), links_.end(),
                               AtomicLink(FieldLink{a, f, AtomId{0}}));
    for (; it != links_.end(); ++it) {
      const auto* fl = std::get_if<FieldLink>(&*it);
      if (!fl || fl->source != a || fl->field != f) break;
      out.push_back(fl->target);
    }
    return out;
  }

  std::vector<MeadowValue> values(AtomId a) const {
    std::vector<MeadowValue> out;
    auto it = std::lower_bound(links_.begin(), links_.end(),
                               AtomicLink(ValueAssociation{a, MeadowValue{0}}));
    for (; it != links_.end(); ++it) {
      const auto* va = std::get_if<ValueAssociation>(&*it);
      if (!va || va->atom != a) break;
      out.push_back(va->value);
    }
    return out;
  }

 private:
  std::vector<AtomicLink> links_;
};

inline DataLinkage combine(const DataLinkage& a, const DataLinkage& b) {
  std::vector<AtomicLink> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return DataLinkage::from_sorted(std::move(out));
}

/// Overriding combination. Overriding distributes over the links of b, so a
/// link of a is displaced only when every link of b shares its key: with
/// links of two different keys on the right, each one leaves the other's
/// victims in place. For an empty b the result is a.
inline DataLinkage override(const DataLinkage& a, const DataLinkage& b) {
  if (b.empty()) return a;
  const OverrideKey first = key_of(*b.begin());
  bool single_key = true;
  for (const auto& y : b) single_key = single_key && key_of(y) == first;
  if (!single_key) return combine(a, b);
  std::vector<AtomicLink> out(b.begin(), b.end());
  for (const auto& x : a)
    if (key_of(x) != first) out.push_back(x);
  return DataLinkage(std::move(out));
}

inline DataLinkage override(const DataLinkage& a, const AtomicLink& b) {
  return override(a, DataLinkage{b});
}

inline bool is_deterministic(const DataLinkage& l) {
  std::set<OverrideKey> seen;
  for (const auto& x : l)
    if (!seen.insert(key_of(x)).second) return false;
  return true;
}

inline std::set<AtomId> atobj(const DataLinkage& l) {
  std::set<AtomId> out;
  for (const auto& x : l)
    for (AtomId a : atoms_of(x)) out.insert(a);
  return out;
}

inline Content<AtomId> spot_content(const DataLinkage& l, SpotId s) {
  auto targets = l.spot_targets(s);
  if (targets.empty()) return Content<AtomId>::undefined();
  if (targets.size() > 1) return Content<AtomId>::nondeterministic();
  return Content<AtomId>::defined(targets.front());
}

inline std::set<FieldId> fields_of(const DataLinkage& l, AtomId a) {
  std::set<FieldId> out;
  for (const auto& x : l) {
    if (const auto* p = std::get_if<PartialFieldLink>(&x); p && p->atom == a)
      out.insert(p->field);
    if (const auto* f = std::get_if<FieldLink>(&x); f && f->source == a)
      out.insert(f->field);
  }
  return out;
}

inline Content<AtomId> field_content(const DataLinkage& l, AtomId a,
                                     FieldId f) {
  auto entries = l.field_entries(a, f);
  if (entries.size() > 1) return Content<AtomId>::nondeterministic();
  if (entries.empty() || !entries.front())
    return Content<AtomId>::undefined();
  return Content<AtomId>::defined(*entries.front());
}

inline Content<MeadowValue> value_of(const DataLinkage& l, AtomId a) {
  auto vs = l.values(a);
  if (vs.empty()) return Content<MeadowValue>::undefined();
  if (vs.size() > 1) return Content<MeadowValue>::nondeterministic();
  return Content<MeadowValue>::defined(vs.front());
}

inline std::string format_link(const AtomicLink& link, const Universe& u) {
  struct Visitor {
    const Universe& u;
    std::string operator()(const SpotLink& l) const {
      return u.name(l.spot) + ":" + u.name(l.atom);
    }
    std::string operator()(const PartialFieldLink& l) const {
      return u.name(l.atom) + "." + u.name(l.field) + ":?";
    }
    std::string operator()(const FieldLink& l) const {
      return u.name(l.source) + "." + u.name(l.field) + ":" + u.name(l.target);
    }
    std::string operator()(const ValueAssociation& l) const {
      return u.name(l.atom) + "=" + std::to_string(l.value.residue);
    }
  };
  return std::visit(Visitor{u}, link);
}

inline std::string canonical_text(const DataLinkage& l, const Universe& u) {
  if (l.empty()) return "0";
  std::string out;
  for (const auto& x : l) {
    if (!out.empty()) out += ", ";
    out += format_link(x, u);
  }
  return out;
}

// True if every name index and value lies inside the universe.
inline bool fits(const AtomicLink& link, const Universe& u) {
  struct Visitor {
    const Universe& u;
    bool atom(AtomId a) const { return a.index < u.atom_count(); }
    bool field(FieldId f) const { return f.index < u.field_count(); }
    bool operator()(const SpotLink& l) const {
      return l.spot.index < u.spot_count() && atom(l.atom);
    }
    bool operator()(const PartialFieldLink& l) const {
      return atom(l.atom) && field(l.field);
    }
    bool operator()(const FieldLink& l) const {
      return atom(l.source) && field(l.field) && atom(l.target);
    }
    bool operator()(const ValueAssociation& l) const {
      return atom(l.atom) && l.value.residue < u.modulus();
    }
  };
  return std::visit(Visitor{u}, link);
}

inline bool fits(const DataLinkage& l, const Universe& u) {
  return std::all_of(l.begin(), l.end(),
                     [&](const AtomicLink& x) { return fits(x, u); });
}

// Every atomic link the universe admits, in canonical order.
inline std::vector<AtomicLink> all_links(const Universe& u) {
  std::vector<AtomicLink> out;
  for (SpotId s : u.spots())
    for (AtomId a : u.atoms()) out.push_back(SpotLink{s, a});
  for (AtomId a : u.atoms())
    for (FieldId f : u.fields()) out.push_back(PartialFieldLink{a, f});
  for (AtomId a : u.atoms())
    for (FieldId f : u.fields())
      for (AtomId b : u.atoms()) out.push_back(FieldLink{a, f, b});
  for (AtomId a : u.atoms())
    for (std::uint32_t n = 0; n < u.modulus(); ++n)
      out.push_back(ValueAssociation{a, MeadowValue{n}});
  return out;
}

}  // namespace dld
