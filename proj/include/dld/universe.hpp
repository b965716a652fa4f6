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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dld/error.hpp"
#include "dld/meadow.hpp"

namespace dld {

struct SpotId {
  std::uint16_t index = 0;
  auto operator<=>(const SpotId&) const = default;
};

struct FieldId {
  std::uint16_t index = 0;
  auto operator<=>(const FieldId&) const = default;
};

struct AtomId {
  std::uint16_t index = 0;
  auto operator<=>(const AtomId&) const = default;
};

/// The fixed finite sets every computation ranges over: spots, fields and
/// atomic objects (in declaration order), plus the prime modulus of the value
/// meadow. Declaration order is the order used for canonical rendering and for
/// the fresh-atom choice function.
class Universe {
 public:
  Universe(std::vector<std::string> spots, std::vector<std::string> fields,
           std::vector<std::string> atoms, std::uint32_t modulus)
      : spots_(std::move(spots)),
        fields_(std::move(fields)),
        atoms_(std::move(atoms)),
        meadow_(modulus) {
    if (spots_.empty()) throw ConfigError("universe needs at least one spot");
    if (atoms_.empty()) throw ConfigError("universe needs at least one atom");
    index_names(spots_, spot_index_, "spot");
    index_names(fields_, field_index_, "field");
    index_names(atoms_, atom_index_, "atom");
  }

  /// Generated names: spots s0.., fields f0.., atoms #0..
  static Universe with_counts(std::size_t spots, std::size_t fields,
                              std::size_t atoms, std::uint32_t modulus) {
    return Universe(numbered("s", spots), numbered("f", fields),
                    numbered("#", atoms), modulus);
  }

  /// The universe of the worked examples: spots r, s, t, u; fields up, dn,
  /// f, g; atoms #0..#9; values in GF(11).
  static Universe demo() {
    return Universe({"r", "s", "t", "u"}, {"up", "dn", "f", "g"},
                    numbered("#", 10), 11);
  }

  std::size_t spot_count() const { return spots_.size(); }
  std::size_t field_count() const { return fields_.size(); }
  std::size_t atom_count() const { return atoms_.size(); }
  std::uint32_t modulus() const { return meadow_.modulus(); }
  const PrimeMeadow& meadow() const { return meadow_; }

  const std::string& name(SpotId s) const { return spots_.at(s.index); }
  const std::string& name(FieldId f) const { return fields_.at(f.index); }
  const std::string& name(AtomId a) const { return atoms_.at(a.index); }

  std::optional<SpotId> find_spot(std::string_view n) const {
    return lookup<SpotId>(spot_index_, n);
  }
  std::optional<FieldId> find_field(std::string_view n) const {
    return lookup<FieldId>(field_index_, n);
  }
  std::optional<AtomId> find_atom(std::string_view n) const {
    return lookup<AtomId>(atom_index_, n);
  }

  std::vector<SpotId> spots() const { return ids<SpotId>(spots_.size()); }
  std::vector<FieldId> fields() const { return ids<FieldId>(fields_.size()); }
  std::vector<AtomId> atoms() const { return ids<AtomId>(atoms_.size()); }

  bool operator==(const Universe& o) const {
    return spots_ == o.spots_ && fields_ == o.fields_ && atoms_ == o.atoms_ &&
           modulus() == o.modulus();
  }

 private:
  static std::vector<std::string> numbered(std::string_view prefix,
                                           std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(std::string(prefix) + std::to_string(i));
    return out;
  }

  static void index_names(const std::vector<std::string>& names,
                          std::unordered_map<std::string, std::uint16_t>& out,
                          const char* what) {
    if (names.size() > 0xFFFF)
      throw ConfigError(std::string("too many ") + what + " names");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty())
        throw ConfigError(std::string("empty ") + what + " name");
      if (!out.emplace(names[i], static_cast<std::uint16_t>(i)).second)
        throw ConfigError(std::string("duplicate ") + what + " name '" +
                          names[i] + "'");
    }
  }

  template <class Id>
  static std::optional<Id> lookup(
      const std::unordered_map<std::string, std::uint16_t>& index,
      std::string_view n) {
    auto it = index.find(std::string(n));
    if (it == index.end()) return std::nullopt;
    return Id{it->second};
  }

  template <class Id>
  static std::vector<Id> ids(std::size_t n) {
    std::vector<Id> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(Id{static_cast<std::uint16_t>(i)});
    return out;
  }

  std::vector<std::string> spots_;
  std::vector<std::string> fields_;
  std::vector<std::string> atoms_;
  PrimeMeadow meadow_;
  std::unordered_map<std::string, std::uint16_t> spot_index_;
  std::unordered_map<std::string, std::uint16_t> field_index_;
  std::unordered_map<std::string, std::uint16_t> atom_index_;
};

}  // namespace dld
