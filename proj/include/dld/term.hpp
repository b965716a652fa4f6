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

#include <memory>
#include <string>

#include "dld/linkage.hpp"

namespace dld {

/// A closed term over the empty linkage, atomic links, combination (+) and
/// overriding combination (<|).
class LinkageTerm {
 public:
  enum class Kind { kEmpty, kLeaf, kCombine, kOverride };

  static LinkageTerm empty() { return LinkageTerm(Kind::kEmpty); }
  static LinkageTerm leaf(AtomicLink link) {
    LinkageTerm t(Kind::kLeaf);
    t.link_ = link;
    return t;
  }
  static LinkageTerm combine(LinkageTerm lhs, LinkageTerm rhs) {
    return binary(Kind::kCombine, std::move(lhs), std::move(rhs));
  }
  static LinkageTerm override(LinkageTerm lhs, LinkageTerm rhs) {
    return binary(Kind::kOverride, std::move(lhs), std::move(rhs));
  }
  // The basic term l1 + ... + ln (0 when empty).
  static LinkageTerm of(const DataLinkage& l) {
    if (l.empty()) return empty();
    auto it = l.begin();
    LinkageTerm t = leaf(*it++);
    for (; it != l.end(); ++it) t = combine(std::move(t), leaf(*it));
    return t;
  }

  Kind kind() const { return kind_; }
  const AtomicLink& link() const { return link_; }
  const LinkageTerm& lhs() const { return *lhs_; }
  const LinkageTerm& rhs() const { return *rhs_; }

  std::size_t depth() const {
    if (kind_ == Kind::kEmpty || kind_ == Kind::kLeaf) return 1;
    return 1 + std::max(lhs_->depth(), rhs_->depth());
  }

  bool operator==(const LinkageTerm& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
      case Kind::kEmpty:
        return true;
      case Kind::kLeaf:
        return link_ == o.link_;
      default:
        return *lhs_ == *o.lhs_ && *rhs_ == *o.rhs_;
    }
  }

 private:
  explicit LinkageTerm(Kind k) : kind_(k) {}
  static LinkageTerm binary(Kind k, LinkageTerm lhs, LinkageTerm rhs) {
    LinkageTerm t(k);
    t.lhs_ = std::make_shared<const LinkageTerm>(std::move(lhs));
    t.rhs_ = std::make_shared<const LinkageTerm>(std::move(rhs));
    return t;
  }

  Kind kind_;
  AtomicLink link_{};
  std::shared_ptr<const LinkageTerm> lhs_;
  std::shared_ptr<const LinkageTerm> rhs_;
};

inline DataLinkage normalize(const LinkageTerm& t) {
  switch (t.kind()) {
    case LinkageTerm::Kind::kEmpty:
      return {};
    case LinkageTerm::Kind::kLeaf:
      return DataLinkage{t.link()};
    case LinkageTerm::Kind::kCombine:
      return combine(normalize(t.lhs()), normalize(t.rhs()));
    case LinkageTerm::Kind::kOverride:
      return override(normalize(t.lhs()), normalize(t.rhs()));
  }
  return {};
}

// Fully parenthesized rendering that the term parser reads back.
inline std::string format_term(const LinkageTerm& t, const Universe& u) {
  switch (t.kind()) {
    case LinkageTerm::Kind::kEmpty:
      return "0";
    case LinkageTerm::Kind::kLeaf:
      return format_link(t.link(), u);
    case LinkageTerm::Kind::kCombine:
      return "(" + format_term(t.lhs(), u) + " + " + format_term(t.rhs(), u) +
             ")";
    case LinkageTerm::Kind::kOverride:
      return "(" + format_term(t.lhs(), u) + " <| " +
             format_term(t.rhs(), u) + ")";
  }
  return {};
}

}  // namespace dld
