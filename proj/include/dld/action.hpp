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

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dld/universe.hpp"

namespace dld {

enum class Op : std::uint8_t {
  // basic, non-value
  kGetAtObj,
  kSetSpot,
  kClrSpot,
  kEqualTst,
  kUndefTst,
  kAddField,
  kRmvField,
  kHasField,
  kSetField,
  kClrField,
  kGetField,
  // basic, value
  kAssZero,
  kAssOne,
  kAssAdd,
  kAssMul,
  kAssNeg,
  kAssInv,
  kEqValTst,
  kUndefVTst,
  // reclamation
  kFgc,
  kRgc,
  kSdGetAtObj,
  kSdSetSpot,
  kSdClrSpot,
  kSdSetField,
  kSdClrField,
  kSdGetField,
  kUdGetAtObj,
  kUdSetSpot,
  kUdClrSpot,
  kUdSetField,
  kUdClrField,
  kUdGetField,
};

inline constexpr std::size_t kOpCount = 33;
inline constexpr std::size_t kBasicOpCount = 19;

struct OpInfo {
  Op op;
  std::string_view name;
  // Parameter kinds in written order: 's' spot, 'f' field. Spots fill the
  // slots s, t, u in order.
  std::string_view params;
};

inline constexpr std::array<OpInfo, kOpCount> kOpTable = {{
    {Op::kGetAtObj, "getatobj", "s"},
    {Op::kSetSpot, "setspot", "ss"},
    {Op::kClrSpot, "clrspot", "s"},
    {Op::kEqualTst, "equaltst", "ss"},
    {Op::kUndefTst, "undeftst", "s"},
    {Op::kAddField, "addfield", "sf"},
    {Op::kRmvField, "rmvfield", "sf"},
    {Op::kHasField, "hasfield", "sf"},
    {Op::kSetField, "setfield", "sfs"},
    {Op::kClrField, "clrfield", "sf"},
    {Op::kGetField, "getfield", "ssf"},
    {Op::kAssZero, "asszero", "s"},
    {Op::kAssOne, "assone", "s"},
    {Op::kAssAdd, "assadd", "sss"},
    {Op::kAssMul, "assmul", "sss"},
    {Op::kAssNeg, "assneg", "ss"},
    {Op::kAssInv, "assinv", "ss"},
    {Op::kEqValTst, "eqvaltst", "ss"},
    {Op::kUndefVTst, "undefvtst", "s"},
    {Op::kFgc, "fgc", ""},
    {Op::kRgc, "rgc", ""},
    {Op::kSdGetAtObj, "sdgetatobj", "s"},
    {Op::kSdSetSpot, "sdsetspot", "ss"},
    {Op::kSdClrSpot, "sdclrspot", "s"},
    {Op::kSdSetField, "sdsetfield", "sfs"},
    {Op::kSdClrField, "sdclrfield", "sf"},
    {Op::kSdGetField, "sdgetfield", "ssf"},
    {Op::kUdGetAtObj, "udgetatobj", "s"},
    {Op::kUdSetSpot, "udsetspot", "ss"},
    {Op::kUdClrSpot, "udclrspot", "s"},
    {Op::kUdSetField, "udsetfield", "sfs"},
    {Op::kUdClrField, "udclrfield", "sf"},
    {Op::kUdGetField, "udgetfield", "ssf"},
}};

inline const OpInfo& info(Op op) { return kOpTable[static_cast<std::size_t>(op)]; }
inline std::string_view op_name(Op op) { return info(op).name; }

inline std::optional<Op> find_op(std::string_view name) {
  for (const auto& i : kOpTable)
    if (i.name == name) return i.op;
  return std::nullopt;
}

inline bool is_basic(Op op) {
  return static_cast<std::size_t>(op) < kBasicOpCount;
}
inline bool is_gc(Op op) { return op == Op::kFgc || op == Op::kRgc; }
inline bool is_safe_disposal(Op op) {
  return op >= Op::kSdGetAtObj && op <= Op::kSdGetField;
}
inline bool is_unsafe_disposal(Op op) {
  return op >= Op::kUdGetAtObj && op <= Op::kUdGetField;
}

inline constexpr std::array<Op, 6> kDisposalBase = {
    Op::kGetAtObj, Op::kSetSpot,  Op::kClrSpot,
    Op::kSetField, Op::kClrField, Op::kGetField};

// The basic action a disposal variant wraps.
inline Op underlying(Op op) {
  if (is_safe_disposal(op))
    return kDisposalBase[static_cast<std::size_t>(op) -
                    static_cast<std::size_t>(Op::kSdGetAtObj)];
  if (is_unsafe_disposal(op))
    return kDisposalBase[static_cast<std::size_t>(op) -
                    static_cast<std::size_t>(Op::kUdGetAtObj)];
  return op;
}

struct Action {
  Op op = Op::kGetAtObj;
  SpotId s{};
  SpotId t{};
  SpotId u{};
  FieldId f{};

  auto operator<=>(const Action&) const = default;

  // The same parameters applied to another operation of the same shape.
  Action with_op(Op other) const {
    Action a = *this;
    a.op = other;
    return a;
  }
};

inline Action make_action(Op op, std::vector<SpotId> spots = {},
                          FieldId f = {}) {
  Action a;
  a.op = op;
  if (spots.size() > 0) a.s = spots[0];
  if (spots.size() > 1) a.t = spots[1];
  if (spots.size() > 2) a.u = spots[2];
  a.f = f;
  return a;
}

inline std::string format_action(const Action& a, const Universe& u) {
  const OpInfo& i = info(a.op);
  std::string out(i.name);
  if (i.params.empty()) return out;
  out += "(";
  const SpotId slots[3] = {a.s, a.t, a.u};
  std::size_t next_spot = 0;
  for (std::size_t k = 0; k < i.params.size(); ++k) {
    if (k) out += ",";
    if (i.params[k] == 's')
      out += u.name(slots[next_spot++]);
    else
      out += u.name(a.f);
  }
  return out + ")";
}

/// Every instantiation of every operation over the universe's spots and
/// fields, basic operations first.
inline std::vector<Action> enumerate_actions(const Universe& u,
                                             bool include_reclaim = true) {
  std::vector<Action> out;
  const auto spots = u.spots();
  const auto fields = u.fields();
  for (const auto& i : kOpTable) {
    if (!include_reclaim && !is_basic(i.op)) break;
    std::size_t n_spots = 0;
    bool has_field = false;
    for (char c : i.params) {
      if (c == 's')
        ++n_spots;
      else
        has_field = true;
    }
    if (has_field && fields.empty()) continue;
    std::vector<std::size_t> idx(n_spots, 0);
    const std::size_t n_fields = has_field ? fields.size() : 1;
    while (true) {
      for (std::size_t fi = 0; fi < n_fields; ++fi) {
        std::vector<SpotId> chosen;
        for (std::size_t k : idx) chosen.push_back(spots[k]);
        out.push_back(make_action(i.op, chosen,
                                  has_field ? fields[fi] : FieldId{}));
      }
      std::size_t k = n_spots;
      while (k > 0 && ++idx[k - 1] == spots.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

}  // namespace dld
