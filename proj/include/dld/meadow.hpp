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
#include <concepts>
#include <cstdint>

#include "dld/error.hpp"

namespace dld {

struct MeadowValue {
  std::uint32_t residue = 0;
  auto operator<=>(const MeadowValue&) const = default;
};

// A finite meadow: a commutative ring with a total inverse satisfying
// inv(inv(x)) = x and x * x * inv(x) = x.
template <class M>
concept Meadow = requires(const M& m, MeadowValue x) {
  { m.zero() } -> std::same_as<MeadowValue>;
  { m.one() } -> std::same_as<MeadowValue>;
  { m.add(x, x) } -> std::same_as<MeadowValue>;
  { m.mul(x, x) } -> std::same_as<MeadowValue>;
  { m.neg(x) } -> std::same_as<MeadowValue>;
  { m.inv(x) } -> std::same_as<MeadowValue>;
  { m.size() } -> std::convertible_to<std::uint32_t>;
};

/// GF(p) with zero-totalized inverse, inv(0) = 0.
class PrimeMeadow {
 public:
  static constexpr std::uint32_t kMaxModulus = 65521;

  explicit PrimeMeadow(std::uint32_t p) : p_(p) {
    if (!is_prime(p))
      throw ConfigError("modulus " + std::to_string(p) + " is not a prime");
    if (p > kMaxModulus)
      throw ConfigError("modulus " + std::to_string(p) + " is too large");
  }

  std::uint32_t modulus() const { return p_; }
  std::uint32_t size() const { return p_; }

  MeadowValue zero() const { return {0}; }
  MeadowValue one() const { return {1 % p_}; }

  MeadowValue from_integer(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  MeadowValue add(MeadowValue x, MeadowValue y) const {
    return {static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(x.residue) + y.residue) % p_)};
  }

  MeadowValue mul(MeadowValue x, MeadowValue y) const {
    return {static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(x.residue) * y.residue) % p_)};
  }

  MeadowValue neg(MeadowValue x) const {
    return {x.residue == 0 ? 0 : p_ - x.residue};
  }

  // Fermat: x^(p-2) is the inverse of x for x != 0, and 0^(p-2) = 0 when
  // p > 2. For p = 2 the only nonzero residue is its own inverse.
  MeadowValue inv(MeadowValue x) const {
    if (x.residue == 0) return {0};
    return pow(x, p_ - 2);
  }

  MeadowValue pow(MeadowValue x, std::uint32_t e) const {
    MeadowValue result = one();
    while (e > 0) {
      if (e & 1u) result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  }

  bool contains(MeadowValue x) const { return x.residue < p_; }

  static constexpr bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

static_assert(Meadow<PrimeMeadow>);

}  // namespace dld
