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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dld/linkage.hpp"
#include "dld/term.hpp"
#include "dld/thread.hpp"

namespace dld::gen {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool chance(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

inline AtomicLink link(Rng& rng, const std::vector<AtomicLink>& pool) {
  return pool[pick(rng, pool.size())];
}

// Random closed term of depth at most max_depth over the given link pool.
inline LinkageTerm term(Rng& rng, const std::vector<AtomicLink>& pool,
                        std::size_t max_depth) {
  if (max_depth <= 1 || chance(rng, 0.25)) {
    if (chance(rng, 0.1)) return LinkageTerm::empty();
    return LinkageTerm::leaf(link(rng, pool));
  }
  LinkageTerm l = term(rng, pool, max_depth - 1);
  LinkageTerm r = term(rng, pool, max_depth - 1);
  return chance(rng, 0.5) ? LinkageTerm::combine(std::move(l), std::move(r))
                          : LinkageTerm::override(std::move(l), std::move(r));
}

// Swaps the operands of every combination node, which must not change the
// normal form.
inline LinkageTerm mirror_combines(const LinkageTerm& t) {
  switch (t.kind()) {
    case LinkageTerm::Kind::kCombine:
      return LinkageTerm::combine(mirror_combines(t.rhs()), mirror_combines(t.lhs()));
    case LinkageTerm::Kind::kOverride:
      return LinkageTerm::override(mirror_combines(t.lhs()), mirror_combines(t.rhs()));
    default:
      return t;
  }
}

inline DataLinkage linkage(Rng& rng, const std::vector<AtomicLink>& pool,
                           std::size_t max_size) {
  std::vector<AtomicLink> out;
  const std::size_t n = pick(rng, max_size + 1);
  for (std::size_t i = 0; i < n; ++i) out.push_back(link(rng, pool));
  return DataLinkage(std::move(out));
}

// Random finite (reference-free) thread over the given foci and methods.
inline Thread thread(Rng& rng, const std::vector<std::string>& foci,
                     const std::vector<std::string>& methods,
                     std::size_t max_depth) {
  if (max_depth == 0 || chance(rng, 0.2)) return chance(rng, 0.7) ? Thread::stop() : Thread::deadlock();
  if (chance(rng, 0.15)) return Thread::tau(thread(rng, foci, methods, max_depth - 1));
  FocusedAction a{foci[pick(rng, foci.size())], methods[pick(rng, methods.size())]};
  Thread x = thread(rng, foci, methods, max_depth - 1);
  Thread y = thread(rng, foci, methods, max_depth - 1);
  return Thread::post(std::move(a), std::move(x), std::move(y));
}

/// A finite-state service with a random transition and reply table. Method
/// names outside the table are answered with Blocked.
class TableService {
 public:
  TableService(std::vector<std::string> methods, std::size_t states, Rng& rng)
      : methods_(std::move(methods)) {
    reply_.resize(states * methods_.size());
    next_.resize(states * methods_.size());
    for (std::size_t i = 0; i < reply_.size(); ++i) {
      const std::size_t r = pick(rng, 10);
      reply_[i] = r < 4 ? ServiceReply::kTrue : r < 8 ? ServiceReply::kFalse
                                                      : ServiceReply::kBlocked;
      next_[i] = pick(rng, states);
    }
  }

  // Fixes the reply of one method in the initial state.
  void set_initial_reply(std::size_t method, ServiceReply r) {
    reply_[method] = r;
  }

  ServiceReply reply(const std::string& m) const {
    auto k = slot(m);
    return k ? reply_[*k] : ServiceReply::kBlocked;
  }

  TableService derive(const std::string& m) const {
    TableService out = *this;
    if (auto k = slot(m)) out.state_ = next_[*k];
    return out;
  }

  std::string render() const { return "q" + std::to_string(state_); }

 private:
  std::optional<std::size_t> slot(const std::string& m) const {
    for (std::size_t i = 0; i < methods_.size(); ++i)
      if (methods_[i] == m) return state_ * methods_.size() + i;
    return std::nullopt;
  }

  std::vector<std::string> methods_;
  std::vector<ServiceReply> reply_;
  std::vector<std::size_t> next_;
  std::size_t state_ = 0;
};

}  // namespace dld::gen
