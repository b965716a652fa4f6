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
#include <optional>
#include <string>

#include "dld/reclaim.hpp"
#include "dld/text.hpp"

namespace dld {

enum class ServiceReply { kFalse, kTrue, kBlocked };

inline char service_reply_char(ServiceReply r) {
  switch (r) {
    case ServiceReply::kTrue:
      return 'T';
    case ServiceReply::kFalse:
      return 'F';
    case ServiceReply::kBlocked:
      return 'B';
  }
  return '?';
}

/// A value-semantics service. Any model type M with
///   ServiceReply reply(const std::string&) const;
///   M derive(const std::string&) const;
///   std::string render() const;
/// can be wrapped. The wrapper makes the blocked state absorbing: once a
/// method is answered with Blocked, the derived service answers Blocked to
/// everything, whatever the model would have done.
class Service {
 public:
  template <class M>
  explicit Service(M model)
      : self_(std::make_shared<const Holder<M>>(std::move(model))) {}

  bool blocked() const { return blocked_; }

  ServiceReply reply(const std::string& method) const {
    return blocked_ ? ServiceReply::kBlocked : self_->reply(method);
  }

  // The step that blocks still reaches the model, so it can show its own
  // blocked state; after that the model is frozen.
  Service derive(const std::string& method) const {
    if (blocked_) return *this;
    Service out = *this;
    out.blocked_ = reply(method) == ServiceReply::kBlocked;
    out.self_ = self_->derive(method);
    return out;
  }

  std::string render() const { return self_->render(); }

  // Access to the wrapped model, nullptr when the type does not match.
  template <class M>
  const M* model() const {
    const auto* h = dynamic_cast<const Holder<M>*>(self_.get());
    return h ? &h->model : nullptr;
  }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual ServiceReply reply(const std::string& method) const = 0;
    virtual std::shared_ptr<const Concept> derive(
        const std::string& method) const = 0;
    virtual std::string render() const = 0;
  };

  template <class M>
  struct Holder final : Concept {
    explicit Holder(M m) : model(std::move(m)) {}
    ServiceReply reply(const std::string& method) const override {
      return model.reply(method);
    }
    std::shared_ptr<const Concept> derive(
        const std::string& method) const override {
      return std::make_shared<const Holder<M>>(model.derive(method));
    }
    std::string render() const override { return model.render(); }
    M model;
  };

  std::shared_ptr<const Concept> self_;
  bool blocked_ = false;
};

enum class DldVariant { kPlain, kDldr, kAfgc };

inline std::string_view variant_name(DldVariant v) {
  switch (v) {
    case DldVariant::kPlain:
      return "plain";
    case DldVariant::kDldr:
      return "dldr";
    case DldVariant::kAfgc:
      return "afgc";
  }
  return "?";
}

inline std::optional<DldVariant> find_variant(std::string_view name) {
  for (DldVariant v : {DldVariant::kPlain, DldVariant::kDldr, DldVariant::kAfgc})
    if (variant_name(v) == name) return v;
  return std::nullopt;
}

/// The data linkage dynamics service. Methods are action texts such as
/// "getatobj(r)"; a method the variant does not accept is answered with
/// Blocked and leads to the undefined state.
class DldModel {
 public:
  DldModel(std::shared_ptr<const Universe> u, DldVariant v,
           std::optional<DataLinkage> state, EvalOptions opt = {})
      : u_(std::move(u)), variant_(v), state_(std::move(state)), opt_(opt) {}

  const std::optional<DataLinkage>& state() const { return state_; }
  const Universe& universe() const { return *u_; }
  DldVariant variant() const { return variant_; }

  ServiceReply reply(const std::string& method) const {
    auto a = accept(method);
    if (!a) return ServiceReply::kBlocked;
    if (is_auto_gc(*a))
      return to_service(yield(*u_, *a, fgc(*state_, opt_), opt_));
    return to_service(yield_dldr(*u_, *a, *state_, opt_));
  }

  DldModel derive(const std::string& method) const {
    DldModel out = *this;
    auto a = accept(method);
    if (!a)
      out.state_.reset();
    else if (is_auto_gc(*a))
      out.state_ = effect(*u_, *a, fgc(*state_, opt_), opt_);
    else
      out.state_ = effect_dldr(*u_, *a, *state_, opt_);
    return out;
  }

  std::string render() const {
    return state_ ? canonical_text(*state_, *u_) : "undef";
  }

 private:
  static ServiceReply to_service(Reply r) {
    return r == Reply::kTrue ? ServiceReply::kTrue : ServiceReply::kFalse;
  }

  bool is_auto_gc(const Action& a) const {
    return variant_ == DldVariant::kAfgc && a.op == Op::kGetAtObj;
  }

  std::optional<Action> accept(const std::string& method) const {
    if (!state_) return std::nullopt;
    std::optional<Action> a;
    try {
      a = parse_action(method, *u_);
    } catch (const Error&) {
      return std::nullopt;
    }
    if (variant_ == DldVariant::kPlain && !is_basic(a->op)) return std::nullopt;
    return a;
  }

  std::shared_ptr<const Universe> u_;
  DldVariant variant_;
  std::optional<DataLinkage> state_;
  EvalOptions opt_;
};

inline Service dlds(std::shared_ptr<const Universe> u, const DataLinkage& initial,
                    DldVariant v = DldVariant::kPlain, EvalOptions opt = {}) {
  if (!is_deterministic(initial))
    throw NonDeterministicState("service initial state is not deterministic");
  if (!fits(initial, *u))
    throw UndeclaredName("service initial state is not over the universe");
  return Service(DldModel(std::move(u), v, initial, opt));
}

}  // namespace dld
