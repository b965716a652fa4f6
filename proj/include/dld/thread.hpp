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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dld/error.hpp"
#include "dld/service.hpp"

namespace dld {

struct FocusedAction {
  std::string focus;
  std::string method;

  std::string text() const { return focus + "." + method; }
  bool operator==(const FocusedAction&) const = default;
};

/// A basic thread term: S, D, postconditional composition over a focused
/// action or tau, or a reference into a ThreadSpec.
class Thread {
 public:
  enum class Kind { kStop, kDeadlock, kPost, kRef };

  static Thread stop() { return Thread(Kind::kStop); }
  static Thread deadlock() { return Thread(Kind::kDeadlock); }
  static Thread ref(std::string name) {
    Thread t(Kind::kRef);
    t.name_ = std::move(name);
    return t;
  }
  // tau has no observable reply, so both continuations collapse to the
  // first.
  static Thread tau(Thread next) {
    Thread t(Kind::kPost);
    t.then_ = std::make_shared<const Thread>(std::move(next));
    t.else_ = t.then_;
    return t;
  }
  static Thread post(FocusedAction a, Thread then, Thread otherwise) {
    Thread t(Kind::kPost);
    t.action_ = std::move(a);
    t.then_ = std::make_shared<const Thread>(std::move(then));
    t.else_ = std::make_shared<const Thread>(std::move(otherwise));
    return t;
  }
  static Thread post(std::optional<FocusedAction> a, Thread then,
                     Thread otherwise) {
    if (!a) return tau(std::move(then));
    return post(std::move(*a), std::move(then), std::move(otherwise));
  }
  static Thread seq(FocusedAction a, const Thread& next) {
    return post(std::move(a), next, next);
  }

  Kind kind() const { return kind_; }
  bool is_tau() const { return kind_ == Kind::kPost && !action_; }
  const std::optional<FocusedAction>& action() const { return action_; }
  const Thread& then() const { return *then_; }
  const Thread& otherwise() const { return *else_; }
  const std::string& name() const { return name_; }

  bool operator==(const Thread& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
      case Kind::kStop:
      case Kind::kDeadlock:
        return true;
      case Kind::kRef:
        return name_ == o.name_;
      case Kind::kPost:
        return action_ == o.action_ && *then_ == *o.then_ &&
               *else_ == *o.else_;
    }
    return false;
  }

 private:
  explicit Thread(Kind k) : kind_(k) {}

  Kind kind_;
  std::optional<FocusedAction> action_;
  std::shared_ptr<const Thread> then_;
  std::shared_ptr<const Thread> else_;
  std::string name_;
};

/// A finite guarded recursive specification with a distinguished entry.
class ThreadSpec {
 public:
  ThreadSpec() = default;
  ThreadSpec(std::map<std::string, Thread> bodies, std::string main)
      : bodies_(std::move(bodies)), main_(std::move(main)) {
    validate();
  }

  // A spec with a single anonymous body.
  static ThreadSpec of(Thread t) { return ThreadSpec({{"main", std::move(t)}}, "main"); }

  const std::string& main_name() const { return main_; }
  Thread entry() const { return Thread::ref(main_); }
  const std::map<std::string, Thread>& bodies() const { return bodies_; }

  const Thread& body(const std::string& name) const {
    auto it = bodies_.find(name);
    if (it == bodies_.end())
      throw SpecError("undefined thread name '" + name + "'");
    return it->second;
  }

  // Follows a reference to its (guarded, hence non-reference) body.
  const Thread& unfold(const Thread& t) const {
    return t.kind() == Thread::Kind::kRef ? body(t.name()) : t;
  }

 private:
  void validate() const {
    if (!bodies_.count(main_)) throw SpecError("entry '" + main_ + "' is not defined");
    for (const auto& [name, t] : bodies_) {
      if (t.kind() == Thread::Kind::kRef)
        throw SpecError("body of '" + name + "' is not guarded");
      check_refs(t);
    }
  }

  void check_refs(const Thread& t) const {
    if (t.kind() == Thread::Kind::kRef) {
      if (!bodies_.count(t.name()))
        throw SpecError("undefined thread name '" + t.name() + "'");
      return;
    }
    if (t.kind() != Thread::Kind::kPost) return;
    check_refs(t.then());
    if (!t.is_tau()) check_refs(t.otherwise());
  }

  std::map<std::string, Thread> bodies_;
  std::string main_;
};

// Text form of a thread unfolded to the given depth; "..." marks the cut.
inline std::string format_thread(const Thread& t, const ThreadSpec* spec = nullptr,
                                 std::size_t depth = 8) {
  switch (t.kind()) {
    case Thread::Kind::kStop:
      return "S";
    case Thread::Kind::kDeadlock:
      return "D";
    case Thread::Kind::kRef:
      if (!spec || depth == 0) return t.name();
      return format_thread(spec->body(t.name()), spec, depth);
    case Thread::Kind::kPost:
      if (depth == 0) return "...";
      if (t.is_tau()) return "tau.(" + format_thread(t.then(), spec, depth - 1) + ")";
      return t.action()->text() + " ? (" + format_thread(t.then(), spec, depth - 1) +
             ") : (" + format_thread(t.otherwise(), spec, depth - 1) + ")";
  }
  return {};
}

// Structural equality of the two unfoldings cut at the given depth.
inline bool bounded_equal(const Thread& a, const ThreadSpec& sa, const Thread& b,
                          const ThreadSpec& sb, std::size_t depth) {
  const Thread& x = sa.unfold(a);
  const Thread& y = sb.unfold(b);
  if (x.kind() != y.kind()) return false;
  if (x.kind() != Thread::Kind::kPost) return true;
  if (x.action() != y.action()) return false;
  if (depth == 0) return true;
  if (!bounded_equal(x.then(), sa, y.then(), sb, depth - 1)) return false;
  return x.is_tau() ||
         bounded_equal(x.otherwise(), sa, y.otherwise(), sb, depth - 1);
}

namespace detail {

inline Thread use_rec(const Thread& t, const ThreadSpec& spec,
                      const std::string& focus, const Service& h,
                      std::size_t& budget) {
  if (budget == 0) throw BudgetExhausted("use: unfolding budget exhausted");
  --budget;
  const Thread& x = spec.unfold(t);
  switch (x.kind()) {
    case Thread::Kind::kStop:
    case Thread::Kind::kDeadlock:
      return x;
    case Thread::Kind::kRef:
      break;
    case Thread::Kind::kPost: {
      if (x.is_tau()) return Thread::tau(use_rec(x.then(), spec, focus, h, budget));
      const FocusedAction& a = *x.action();
      if (a.focus != focus)
        return Thread::post(a, use_rec(x.then(), spec, focus, h, budget),
                            use_rec(x.otherwise(), spec, focus, h, budget));
      switch (h.reply(a.method)) {
        case ServiceReply::kTrue:
          return Thread::tau(use_rec(x.then(), spec, focus, h.derive(a.method), budget));
        case ServiceReply::kFalse:
          return Thread::tau(
              use_rec(x.otherwise(), spec, focus, h.derive(a.method), budget));
        case ServiceReply::kBlocked:
          return Thread::deadlock();
      }
    }
  }
  throw SpecError("use: unguarded reference");
}

}  // namespace detail

/// t /_f H: the thread that remains once every f-action has been answered
/// by H. The result is fully unfolded, so recursion that never leaves
/// f-free parts runs out of budget.
inline Thread use(const Thread& t, const ThreadSpec& spec,
                  const std::string& focus, const Service& h,
                  std::size_t budget = 4096) {
  return detail::use_rec(t, spec, focus, h, budget);
}

enum class Terminal { kStop, kDeadlock, kBudgetExhausted };

inline std::string_view terminal_name(Terminal t) {
  switch (t) {
    case Terminal::kStop:
      return "Stop";
    case Terminal::kDeadlock:
      return "Deadlock";
    case Terminal::kBudgetExhausted:
      return "BudgetExhausted";
  }
  return "?";
}

struct TraceStep {
  std::string action;  // "tau" or focus.method
  std::string focus;   // empty for tau
  std::optional<ServiceReply> reply;
  std::string state;   // rendering of the addressed service after the step
};

using ServiceMap = std::map<std::string, Service>;

struct ExecTrace {
  std::vector<std::pair<std::string, std::string>> initial;  // focus, render
  std::vector<TraceStep> steps;
  Terminal terminal = Terminal::kStop;
  ServiceMap services;
};

struct StepResult {
  Thread next;
  std::optional<TraceStep> step;
  std::optional<Terminal> terminal;
};

/// Performs one action or tau of t against the services, which are updated
/// in place.
inline StepResult step_thread(const Thread& t, const ThreadSpec& spec,
                              ServiceMap& services) {
  const Thread& x = spec.unfold(t);
  switch (x.kind()) {
    case Thread::Kind::kStop:
      return {x, std::nullopt, Terminal::kStop};
    case Thread::Kind::kDeadlock:
      return {x, std::nullopt, Terminal::kDeadlock};
    case Thread::Kind::kRef:
      throw SpecError("unguarded reference '" + x.name() + "'");
    case Thread::Kind::kPost:
      break;
  }
  if (x.is_tau()) return {x.then(), TraceStep{"tau", "", std::nullopt, ""}, std::nullopt};
  const FocusedAction& a = *x.action();
  auto it = services.find(a.focus);
  if (it == services.end())
    throw UnknownFocus("no service for focus '" + a.focus + "'");
  const ServiceReply r = it->second.reply(a.method);
  it->second = it->second.derive(a.method);
  TraceStep st{a.text(), a.focus, r, it->second.render()};
  switch (r) {
    case ServiceReply::kTrue:
      return {x.then(), st, std::nullopt};
    case ServiceReply::kFalse:
      return {x.otherwise(), st, std::nullopt};
    case ServiceReply::kBlocked:
      break;
  }
  return {Thread::deadlock(), st, std::nullopt};
}

/// Executes the entry thread to completion or until `budget` steps have been
/// taken.
inline ExecTrace run(const ThreadSpec& spec, ServiceMap services,
                     std::size_t budget) {
  ExecTrace tr;
  for (const auto& [f, s] : services) tr.initial.emplace_back(f, s.render());
  Thread cur = spec.entry();
  while (true) {
    if (tr.steps.size() >= budget) {
      // Out of steps; still report a terminal the thread has already reached.
      const Thread& x = spec.unfold(cur);
      if (x.kind() == Thread::Kind::kStop)
        tr.terminal = Terminal::kStop;
      else if (x.kind() == Thread::Kind::kDeadlock)
        tr.terminal = Terminal::kDeadlock;
      else
        tr.terminal = Terminal::kBudgetExhausted;
      break;
    }
    StepResult r = step_thread(cur, spec, services);
    if (r.terminal) {
      tr.terminal = *r.terminal;
      break;
    }
    tr.steps.push_back(std::move(*r.step));
    cur = std::move(r.next);
  }
  tr.services = std::move(services);
  return tr;
}

enum class OutputMode { kTrace, kFinal, kMachine };

inline std::optional<OutputMode> find_output_mode(std::string_view name) {
  if (name == "trace") return OutputMode::kTrace;
  if (name == "final") return OutputMode::kFinal;
  if (name == "machine") return OutputMode::kMachine;
  return std::nullopt;
}

inline std::string format_trace(const ExecTrace& tr, OutputMode mode) {
  std::string out;
  auto reply = [](const TraceStep& s) {
    return std::string(1, s.reply ? service_reply_char(*s.reply) : '-');
  };
  auto terminal = [&](std::string_view sep) {
    return std::string(sep == "=" ? "terminal=" : "terminal ") +
           std::string(terminal_name(tr.terminal)) + " steps=" +
           std::to_string(tr.steps.size()) + "\n";
  };
  switch (mode) {
    case OutputMode::kTrace: {
      out += "[0] init";
      for (const auto& [f, r] : tr.initial) out += " " + f + ": " + r;
      out += "\n";
      for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const TraceStep& s = tr.steps[i];
        out += "[" + std::to_string(i + 1) + "] " + s.action;
        if (s.reply) out += " " + reply(s) + " " + s.focus + ": " + s.state;
        out += "\n";
      }
      out += terminal(" ");
      break;
    }
    case OutputMode::kFinal:
      for (const auto& [f, s] : tr.services) out += f + ": " + s.render() + "\n";
      out += terminal(" ");
      break;
    case OutputMode::kMachine:
      for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const TraceStep& s = tr.steps[i];
        out += "step=" + std::to_string(i + 1) + " action=" + s.action +
               " reply=" + reply(s) + " state=" + (s.reply ? s.state : "-") + "\n";
      }
      out += terminal("=");
      break;
  }
  return out;
}

}  // namespace dld
