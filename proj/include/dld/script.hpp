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
#include <string>
#include <string_view>
#include <vector>

#include "dld/text.hpp"
#include "dld/thread.hpp"

namespace dld {

namespace detail {

class ScriptParser {
 public:
  ScriptParser(std::string_view src, std::string default_focus)
      : ts_(tokenize(src, LexOptions{true})), focus_(std::move(default_focus)) {}

  ThreadSpec parse() {
    std::map<std::string, Thread> bodies;
    std::vector<std::string> order;
    while (!ts_.at_end()) {
      if (ts_.accept(";")) continue;
      const Token name = ts_.expect_ident("a declaration name");
      ts_.expect("=");
      if (bodies.count(name.text))
        throw ParseError("duplicate declaration '" + name.text + "'", name.offset);
      bodies.emplace(name.text, proc());
      order.push_back(name.text);
    }
    if (order.empty()) throw ParseError("empty thread script", 0);
    std::string entry = order.front();
    if (auto it = bodies.find("main"); it != bodies.end()) {
      entry = "main";
      // "main = X" only selects the entry.
      if (it->second.kind() == Thread::Kind::kRef) {
        entry = it->second.name();
        bodies.erase(it);
      }
    }
    return ThreadSpec(std::move(bodies), entry);
  }

 private:
  bool starts_action() const {
    const Token& t = ts_.peek();
    if (t.kind != Token::Kind::kIdent) return false;
    if (t.text == "fgc" || t.text == "rgc") return true;
    return ts_.peek(1).is("(") || ts_.peek(1).is(".");
  }

  FocusedAction action() {
    FocusedAction a;
    Token head = ts_.next();
    if (ts_.accept(".")) {
      a.focus = head.text;
      head = ts_.expect_ident("a method name");
    } else {
      a.focus = focus_;
    }
    a.method = head.text;
    if (ts_.accept("(")) {
      std::vector<std::string> args;
      if (!ts_.peek().is(")")) {
        do args.push_back(ts_.expect_ident("a parameter").text);
        while (ts_.accept(","));
      }
      ts_.expect(")");
      if (!args.empty()) {
        a.method += "(";
        for (std::size_t i = 0; i < args.size(); ++i)
          a.method += (i ? "," : "") + args[i];
        a.method += ")";
      }
    }
    return a;
  }

  Thread proc() {
    const Token& t = ts_.peek();
    if (ts_.accept("(")) {
      Thread inner = proc();
      ts_.expect(")");
      return inner;
    }
    if (t.kind != Token::Kind::kIdent) ts_.fail("expected a thread");
    if (t.text == "S" && !ts_.peek(1).is("(")) {
      ts_.next();
      return Thread::stop();
    }
    if (t.text == "D" && !ts_.peek(1).is("(")) {
      ts_.next();
      return Thread::deadlock();
    }
    if (t.text == "tau") {
      ts_.next();
      if (!ts_.accept(".")) ts_.expect(";");
      return Thread::tau(proc());
    }
    if (!starts_action()) return Thread::ref(ts_.next().text);
    FocusedAction a = action();
    if (ts_.accept("?")) {
      Thread then = proc();
      ts_.expect(":");
      Thread otherwise = proc();
      return Thread::post(std::move(a), std::move(then), std::move(otherwise));
    }
    // "a ; p" is a ? p : p; a declaration-ending ';' or none at all means a ; S.
    if (ts_.peek().is(";")) {
      const Token& after = ts_.peek(1);
      const bool ends = after.kind == Token::Kind::kEnd ||
                        (after.kind == Token::Kind::kIdent && ts_.peek(2).is("="));
      if (!ends) {
        ts_.next();
        return Thread::seq(std::move(a), proc());
      }
    }
    return Thread::seq(std::move(a), Thread::stop());
  }

  TokenStream ts_;
  std::string focus_;
};

}  // namespace detail

/// Reads a thread script. Actions without a focus prefix get default_focus.
inline ThreadSpec parse_script(std::string_view src,
                               const std::string& default_focus = "dld") {
  return detail::ScriptParser(src, default_focus).parse();
}

}  // namespace dld
