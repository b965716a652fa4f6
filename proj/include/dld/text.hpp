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

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "dld/action.hpp"
#include "dld/error.hpp"
#include "dld/linkage.hpp"
#include "dld/term.hpp"

namespace dld {

struct Token {
  enum class Kind { kIdent, kAtom, kNat, kPunct, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  std::size_t offset = 0;

  bool is(std::string_view p) const { return kind == Kind::kPunct && text == p; }
};

struct LexOptions {
  // Treat '#' as the start of a line comment instead of an atom literal.
  bool hash_comments = false;
};

inline std::vector<Token> tokenize(std::string_view src,
                                   const LexOptions& opt = {}) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (opt.hash_comments && c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && ident_char(src[i])) ++i;
      out.push_back({Token::Kind::kIdent, std::string(src.substr(start, i - start)), start});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Kind::kNat, std::string(src.substr(start, i - start)), start});
    } else if (c == '#') {
      ++i;
      while (i < src.size() && ident_char(src[i])) ++i;
      if (i == start + 1) throw ParseError("expected atom number after '#'", start);
      out.push_back({Token::Kind::kAtom, std::string(src.substr(start, i - start)), start});
    } else if (src.substr(i, 2) == "<|") {
      i += 2;
      out.push_back({Token::Kind::kPunct, "<|", start});
    } else if (std::string_view(",:.=?(){}+;").find(c) != std::string_view::npos) {
      ++i;
      out.push_back({Token::Kind::kPunct, std::string(1, c), start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Token::Kind::kEnd, "", src.size()});
  return out;
}

/// Recursive-descent reader over a token vector.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::kEnd; }
  bool accept(std::string_view p) {
    if (!peek().is(p)) return false;
    next();
    return true;
  }
  const Token& expect(std::string_view p) {
    if (!peek().is(p)) fail("expected '" + std::string(p) + "'");
    return next();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Token::Kind::kIdent) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + (t.kind == Token::Kind::kEnd ? " at end of input"
                                                        : ", found '" + t.text + "'"),
                     t.offset);
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

namespace detail {

inline SpotId spot_named(const Universe& u, const Token& t) {
  if (auto s = u.find_spot(t.text)) return *s;
  throw UndeclaredName("undeclared spot '" + t.text + "' at offset " +
                       std::to_string(t.offset));
}

inline FieldId field_named(const Universe& u, const Token& t) {
  if (auto f = u.find_field(t.text)) return *f;
  throw UndeclaredName("undeclared field '" + t.text + "' at offset " +
                       std::to_string(t.offset));
}

inline AtomId atom_named(const Universe& u, const Token& t) {
  if (auto a = u.find_atom(t.text)) return *a;
  throw UndeclaredName("undeclared atom '" + t.text + "' at offset " +
                       std::to_string(t.offset));
}

inline bool is_atom_token(const Token& t) {
  return t.kind == Token::Kind::kAtom || t.kind == Token::Kind::kIdent;
}

inline AtomicLink parse_item(TokenStream& ts, const Universe& u) {
  const Token& head = ts.peek();
  if (!is_atom_token(head)) ts.fail("expected a link");
  const Token first = ts.next();
  if (ts.accept(":")) {
    if (first.kind != Token::Kind::kIdent) ts.fail("spot names are identifiers");
    const SpotId s = spot_named(u, first);
    if (!is_atom_token(ts.peek())) ts.fail("expected an atom");
    return SpotLink{s, atom_named(u, ts.next())};
  }
  const AtomId a = atom_named(u, first);
  if (ts.accept(".")) {
    const FieldId f = field_named(u, ts.expect_ident("a field name"));
    ts.expect(":");
    if (ts.accept("?")) return PartialFieldLink{a, f};
    if (!is_atom_token(ts.peek())) ts.fail("expected an atom or '?'");
    return FieldLink{a, f, atom_named(u, ts.next())};
  }
  if (ts.accept("=")) {
    if (ts.peek().kind != Token::Kind::kNat) ts.fail("expected a natural number");
    const std::string digits = ts.next().text;
    // Reduce mod p digit by digit so arbitrarily long literals are fine.
    std::uint64_t r = 0;
    for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % u.modulus();
    return ValueAssociation{a, MeadowValue{static_cast<std::uint32_t>(r)}};
  }
  ts.fail("expected ':', '.' or '='");
}

// "0", "{}", "{items}" or a bare item list.
inline DataLinkage parse_linkage_body(TokenStream& ts, const Universe& u) {
  std::vector<AtomicLink> links;
  if (ts.accept("{")) {
    if (!ts.accept("}")) {
      do links.push_back(parse_item(ts, u));
      while (ts.accept(","));
      ts.expect("}");
    }
    return DataLinkage(std::move(links));
  }
  if (ts.peek().kind == Token::Kind::kNat && ts.peek().text == "0") {
    ts.next();
    return {};
  }
  do links.push_back(parse_item(ts, u));
  while (ts.accept(","));
  return DataLinkage(std::move(links));
}

inline LinkageTerm parse_term_or(TokenStream& ts, const Universe& u);

inline LinkageTerm parse_term_primary(TokenStream& ts, const Universe& u) {
  if (ts.accept("(")) {
    LinkageTerm t = parse_term_or(ts, u);
    ts.expect(")");
    return t;
  }
  return LinkageTerm::of(parse_linkage_body(ts, u));
}

inline LinkageTerm parse_term_plus(TokenStream& ts, const Universe& u) {
  LinkageTerm t = parse_term_primary(ts, u);
  while (ts.accept("+")) t = LinkageTerm::combine(std::move(t), parse_term_primary(ts, u));
  return t;
}

inline LinkageTerm parse_term_or(TokenStream& ts, const Universe& u) {
  LinkageTerm t = parse_term_plus(ts, u);
  while (ts.accept("<|")) t = LinkageTerm::override(std::move(t), parse_term_plus(ts, u));
  return t;
}

inline Action parse_action_tokens(TokenStream& ts, const Universe& u) {
  const Token name = ts.expect_ident("an action name");
  const auto op = find_op(name.text);
  if (!op) throw ParseError("unknown action '" + name.text + "'", name.offset);
  const std::string_view params = info(*op).params;
  std::vector<SpotId> spots;
  FieldId f{};
  if (!params.empty()) {
    ts.expect("(");
    for (std::size_t k = 0; k < params.size(); ++k) {
      if (k) ts.expect(",");
      const Token& arg = ts.expect_ident(params[k] == 's' ? "a spot" : "a field");
      if (params[k] == 's')
        spots.push_back(spot_named(u, arg));
      else
        f = field_named(u, arg);
    }
    ts.expect(")");
  } else if (ts.accept("(")) {
    ts.expect(")");
  }
  return make_action(*op, std::move(spots), f);
}

}  // namespace detail

inline DataLinkage parse_linkage(std::string_view text, const Universe& u) {
  TokenStream ts(tokenize(text));
  DataLinkage l = detail::parse_linkage_body(ts, u);
  ts.expect_end();
  return l;
}

inline LinkageTerm parse_term(std::string_view text, const Universe& u) {
  TokenStream ts(tokenize(text));
  LinkageTerm t = detail::parse_term_or(ts, u);
  ts.expect_end();
  return t;
}

inline Action parse_action(std::string_view text, const Universe& u) {
  TokenStream ts(tokenize(text));
  Action a = detail::parse_action_tokens(ts, u);
  ts.expect_end();
  return a;
}

// "a1; a2; ..." with empty entries ignored.
inline std::vector<Action> parse_action_list(std::string_view text,
                                             const Universe& u) {
  TokenStream ts(tokenize(text));
  std::vector<Action> out;
  while (!ts.at_end()) {
    if (ts.accept(";")) continue;
    out.push_back(detail::parse_action_tokens(ts, u));
    if (!ts.at_end()) ts.expect(";");
  }
  return out;
}

}  // namespace dld
