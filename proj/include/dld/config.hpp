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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dld/error.hpp"
#include "dld/service.hpp"
#include "dld/thread.hpp"
#include "dld/universe.hpp"

namespace dld {

struct RunConfig {
  Universe universe = Universe::demo();
  DldVariant variant = DldVariant::kPlain;
  std::size_t max_steps = 1000;
  OutputMode output = OutputMode::kTrace;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::optional<std::uint64_t> to_count(const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  try {
    return std::stoull(v);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

// A count n expands to prefix0..prefix{n-1}; anything else is a comma list.
inline std::vector<std::string> name_list(const std::string& v,
                                          std::string_view prefix) {
  std::vector<std::string> out;
  if (auto n = to_count(v)) {
    for (std::uint64_t i = 0; i < *n; ++i)
      out.push_back(std::string(prefix) + std::to_string(i));
    return out;
  }
  std::size_t start = 0;
  while (start <= v.size()) {
    const auto comma = v.find(',', start);
    const std::string item =
        trim(std::string_view(v).substr(start, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - start));
    if (item.empty()) throw ConfigError("empty name in list '" + v + "'");
    out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// key=value lines; blank lines and lines starting with '#' are ignored.
/// Keys: spots, fields, atoms (a count or a comma list of names), modulus,
/// max_steps, service (plain|dldr|afgc), output (trace|final|machine).
/// Unset universe keys fall back to the demo universe.
inline RunConfig parse_config(std::string_view text) {
  const Universe demo = Universe::demo();
  std::vector<std::string> spots, fields, atoms;
  for (SpotId s : demo.spots()) spots.push_back(demo.name(s));
  for (FieldId f : demo.fields()) fields.push_back(demo.name(f));
  for (AtomId a : demo.atoms()) atoms.push_back(demo.name(a));
  std::uint32_t modulus = demo.modulus();
  RunConfig cfg;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    const std::string line = detail::trim(text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = detail::trim(std::string_view(line).substr(0, eq));
    const std::string value = detail::trim(std::string_view(line).substr(eq + 1));
    auto count = [&](const char* what) {
      auto n = detail::to_count(value);
      if (!n)
        throw ConfigError("line " + std::to_string(line_no) + ": " + what +
                          " must be a natural number");
      return *n;
    };
    if (key == "spots") {
      spots = detail::name_list(value, "s");
    } else if (key == "fields") {
      fields = detail::name_list(value, "f");
    } else if (key == "atoms") {
      atoms = detail::name_list(value, "#");
    } else if (key == "modulus") {
      const auto p = count("modulus");
      if (p > 0xFFFFFFFFu) throw ConfigError("modulus too large");
      modulus = static_cast<std::uint32_t>(p);
    } else if (key == "max_steps") {
      cfg.max_steps = count("max_steps");
    } else if (key == "service") {
      auto v = find_variant(value);
      if (!v) throw ConfigError("unknown service variant '" + value + "'");
      cfg.variant = *v;
    } else if (key == "output") {
      auto m = find_output_mode(value);
      if (!m) throw ConfigError("unknown output mode '" + value + "'");
      cfg.output = *m;
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        key + "'");
    }
  }
  cfg.universe = Universe(spots, fields, atoms, modulus);
  return cfg;
}

}  // namespace dld
