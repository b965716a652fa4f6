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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dld/check/suites.hpp"
#include "dld/dld.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dld::ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A value that names an existing file is read from it; anything else is
// taken as inline text.
std::string file_or_text(const std::string& v) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(v, ec)) return read_file(v);
  return v;
}

dld::RunConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  return dld::parse_config(read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Data linkage algebra and dynamics"};
  app.require_subcommand(1);

  std::string config_path;
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value run configuration file");
  };

  // normalize
  auto* normalize_cmd = app.add_subcommand("normalize", "Print the basic form of a linkage term");
  std::string term_text;
  normalize_cmd->add_option("term", term_text, "term, e.g. '({s:#0} + {s:#1}) <| {s:#2}'")->required();
  add_config(normalize_cmd);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Perform actions on a state, one line per action");
  std::string state_arg = "0";
  std::string actions_text;
  bool show_fired = false;
  bool strict = false;
  eval_cmd->add_option("--state", state_arg, "state file or inline linkage text");
  eval_cmd->add_option("--actions", actions_text, "actions separated by ';'")->required();
  eval_cmd->add_flag("--fired", show_fired, "also print the rule rows that decided");
  eval_cmd->add_flag("--strict-multiset", strict, "match rule patterns as multisets");
  add_config(eval_cmd);

  // run
  auto* run_cmd = app.add_subcommand("run", "Execute a thread script against the DLD service");
  std::string spec_path, init_arg = "0", service_name, output_name;
  std::size_t max_steps = 0;
  run_cmd->add_option("--spec", spec_path, "thread script file")->required();
  run_cmd->add_option("--init", init_arg, "initial state file or inline linkage text");
  run_cmd->add_option("--service", service_name, "plain, dldr or afgc")
      ->check(CLI::IsMember({"plain", "dldr", "afgc"}));
  run_cmd->add_option("--max-steps", max_steps, "step budget");
  run_cmd->add_option("--output", output_name, "trace, final or machine")
      ->check(CLI::IsMember({"trace", "final", "machine"}));
  add_config(run_cmd);

  // check
  auto* check_cmd = app.add_subcommand("check", "Run a property or differential suite");
  std::string suite;
  dld::check::SuiteOptions sopt;
  sopt.max_failure_lines = std::numeric_limits<std::size_t>::max();
  bool tight = false;
  bool quiet = false;
  check_cmd->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(dld::check::suite_names()));
  check_cmd->add_option("--spots", sopt.spots, "number of spots");
  check_cmd->add_option("--fields", sopt.fields, "number of fields");
  check_cmd->add_option("--atoms", sopt.atoms, "number of atoms");
  check_cmd->add_option("--modulus", sopt.modulus, "prime modulus");
  check_cmd->add_option("--cases", sopt.cases, "random cases per property");
  check_cmd->add_option("--seed", sopt.seed, "random seed");
  check_cmd->add_option("--shuffles", sopt.shuffles, "shuffled re-evaluations (thm2)");
  check_cmd->add_option("--depth", sopt.term_depth, "maximum term depth (thm1)");
  check_cmd->add_option("--oracle-samples", sopt.oracle_samples, "terms checked against axiom chaining (thm1)");
  check_cmd->add_option("--unfold-depth", sopt.unfold_depth, "thread comparison depth (tsu)");
  check_cmd->add_option("--max-failures", sopt.max_failure_lines, "failure lines to print");
  check_cmd->add_flag("--tight", tight, "only tight states (thm3 default)");
  auto* nontight = check_cmd->add_flag("--include-nontight", sopt.include_nontight,
                                       "also check states with invisible atoms (thm3)");
  check_cmd->get_option("--tight")->excludes(nontight);
  check_cmd->add_flag("--literal-eqvaltst", sopt.set.literal_eqvaltst,
                      "set model: eqvaltst without the definedness conjunct");
  check_cmd->add_flag("--literal-rgc", sopt.set.literal_rgc,
                      "set model: rgc keeps reach and cycle members only");
  check_cmd->add_flag("--literal-sd", sopt.set.literal_sd,
                      "set model: leave field entries to disposed atoms");
  check_cmd->add_flag("--quiet", quiet, "print only the summary line");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize_cmd) {
      const dld::RunConfig cfg = load_config(config_path);
      const auto t = dld::parse_term(term_text, cfg.universe);
      std::cout << dld::canonical_text(dld::normalize(t), cfg.universe) << "\n";
      return 0;
    }
    if (*eval_cmd) {
      const dld::RunConfig cfg = load_config(config_path);
      const dld::Universe& u = cfg.universe;
      dld::DataLinkage l = dld::parse_linkage(file_or_text(state_arg), u);
      dld::EvalOptions eo;
      eo.strict_multiset = strict;
      for (const dld::Action& a : dld::parse_action_list(actions_text, u)) {
        const dld::StepOutcome out = dld::step_dldr(u, a, l, eo);
        std::cout << dld::format_action(a, u) << " " << dld::reply_char(out.reply)
                  << " " << dld::canonical_text(out.state, u) << "\n";
        if (show_fired)
          for (const auto& f : out.fired) std::cout << "  " << dld::format_fire(f, u) << "\n";
        l = out.state;
      }
      return 0;
    }
    if (*run_cmd) {
      dld::RunConfig cfg = load_config(config_path);
      if (!service_name.empty()) cfg.variant = *dld::find_variant(service_name);
      if (!output_name.empty()) cfg.output = *dld::find_output_mode(output_name);
      if (run_cmd->count("--max-steps")) cfg.max_steps = max_steps;
      auto u = std::make_shared<const dld::Universe>(cfg.universe);
      const dld::ThreadSpec spec = dld::parse_script(read_file(spec_path));
      const dld::DataLinkage init = dld::parse_linkage(file_or_text(init_arg), *u);
      dld::ServiceMap services;
      services.emplace("dld", dld::dlds(u, init, cfg.variant));
      const dld::ExecTrace tr = dld::run(spec, std::move(services), cfg.max_steps);
      std::cout << dld::format_trace(tr, cfg.output);
      switch (tr.terminal) {
        case dld::Terminal::kStop:
          return 0;
        case dld::Terminal::kDeadlock:
          return 2;
        case dld::Terminal::kBudgetExhausted:
          return 3;
      }
      return 1;
    }
    if (*check_cmd) {
      const auto rep = dld::check::run_suite(suite, sopt);
      if (!quiet)
        for (const auto& line : rep->failures) std::cout << line << "\n";
      std::cout << rep->summary() << "\n";
      return rep->ok() ? 0 : 1;
    }
  } catch (const dld::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
