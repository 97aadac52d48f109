// Copyright 2026 The sft-tensor Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "sft/backward_compiler.hpp"
#include "sft/circuit.hpp"
#include "sft/decision.hpp"
#include "sft/errors.hpp"
#include "sft/formula.hpp"
#include "sft/forward_compiler.hpp"

namespace sft::cli {

namespace {

struct Config {
  std::string semiring = "q";
  std::string mode = "strict";
  std::string variant = "standard";
  std::string alpha = "1/2";
  std::optional<std::uint64_t> k;
  std::uint64_t max_entries = kDefaultEntryCap;
  bool require_osl = false;
  std::string file;
};

// Errors in flags or file access, before any input is interpreted.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  SemiringTag tag;
  ParseMode mode;
  SftVariant variant;
  mpq_class alpha;
  std::uint64_t cap;
};

Options resolve(const Config& config) {
  try {
    Options o{parse_tag(config.semiring), config.mode == "paper" ? ParseMode::Paper : ParseMode::Strict,
              parse_variant(config.variant), parse_scalar(config.alpha, SemiringTag::Rational).re(),
              config.max_entries};
    if (o.alpha < mpq_class(1, 2) || o.alpha >= 1) throw UsageError("--alpha must satisfy 1/2 <= alpha < 1");
    if (config.k && *config.k == 0) throw UsageError("--k must be positive");
    if (o.cap == 0) throw UsageError("--max-entries must be positive");
    return o;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Formula load_formula(const Config& config, const Options& o) {
  return parse_formula(read_input(config.file), o.tag, o.mode);
}

int cmd_validate(const Config& config, const Options& o, std::ostream& out) {
  const Formula f = load_formula(config, o);
  const OslReport osl = check_osl(f);
  out << "order: " << to_string(*f.order()) << "\n";
  out << "size: " << formula_size(f) << "\n";
  out << "diameter: " << formula_diameter(f) << "\n";
  out << "depth: " << formula_depth(f) << "\n";
  out << "sum-free: " << yes_no(is_sum_free(f)) << "\n";
  out << "osl: " << yes_no(osl.is_osl()) << "\n";
  for (const auto& path : osl.offending) out << "offending: " << path << "\n";
  return config.require_osl && !osl.is_osl() ? kExitValidation : kExitOk;
}

int cmd_eval(const Config& config, const Options& o, std::ostream& out) {
  const Formula f = load_formula(config, o);
  out << render_matrix(evaluate(f, EvalOptions{o.cap, o.mode})) << "\n";
  return kExitOk;
}

int cmd_sft(const Config& config, const Options& o, std::ostream& out) {
  const SftInstance instance{load_formula(config, o), config.k.value_or(1), o.alpha, o.variant};
  const SftVerdict verdict = decide_sft(instance, o.cap);
  out << "value: " << verdict.value.to_string() << "\n";
  out << "accept: " << yes_no(verdict.accept) << "\n";
  if (verdict.in_promise_band) out << "in-promise-band: " << yes_no(*verdict.in_promise_band) << "\n";
  return verdict.accept ? kExitOk : kExitReject;
}

int cmd_compile_circuit(const Config& config, const Options& o, std::ostream& out) {
  const ArrayProgram program = parse_array(read_input(config.file), o.tag);
  Formula f = compile_array_to_formula(program.array);
  if (program.input) f = Formula::product(f, state_formula(*program.input));
  out << render_formula(f) << "\n";
  return kExitOk;
}

int cmd_compile_formula(const Config& config, const Options& o, std::ostream& out) {
  const CompiledFormula compiled = formula_to_array(load_formula(config, o));
  out << render_array(ArrayProgram{compiled.array, compiled.input});
  return kExitOk;
}

int cmd_simulate(const Config& config, const Options& o, std::ostream& out) {
  const ArrayProgram program = parse_array(read_input(config.file), o.tag);
  require_valid_array(program.array);
  const int width = program.array.width;
  const StateVector input = program.input ? *program.input : basis_state(std::string(width, '0'), o.tag);
  check_entry_cap(std::uint64_t{1} << width, 1, o.cap, "state vector");
  const StateVector result = simulate(program.array, input);
  const std::uint64_t k = config.k.value_or(std::uint64_t{1} << (width - 1));
  out << "state: " << render_matrix(result.amplitudes) << "\n";
  out << "probability: " << acceptance_probability(result, k).to_string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Tensor formulas over semirings: evaluation, SFT decisions and circuit compilers",
               "sft-tensor"};
  app.require_subcommand(1, 1);
  app.add_option("--semiring", config.semiring, "bool, qplus, q or qi")
      ->check(CLI::IsMember({"bool", "qplus", "q", "qi"}));
  app.add_option("--mode", config.mode, "strict or paper")->check(CLI::IsMember({"strict", "paper"}));
  app.add_option("--max-entries", config.max_entries, "entry cap for intermediate matrices");
  app.add_option("--k", config.k, "partial trace width");
  app.add_option("--alpha", config.alpha, "threshold, a rational in [1/2, 1)");
  app.add_option("--variant", config.variant, "standard, promise or nonzero")
      ->check(CLI::IsMember({"standard", "promise", "nonzero"}));

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Config&, const Options&, std::ostream&);
  };
  const Command commands[] = {
      {"validate", "report order, size, diameter and OSL status of a formula", cmd_validate},
      {"eval", "evaluate a formula", cmd_eval},
      {"sft", "decide an SFT instance", cmd_sft},
      {"compile-circuit", "compile a gate array to a formula", cmd_compile_circuit},
      {"compile-formula", "compile an OSL formula to a gate array", cmd_compile_formula},
      {"simulate", "simulate a gate array", cmd_simulate},
  };
  std::vector<CLI::App*> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("file", config.file, "input file, or - for stdin")->required();
    if (std::string_view(c.name) == "validate") {
      sub->add_flag("--require-osl", config.require_osl, "fail unless the formula is OSL");
    }
    subs.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::Success&) {
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Options options = resolve(config);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) return commands[i].run(config, options, out);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace sft::cli
