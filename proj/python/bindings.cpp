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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "sft/backward_compiler.hpp"
#include "sft/circuit.hpp"
#include "sft/decision.hpp"
#include "sft/errors.hpp"
#include "sft/formula.hpp"
#include "sft/forward_compiler.hpp"

namespace py = pybind11;
using namespace sft;

namespace {

using Rows = std::vector<std::vector<std::string>>;

Rows to_rows(const Matrix& m) {
  Rows rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j).to_string());
  }
  return rows;
}

ParseMode to_mode(const std::string& mode) {
  if (mode == "strict") return ParseMode::Strict;
  if (mode == "paper") return ParseMode::Paper;
  throw InvalidArgumentError("unknown mode '" + mode + "'");
}

Formula load(const std::string& text, const std::string& semiring, const std::string& mode) {
  return parse_formula(text, parse_tag(semiring), to_mode(mode));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tensor formulas over semirings, SFT decisions and circuit compilers";

  auto base = py::register_exception<Error>(m, "SftError");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<CapExceededError>(m, "CapExceededError", base);
  py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError", base);

  m.def(
      "render_formula",
      [](const std::string& text, const std::string& semiring, const std::string& mode) {
        return render_formula(load(text, semiring, mode));
      },
      py::arg("text"), py::arg("semiring") = "q", py::arg("mode") = "strict",
      "Parse and re-render a formula in canonical fully parenthesized form.");

  m.def(
      "evaluate",
      [](const std::string& text, const std::string& semiring, const std::string& mode,
         std::uint64_t max_entries) {
        return to_rows(evaluate(load(text, semiring, mode), EvalOptions{max_entries, to_mode(mode)}));
      },
      py::arg("text"), py::arg("semiring") = "q", py::arg("mode") = "strict",
      py::arg("max_entries") = kDefaultEntryCap, "Evaluate a formula; entries come back as exact tokens.");

  m.def(
      "validate",
      [](const std::string& text, const std::string& semiring, const std::string& mode) {
        const Formula f = load(text, semiring, mode);
        const OslReport osl = check_osl(f);
        py::dict report;
        report["order"] = py::make_tuple(f.order()->rows, f.order()->cols);
        report["size"] = formula_size(f);
        report["diameter"] = formula_diameter(f);
        report["depth"] = formula_depth(f);
        report["sum_free"] = is_sum_free(f);
        report["osl"] = osl.is_osl();
        report["offending"] = osl.offending;
        return report;
      },
      py::arg("text"), py::arg("semiring") = "q", py::arg("mode") = "strict");

  m.def(
      "decide_sft",
      [](const std::string& text, std::uint64_t k, const std::string& alpha, const std::string& variant,
         const std::string& semiring, std::uint64_t max_entries) {
        const SftInstance instance{load(text, semiring, "strict"), k,
                                   parse_scalar(alpha, SemiringTag::Rational).re(), parse_variant(variant)};
        const SftVerdict verdict = decide_sft(instance, max_entries);
        py::dict out;
        out["value"] = verdict.value.to_string();
        out["accept"] = verdict.accept;
        out["in_promise_band"] = verdict.in_promise_band ? py::cast(*verdict.in_promise_band) : py::none();
        return out;
      },
      py::arg("text"), py::arg("k") = 1, py::arg("alpha") = "1/2", py::arg("variant") = "standard",
      py::arg("semiring") = "q", py::arg("max_entries") = kDefaultEntryCap);

  m.def(
      "compile_circuit",
      [](const std::string& array_text, const std::string& semiring) {
        const ArrayProgram program = parse_array(array_text, parse_tag(semiring));
        Formula f = compile_array_to_formula(program.array);
        if (program.input) f = Formula::product(f, state_formula(*program.input));
        return render_formula(f);
      },
      py::arg("array_text"), py::arg("semiring") = "q", "Gate-array text to formula text.");

  m.def(
      "compile_formula",
      [](const std::string& text, const std::string& semiring) {
        const CompiledFormula compiled = formula_to_array(load(text, semiring, "strict"));
        return render_array(ArrayProgram{compiled.array, compiled.input});
      },
      py::arg("text"), py::arg("semiring") = "q", "OSL formula text to gate-array text.");

  m.def(
      "pad_formula",
      [](const std::string& text, const std::string& semiring) {
        return render_formula(pad_formula(load(text, semiring, "strict")).padded);
      },
      py::arg("text"), py::arg("semiring") = "q");

  m.def(
      "simulate",
      [](const std::string& array_text, const std::string& semiring, std::optional<std::uint64_t> k) {
        const ArrayProgram program = parse_array(array_text, parse_tag(semiring));
        const int width = program.array.width;
        const StateVector input =
            program.input ? *program.input : basis_state(std::string(width, '0'), program.array.tag);
        const StateVector result = simulate(program.array, input);
        py::dict out;
        out["state"] = to_rows(result.amplitudes);
        out["probability"] = acceptance_probability(result, k.value_or(std::uint64_t{1} << (width - 1))).to_string();
        return out;
      },
      py::arg("array_text"), py::arg("semiring") = "q", py::arg("k") = py::none());

  m.def(
      "stride_permutation",
      [](std::size_t mm, std::size_t n, const std::string& semiring) {
        return to_rows(stride_permutation(mm, n, parse_tag(semiring)));
      },
      py::arg("m"), py::arg("n"), py::arg("semiring") = "q", "The permutation P_n^{mn}.");

  m.def("pow2_ceil", &pow2_ceil, py::arg("n"));
}
