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

#include "sft/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "sft/errors.hpp"
#include "sft/formula.hpp"

namespace sft {

namespace {

Matrix permutation_gate(std::size_t n, const std::vector<std::size_t>& image, SemiringTag tag) {
  // Column j maps to row image[j].
  Matrix m(tag, n, n);
  for (std::size_t j = 0; j < n; ++j) m.at(image[j], j) = Scalar::one(tag);
  return m;
}

}  // namespace

bool is_builtin_gate_name(std::string_view name) {
  return name == "not" || name == "cnot" || name == "swap" || name == "toffoli" || name == "fredkin" ||
         name == "rot35";
}

Matrix builtin_gate(std::string_view name, SemiringTag tag) {
  if (name == "not") return permutation_gate(2, {1, 0}, tag);
  if (name == "cnot") return permutation_gate(4, {0, 1, 3, 2}, tag);
  if (name == "swap") return permutation_gate(4, {0, 2, 1, 3}, tag);
  if (name == "toffoli") return permutation_gate(8, {0, 1, 2, 3, 4, 5, 7, 6}, tag);
  if (name == "fredkin") return permutation_gate(8, {0, 1, 2, 3, 4, 6, 5, 7}, tag);
  if (name == "rot35") {
    if (tag == SemiringTag::Boolean || tag == SemiringTag::NonnegRational) {
      throw InvalidArgumentError("rot35 has a negative entry and does not exist over " +
                                 std::string(tag_name(tag)));
    }
    auto s = [tag](long p, long q) {
      return tag == SemiringTag::GaussianRational ? Scalar::gaussian(mpq_class(p, q), 0)
                                                  : Scalar::real(tag, mpq_class(p, q));
    };
    return Matrix(tag, 2, 2, {s(3, 5), s(4, 5), s(-4, 5), s(3, 5)});
  }
  throw InvalidArgumentError("unknown gate '" + std::string(name) + "'");
}

Gate make_gate(std::string_view name, std::vector<int> wires, SemiringTag tag) {
  return Gate{std::move(wires), builtin_gate(name, tag), std::string(name)};
}

ArrayReport validate_array(const GateArray& array) {
  ArrayReport report;
  if (array.width < 1) report.violations.push_back("width must be positive");
  if (array.width > 30) report.violations.push_back("width " + std::to_string(array.width) + " exceeds 30 wires");
  for (std::size_t l = 0; l < array.levels.size(); ++l) {
    std::set<int> used;
    const std::string where = "level " + std::to_string(l + 1);
    for (std::size_t g = 0; g < array.levels[l].size(); ++g) {
      const Gate& gate = array.levels[l][g];
      const std::string at = where + ", gate " + std::to_string(g + 1);
      if (gate.wires.empty()) report.violations.push_back(at + ": gate acts on no wires");
      std::set<int> own;
      for (int w : gate.wires) {
        if (w < 1 || w > array.width) {
          report.violations.push_back(at + ": wire " + std::to_string(w) + " outside 1.." +
                                      std::to_string(array.width));
        }
        if (!own.insert(w).second) report.violations.push_back(at + ": wire " + std::to_string(w) + " repeated");
        if (!used.insert(w).second) {
          report.violations.push_back(at + ": wire " + std::to_string(w) + " already used in this level");
        }
      }
      if (gate.matrix.tag() != array.tag) {
        report.violations.push_back(at + ": matrix is over " + std::string(tag_name(gate.matrix.tag())) +
                                    ", array is over " + std::string(tag_name(array.tag)));
        continue;
      }
      const std::size_t expected = gate.wires.size() < 31 ? std::size_t{1} << gate.wires.size() : 0;
      if (gate.matrix.rows() != expected || gate.matrix.cols() != expected) {
        report.violations.push_back(at + ": matrix of order " + std::to_string(gate.matrix.rows()) + "x" +
                                    std::to_string(gate.matrix.cols()) + " on " +
                                    std::to_string(gate.wires.size()) + " wires (order must be " +
                                    std::to_string(expected) + ")");
        continue;
      }
      if (!is_orthogonal(gate.matrix)) report.violations.push_back(at + ": matrix is not orthogonal");
    }
  }
  return report;
}

void require_valid_array(const GateArray& array) {
  ArrayReport report = validate_array(array);
  if (report.ok()) return;
  std::string msg = "invalid gate array";
  for (const auto& v : report.violations) msg += "; " + v;
  throw ValidationError(msg);
}

StateVector basis_state(std::string_view bits, SemiringTag tag) {
  if (bits.empty() || bits.size() > 30) throw InvalidArgumentError("basis state needs 1..30 bits");
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgumentError("basis state '" + std::string(bits) + "' is not a bit string");
    index = index * 2 + (c == '1');
  }
  const int width = static_cast<int>(bits.size());
  return StateVector{tag, width, basis_vector(std::size_t{1} << width, index + 1, tag)};
}

StateVector state_from_amplitudes(Matrix amplitudes) {
  if (!amplitudes.is_column()) throw DimensionError("state amplitudes must form a column");
  const std::size_t n = amplitudes.rows();
  if (n < 2 || (n & (n - 1)) != 0) {
    throw DimensionError("state of " + std::to_string(n) + " amplitudes is not over 2^n basis states, n >= 1");
  }
  if (!is_unit_column(amplitudes)) throw ValidationError("state amplitudes do not form a unit vector");
  int width = 0;
  while ((std::size_t{1} << width) < n) ++width;
  const SemiringTag tag = amplitudes.tag();
  return StateVector{tag, width, std::move(amplitudes)};
}

void apply_gate(const Gate& gate, int width, Matrix& amplitudes) {
  const std::size_t g = gate.wires.size();
  const std::size_t local = std::size_t{1} << g;
  std::vector<std::size_t> offset(local, 0);
  std::size_t mask = 0;
  for (std::size_t x = 0; x < local; ++x) {
    for (std::size_t t = 0; t < g; ++t) {
      if ((x >> (g - 1 - t)) & 1) offset[x] |= std::size_t{1} << (width - gate.wires[t]);
    }
  }
  for (int w : gate.wires) mask |= std::size_t{1} << (width - w);

  const Matrix& m = gate.matrix;
  const SemiringTag tag = amplitudes.tag();
  std::vector<Scalar> in(local);
  std::vector<Scalar> out(local);
  const std::size_t states = amplitudes.rows();
  for (std::size_t base = 0; base < states; ++base) {
    if (base & mask) continue;
    bool any = false;
    for (std::size_t x = 0; x < local; ++x) {
      in[x] = amplitudes.at(base | offset[x], 0);
      any = any || !in[x].is_zero();
    }
    if (!any) continue;
    for (std::size_t y = 0; y < local; ++y) out[y] = Scalar::zero(tag);
    for (std::size_t x = 0; x < local; ++x) {
      if (in[x].is_zero()) continue;
      for (std::size_t y = 0; y < local; ++y) {
        const Scalar& myx = m.at(y, x);
        if (!myx.is_zero()) accumulate_product(out[y], myx, in[x]);
      }
    }
    for (std::size_t y = 0; y < local; ++y) amplitudes.at(base | offset[y], 0) = std::move(out[y]);
  }
}

StateVector simulate_levels(const GateArray& array, const StateVector& input, std::size_t first,
                            std::size_t last) {
  require_valid_array(array);
  if (input.width != array.width) {
    throw DimensionError("input state has width " + std::to_string(input.width) + ", array has width " +
                         std::to_string(array.width));
  }
  require_same_tag(array.tag, input.tag, "simulate");
  StateVector state = input;
  last = std::min(last, array.levels.size());
  for (std::size_t l = first; l < last; ++l) {
    for (const Gate& gate : array.levels[l]) apply_gate(gate, array.width, state.amplitudes);
  }
  return state;
}

StateVector simulate(const GateArray& array, const StateVector& input) {
  return simulate_levels(array, input, 0, array.levels.size());
}

Matrix level_operator(const Level& level, int width, SemiringTag tag) {
  const std::size_t dim = std::size_t{1} << width;
  Matrix op(tag, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Matrix column = basis_vector(dim, j + 1, tag);
    for (const Gate& gate : level) apply_gate(gate, width, column);
    for (std::size_t i = 0; i < dim; ++i) op.at(i, j) = column.at(i, 0);
  }
  return op;
}

Scalar acceptance_probability(const StateVector& state, std::uint64_t k) {
  return partial_trace_outer(state.amplitudes, k);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view next_word(std::string_view& s) {
  s = trim(s);
  std::size_t end = 0;
  while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
  std::string_view word = s.substr(0, end);
  s.remove_prefix(end);
  return word;
}

// Consumes a bracketed atom from the front of `s`.
std::string_view take_atom(std::string_view& s, std::size_t line) {
  s = trim(s);
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']' && --depth == 0) {
      std::string_view atom = s.substr(0, i + 1);
      s.remove_prefix(i + 1);
      return atom;
    }
  }
  throw ParseError("unterminated matrix", line);
}

int parse_int(std::string_view word, std::size_t line) {
  if (word.empty() || word.size() > 9 ||
      !std::all_of(word.begin(), word.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("expected a positive integer, got '" + std::string(word) + "'", line);
  }
  return std::stoi(std::string(word));
}

}  // namespace

ArrayProgram parse_array(std::string_view text, SemiringTag tag) {
  ArrayProgram program;
  program.array.tag = tag;
  bool have_width = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::string_view rest = line;
    std::string_view keyword = next_word(rest);
    try {
      if (keyword == "width") {
        if (have_width) throw ParseError("duplicate width declaration", line_no);
        program.array.width = parse_int(next_word(rest), line_no);
        have_width = true;
      } else if (keyword == "level") {
        if (!have_width) throw ParseError("level before width declaration", line_no);
        program.array.levels.emplace_back();
      } else if (keyword == "gate") {
        if (program.array.levels.empty()) throw ParseError("gate outside of a level", line_no);
        Gate gate;
        rest = trim(rest);
        if (!rest.empty() && rest.front() == '[') {
          gate.matrix = parse_matrix(take_atom(rest, line_no), tag);
        } else {
          std::string_view name = next_word(rest);
          if (!is_builtin_gate_name(name)) throw ParseError("unknown gate '" + std::string(name) + "'", line_no);
          gate.matrix = builtin_gate(name, tag);
          gate.name = std::string(name);
        }
        while (!trim(rest).empty()) gate.wires.push_back(parse_int(next_word(rest), line_no));
        if (gate.wires.empty()) throw ParseError("gate without wires", line_no);
        program.array.levels.back().push_back(std::move(gate));
      } else if (keyword == "input") {
        if (!have_width) throw ParseError("input before width declaration", line_no);
        if (program.input) throw ParseError("duplicate input declaration", line_no);
        std::string_view kind = next_word(rest);
        if (kind == "basis") {
          std::string_view bits = next_word(rest);
          if (bits.size() != static_cast<std::size_t>(program.array.width)) {
            throw ParseError("basis input must have " + std::to_string(program.array.width) + " bits", line_no);
          }
          program.input = basis_state(bits, tag);
        } else if (kind == "amps") {
          program.input = state_from_amplitudes(parse_matrix(take_atom(rest, line_no), tag));
          if (program.input->width != program.array.width) {
            throw ParseError("amplitude input does not match width", line_no);
          }
        } else {
          throw ParseError("input must be 'basis' or 'amps'", line_no);
        }
        if (!trim(rest).empty()) throw ParseError("trailing text after input", line_no);
      } else {
        throw ParseError("unknown directive '" + std::string(keyword) + "'", line_no);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_width) throw ParseError("missing width declaration", line_no);
  return program;
}

std::string render_array(const ArrayProgram& program) {
  std::ostringstream out;
  out << "width " << program.array.width << "\n";
  for (const Level& level : program.array.levels) {
    out << "level\n";
    for (const Gate& gate : level) {
      out << "gate " << (gate.name.empty() ? render_matrix(gate.matrix) : gate.name);
      for (int w : gate.wires) out << ' ' << w;
      out << "\n";
    }
  }
  if (program.input) {
    const Matrix& amps = program.input->amplitudes;
    std::optional<std::size_t> basis;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < amps.rows(); ++i) {
      if (amps.at(i, 0).is_zero()) continue;
      ++nonzero;
      if (amps.at(i, 0).is_one()) basis = i;
    }
    if (nonzero == 1 && basis) {
      std::string bits;
      for (int w = program.input->width - 1; w >= 0; --w) bits += ((*basis >> w) & 1) ? '1' : '0';
      out << "input basis " << bits << "\n";
    } else {
      out << "input amps " << render_matrix(amps) << "\n";
    }
  }
  return out.str();
}

}  // namespace sft
