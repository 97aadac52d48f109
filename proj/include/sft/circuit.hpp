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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sft/linalg.hpp"

namespace sft {

/// A gate on an ordered list of distinct wires (1-based). The first listed
/// wire is the most significant bit of the gate's local index, so a gate of
/// w wires carries a 2^w x 2^w matrix.
struct Gate {
  std::vector<int> wires;
  Matrix matrix;
  /// Builtin name used when rendering; empty for inline matrices.
  std::string name;
};

using Level = std::vector<Gate>;

/// Leveled gate array of width n. Levels are applied in order.
struct GateArray {
  SemiringTag tag = SemiringTag::Rational;
  int width = 0;
  std::vector<Level> levels;
};

/// Amplitudes over 2^width basis states. Bit string b_1..b_n is stored at
/// 0-based index sum b_i 2^(n-i): wire 1 is the most significant bit.
struct StateVector {
  SemiringTag tag = SemiringTag::Rational;
  int width = 0;
  Matrix amplitudes;
};

/// not, cnot, swap, toffoli, fredkin, rot35 ([[3/5 4/5][-4/5 3/5]]).
Matrix builtin_gate(std::string_view name, SemiringTag tag);
bool is_builtin_gate_name(std::string_view name);
Gate make_gate(std::string_view name, std::vector<int> wires, SemiringTag tag);

struct ArrayReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ArrayReport validate_array(const GateArray& array);
/// Throws ValidationError with every violation unless the array is valid.
void require_valid_array(const GateArray& array);

/// |x> for a bit string such as "110".
StateVector basis_state(std::string_view bits, SemiringTag tag);
StateVector state_from_amplitudes(Matrix amplitudes);

/// Applies a single gate in place. Non-adjacent and unordered wire lists are
/// handled by index arithmetic.
void apply_gate(const Gate& gate, int width, Matrix& amplitudes);

StateVector simulate(const GateArray& array, const StateVector& input);
/// simulate restricted to levels [first, last).
StateVector simulate_levels(const GateArray& array, const StateVector& input, std::size_t first,
                            std::size_t last);

/// The 2^n x 2^n operator of one level, built column by column from apply_gate.
Matrix level_operator(const Level& level, int width, SemiringTag tag);

/// Probability mass on the k lexicographically last basis states.
Scalar acceptance_probability(const StateVector& state, std::uint64_t k);

/// A gate array together with its declared input (the text file format).
struct ArrayProgram {
  GateArray array;
  std::optional<StateVector> input;
};

/// Line-oriented format:
///   width <n>
///   level
///   gate <name|atom> w1 w2 ...
///   input basis <bits> | input amps <atom>
/// Blank lines and lines starting with '#' are ignored.
ArrayProgram parse_array(std::string_view text, SemiringTag tag);
std::string render_array(const ArrayProgram& program);

}  // namespace sft
