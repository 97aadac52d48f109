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

#include <string_view>
#include <utility>
#include <vector>

#include "sft/circuit.hpp"
#include "sft/formula.hpp"

namespace sft {

/// (I_2)^{⊗count} as a balanced tensor of I_2 atoms; [[1]] when count is 0.
Formula identity_power(int count, SemiringTag tag);

/// M(C_i) for a level whose gates each act on consecutive increasing wires:
/// I_2^{⊗ j_1-1} ⊗ H_1 ⊗ I_2^{⊗ j_2-k_1-1} ⊗ ... ⊗ H_l ⊗ I_2^{⊗ n-k_l},
/// tensored as a balanced tree. Throws InvalidArgumentError if some gate is
/// not on consecutive wires.
Formula level_matrix_formula(const Level& level, int width, SemiringTag tag);

/// Wire-cycle permutations built from swap (T) and I_2 atoms only, 1 <= j < k <= n.
///   inverse = false: P_{j,k}, moves the bit on wire j to wire k; wires
///                    j+1..k each move up one position.
///   inverse = true:  P̄_{j,k}, moves the bit on wire k to wire j; wires
///                    j..k-1 each move down one position.
Formula cycle_formula(int j, int k, int width, bool inverse, SemiringTag tag);

/// Case (ii) machinery for one level. Applying the cycles (P̄_{j,k} for each
/// (j,k) in order) gathers every gate onto consecutive wires, gates packed
/// from wire 1 in order of their smallest wire, each gate's wires in its own
/// listed order. Untouched wires keep their relative order after the gates.
struct LevelPlan {
  std::size_t level_index = 0;
  Level packed;                               // D_i
  std::vector<std::pair<int, int>> cycles;    // applied first to last
  Formula p_sigma;                            // P_σ
  Formula p_sigma_inverse;                    // P_{σ^{-1}}
  Formula packed_formula;                     // M(D_i)

  bool is_identity_permutation() const noexcept { return cycles.empty(); }
  /// P_{σ^{-1}} · M(D_i) · P_σ, or M(D_i) when σ is the identity.
  Formula formula() const;
};

LevelPlan adjacency_normalize(const Level& level, int width, SemiringTag tag, std::size_t level_index = 0);

/// F(C) = M(C_m) ··· M(C_1), parenthesized as a balanced tree. For every
/// basis input x, val(F(C) · d_x) = simulate(C, x).
Formula compile_array_to_formula(const GateArray& array);

/// d_x = χ_1 ⊗ (χ_2 ⊗ (... ⊗ χ_n)), χ_i = e_2^1 for '0' and e_2^2 for '1'.
Formula input_vector_formula(std::string_view bits, SemiringTag tag);
/// Right-associated tensor chain of per-wire unit 2-vectors.
Formula input_vector_formula(const std::vector<Matrix>& wire_vectors);
/// (e_2^1)^{⊗s} ⊗ [1/2 1/2 1/2 1/2]^T^{⊗ t/2}: s constant-zero bits then t
/// uniformly random bits, taken pairwise so every amplitude stays rational.
/// t must be even; tag must be qplus, q or qi.
Formula random_bits_input_formula(int constant_bits, int random_bits, SemiringTag tag);
/// A state vector as a formula: its bit-string form when it is a basis
/// state, the amplitude atom otherwise.
Formula state_formula(const StateVector& state);

}  // namespace sft
