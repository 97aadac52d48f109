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

#include <gtest/gtest.h>

#include <cmath>

#include "random_objects.hpp"
#include "sft/circuit.hpp"
#include "sft/errors.hpp"
#include "sft/formula.hpp"
#include "sft/forward_compiler.hpp"

namespace sft {
namespace {

constexpr SemiringTag Q = SemiringTag::Rational;
const std::vector<std::string> kPermutationGates = {"not", "cnot", "swap", "toffoli", "fredkin"};
const std::vector<std::string> kAllGates = {"not", "cnot", "swap", "toffoli", "fredkin", "rot35"};

Matrix i2() { return identity(2, Q); }
Matrix gate(const char* name) { return builtin_gate(name, Q); }

Matrix basis(const std::string& bits) { return basis_state(bits, Q).amplitudes; }

// Formula value applied to every basis state agrees with the simulator.
void expect_matches_simulation(const Formula& f, const GateArray& array) {
  const Matrix m = evaluate(f);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << array.width); ++x) {
    const StateVector in = basis_state(testing::bit_string(x, array.width), array.tag);
    ASSERT_EQ(mat_mul(m, in.amplitudes), simulate(array, in).amplitudes) << testing::bit_string(x, array.width);
  }
}

TEST(IdentityPower, Examples) {
  EXPECT_EQ(evaluate(identity_power(0, Q)), identity(1, Q));
  EXPECT_EQ(evaluate(identity_power(3, Q)), identity(8, Q));
  EXPECT_EQ(formula_depth(identity_power(8, Q)), 3u);
}

TEST(LevelMatrixFormula, Examples) {
  EXPECT_EQ(evaluate(level_matrix_formula({make_gate("cnot", {1, 2}, Q)}, 3, Q)), kronecker(gate("cnot"), i2()));
  EXPECT_EQ(evaluate(level_matrix_formula({}, 2, Q)), kronecker(i2(), i2()));
  EXPECT_EQ(evaluate(level_matrix_formula({make_gate("toffoli", {2, 3, 4}, Q)}, 4, Q)),
            kronecker(i2(), gate("toffoli")));
  const Level two = {make_gate("not", {4}, Q), make_gate("swap", {1, 2}, Q)};
  EXPECT_EQ(evaluate(level_matrix_formula(two, 5, Q)),
            kronecker(kronecker(gate("swap"), i2()), kronecker(gate("not"), i2())));
  EXPECT_TRUE(is_sum_free(level_matrix_formula(two, 5, Q)));
}

TEST(LevelMatrixFormula, RejectsNonAdjacentGate) {
  EXPECT_THROW(level_matrix_formula({make_gate("cnot", {1, 3}, Q)}, 3, Q), InvalidArgumentError);
  EXPECT_THROW(level_matrix_formula({make_gate("cnot", {2, 1}, Q)}, 3, Q), InvalidArgumentError);
}

TEST(CycleFormula, Examples) {
  const Formula single = cycle_formula(1, 2, 2, false, Q);
  EXPECT_EQ(single.kind(), FormulaKind::Atom);
  EXPECT_EQ(single.matrix(), gate("swap"));
  const Formula ladder = cycle_formula(1, 4, 4, false, Q);
  EXPECT_EQ(evaluate(ladder),
            mat_mul(kronecker(identity(4, Q), gate("swap")),
                    mat_mul(kronecker(kronecker(i2(), gate("swap")), i2()), kronecker(gate("swap"), identity(4, Q)))));
  EXPECT_THROW(cycle_formula(2, 2, 3, false, Q), InvalidArgumentError);
  EXPECT_THROW(cycle_formula(3, 2, 3, true, Q), InvalidArgumentError);
  EXPECT_THROW(cycle_formula(1, 4, 3, false, Q), InvalidArgumentError);
}

TEST(CycleFormula, InverseProductIsIdentity) {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const Matrix p = evaluate(cycle_formula(j, k, n, false, Q));
        const Matrix bar = evaluate(cycle_formula(j, k, n, true, Q));
        EXPECT_TRUE(is_permutation_matrix(p));
        EXPECT_EQ(mat_mul(p, bar), identity(std::size_t{1} << n, Q));
        EXPECT_EQ(mat_mul(bar, p), identity(std::size_t{1} << n, Q));
      }
    }
  }
}

TEST(CycleFormula, ActsAsWireCycle) {
  for (int n = 2; n <= 5; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const Matrix p = evaluate(cycle_formula(j, k, n, false, Q));
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
          const std::string in = testing::bit_string(x, n);
          std::string out = in;
          // Bit on wire j moves to wire k; wires j+1..k shift down by one.
          for (int w = j; w < k; ++w) out[w - 1] = in[w];
          out[k - 1] = in[j - 1];
          EXPECT_EQ(mat_mul(p, basis(in)), basis(out)) << n << " " << j << " " << k << " " << in;
        }
      }
    }
  }
}

TEST(AdjacencyNormalize, AdjacentLevelIsIdentityPermutation) {
  const Level level = {make_gate("cnot", {2, 3}, Q), make_gate("not", {1}, Q)};
  const LevelPlan plan = adjacency_normalize(level, 3, Q);
  EXPECT_TRUE(plan.is_identity_permutation());
  EXPECT_EQ(evaluate(plan.formula()), level_operator(level, 3, Q));
}

TEST(AdjacencyNormalize, FarCnot) {
  const Level level = {make_gate("cnot", {1, 4}, Q)};
  const LevelPlan plan = adjacency_normalize(level, 4, Q);
  EXPECT_FALSE(plan.is_identity_permutation());
  ASSERT_EQ(plan.packed.size(), 1u);
  EXPECT_EQ(plan.packed[0].wires, (std::vector<int>{1, 2}));
  EXPECT_EQ(evaluate(plan.formula()), level_operator(level, 4, Q));
  expect_matches_simulation(plan.formula(), GateArray{Q, 4, {level}});
}

TEST(AdjacencyNormalize, InterleavedGates) {
  const Level level = {make_gate("cnot", {1, 3}, Q), make_gate("cnot", {2, 4}, Q)};
  const LevelPlan plan = adjacency_normalize(level, 4, Q);
  EXPECT_EQ(evaluate(plan.formula()), level_operator(level, 4, Q));
  expect_matches_simulation(plan.formula(), GateArray{Q, 4, {level}});
  EXPECT_EQ(mat_mul(evaluate(plan.p_sigma_inverse), evaluate(plan.p_sigma)), identity(16, Q));
}

TEST(AdjacencyNormalize, ReversedAndNonMonotoneWires) {
  const std::vector<Level> levels = {
      {make_gate("cnot", {2, 1}, Q)},
      {make_gate("toffoli", {3, 1, 2}, Q)},
      {make_gate("fredkin", {4, 2, 1}, Q), make_gate("rot35", {3}, Q)},
      {make_gate("swap", {5, 1}, Q), make_gate("toffoli", {4, 2, 3}, Q)},
  };
  for (const Level& level : levels) {
    const LevelPlan plan = adjacency_normalize(level, 5, Q);
    EXPECT_EQ(evaluate(plan.formula()), level_operator(level, 5, Q));
    EXPECT_TRUE(is_sum_free(plan.formula()));
  }
}

TEST(CompileArray, Examples) {
  const GateArray cnot{Q, 2, {{make_gate("cnot", {1, 2}, Q)}}};
  EXPECT_EQ(evaluate(compile_array_to_formula(cnot)), gate("cnot"));
  const GateArray empty{Q, 3, {{}, {}, {}}};
  EXPECT_EQ(evaluate(compile_array_to_formula(empty)), identity(8, Q));
  EXPECT_EQ(evaluate(compile_array_to_formula(GateArray{Q, 2, {}})), identity(4, Q));
  const GateArray bad{Q, 2, {{make_gate("cnot", {1, 2}, Q), make_gate("not", {2}, Q)}}};
  EXPECT_THROW(compile_array_to_formula(bad), ValidationError);
}

TEST(CompileArray, LevelOrder) {
  const GateArray a{Q, 1, {{make_gate("rot35", {1}, Q)}, {make_gate("not", {1}, Q)}}};
  EXPECT_EQ(evaluate(compile_array_to_formula(a)), mat_mul(gate("not"), gate("rot35")));
}

TEST(CompileArray, RandomPermutationArraysRoundTrip) {
  testing::Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const GateArray a = testing::random_array(rng, 4, 6, kPermutationGates, Q);
    expect_matches_simulation(compile_array_to_formula(a), a);
  }
}

TEST(CompileArray, RandomArraysAllTags) {
  testing::Rng rng(32);
  for (SemiringTag tag : {SemiringTag::Boolean, SemiringTag::NonnegRational, Q, SemiringTag::GaussianRational}) {
    const bool signed_ok = tag == Q || tag == SemiringTag::GaussianRational;
    for (int i = 0; i < 5; ++i) {
      const GateArray a = testing::random_array(rng, 5, 4, signed_ok ? kAllGates : kPermutationGates, tag);
      const Formula f = compile_array_to_formula(a);
      EXPECT_TRUE(is_sum_free(f));
      expect_matches_simulation(f, a);
    }
  }
}

TEST(CompileArray, DepthIsLogarithmic) {
  testing::Rng rng(33);
  for (int levels : {1, 2, 7, 16}) {
    const GateArray a = testing::random_array(rng, 6, levels, kPermutationGates, Q);
    const Formula f = compile_array_to_formula(a);
    std::uint64_t per_level = 0;
    for (std::size_t l = 0; l < a.levels.size(); ++l) {
      per_level = std::max(per_level, formula_depth(adjacency_normalize(a.levels[l], 6, Q, l).formula()));
    }
    const auto log_levels = static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(levels))));
    EXPECT_LE(formula_depth(f), log_levels + per_level);
  }
}

TEST(CompileArray, ComposedWithInputIsOsl) {
  testing::Rng rng(34);
  for (int i = 0; i < 10; ++i) {
    const GateArray a = testing::random_array(rng, 4, 3, kAllGates, Q);
    const Formula f = Formula::product(compile_array_to_formula(a), input_vector_formula("0110", Q));
    EXPECT_TRUE(check_osl(f).is_osl());
    EXPECT_EQ(evaluate(f), simulate(a, basis_state("0110", Q)).amplitudes);
  }
}

TEST(InputVector, Examples) {
  EXPECT_EQ(evaluate(input_vector_formula("000", Q)), basis_vector(8, 1, Q));
  EXPECT_EQ(evaluate(input_vector_formula("10", Q)), basis_vector(4, 3, Q));
  const Formula f = input_vector_formula("101", Q);
  EXPECT_EQ(f.kind(), FormulaKind::Tensor);
  EXPECT_EQ(f.lhs().kind(), FormulaKind::Atom);
  EXPECT_EQ(f.rhs().kind(), FormulaKind::Tensor);
  EXPECT_THROW(input_vector_formula("", Q), InvalidArgumentError);
  EXPECT_THROW(input_vector_formula("1a", Q), InvalidArgumentError);
}

TEST(InputVector, PerWireVectors) {
  const Matrix rot = Matrix(Q, 2, 1, {Scalar::real(Q, mpq_class(3, 5)), Scalar::real(Q, mpq_class(4, 5))});
  EXPECT_EQ(evaluate(input_vector_formula({rot, basis_vector(2, 2, Q)})), kronecker(rot, basis_vector(2, 2, Q)));
  EXPECT_THROW(input_vector_formula({Matrix(Q, 2, 1)}), InvalidArgumentError);
  EXPECT_THROW(input_vector_formula({basis_vector(4, 1, Q)}), InvalidArgumentError);
}

TEST(InputVector, RandomBits) {
  const Matrix v = evaluate(random_bits_input_formula(1, 2, Q));
  ASSERT_EQ(v.rows(), 8u);
  const Scalar half = Scalar::real(Q, mpq_class(1, 2));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(v.at(i, 0), i < 4 ? half : Scalar::zero(Q));
  EXPECT_TRUE(is_unit_column(v));
  EXPECT_EQ(evaluate(random_bits_input_formula(2, 0, Q)), basis_vector(4, 1, Q));
  EXPECT_THROW(random_bits_input_formula(1, 3, Q), InvalidArgumentError);
  EXPECT_THROW(random_bits_input_formula(0, 2, SemiringTag::Boolean), InvalidArgumentError);
  EXPECT_THROW(random_bits_input_formula(0, 0, Q), InvalidArgumentError);
}

TEST(StateFormula, BasisAndAmplitudes) {
  const Formula b = state_formula(basis_state("011", Q));
  EXPECT_EQ(b.kind(), FormulaKind::Tensor);
  EXPECT_EQ(evaluate(b), basis_vector(8, 4, Q));
  const Matrix amps(Q, 2, 1, {Scalar::real(Q, mpq_class(3, 5)), Scalar::real(Q, mpq_class(-4, 5))});
  const Formula a = state_formula(state_from_amplitudes(amps));
  EXPECT_EQ(a.kind(), FormulaKind::Atom);
  EXPECT_EQ(evaluate(a), amps);
}

}  // namespace
}  // namespace sft
