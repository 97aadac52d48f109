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

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "sft/circuit.hpp"
#include "sft/formula.hpp"

namespace sft {

/// Least power of two >= n (n >= 1).
std::uint64_t pow2_ceil(std::uint64_t n);
bool is_pow2(std::uint64_t n) noexcept;
/// log2 of a power of two.
int exact_log2(std::uint64_t n);

/// blockdiag(A, I) for square A, zero extension for a column A, to order
/// pow2_ceil. Throws InvalidArgumentError for any other shape.
Matrix pad_atom(const Matrix& a);

/// F† as a formula: atoms conjugate-transposed, products reversed.
Formula conj_transpose_formula(const Formula& f);

/// P_2^{size} for a power of two size >= 2, built from I_2 and P_2^4 atoms by
///   P_2^{2^{l+2}} = (P_2^{2^{l+1}} ⊗ I_2) · (I_{2^l} ⊗ P_2^4).
Formula stride_two_formula(std::uint64_t size, SemiringTag tag);

/// A permutation formula G of order mu*nu (mu, nu powers of two, m <= mu,
/// n <= nu) with G (e_p^mu ⊗ e_q^nu) = e_{p n + q}^{mn} for p < m, q < n.
/// It is S^j · (P_2^{mu nu})^k with j = log2 mu, k = log2 nu and
/// S = (U ⊗ I_{mu/2}) · (I_nu ⊗ P_2^mu), U = blockdiag(P_2^{2n}, I_{2(nu-n)})
/// given as one explicit atom. Returns the identity formula when the gather
/// is trivial (m = 1 or n = nu).
Formula row_gather_formula(std::uint64_t m, std::uint64_t n, std::uint64_t mu, std::uint64_t nu,
                           SemiringTag tag);
bool row_gather_is_identity(std::uint64_t m, std::uint64_t n, std::uint64_t nu) noexcept;

/// The correction pair for an ⊗-node with factors of original orders `h`, `k`
/// and padded orders `h_padded`, `k_padded`:
///   Q · (Π(H) ⊗ Π(K)) · Q' has val(H) ⊗ val(K) as its leading block.
/// Q gathers rows, Q' is the conjugate transpose of the column gather.
struct KronFix {
  Formula q;
  Formula q_prime;
  bool q_identity = false;
  bool q_prime_identity = false;
};
KronFix kron_fix_permutations(Order h, Order k, Order h_padded, Order k_padded, SemiringTag tag);

/// Π(F). Every subformula of `padded` has power-of-two orders and
/// evaluate(padded) = [evaluate(original); 0].
struct PaddedFormula {
  Formula original;
  Formula padded;
  std::uint64_t block_length = 0;
};
PaddedFormula pad_formula(const Formula& f);

/// A unit column with common denominator d rewritten over the denominator
/// pi(d) = pow2_ceil(d): entries a_i/pi(d), zeros, then b_1/pi(d) .. b_p/pi(d)
/// at the end, where pi(d)^2 = sum a_i^2 + sum b_j^2. The length is the least
/// 4^j above n + 3 ceil(log2 d). Columns whose d is already a power of two are
/// returned unchanged with scale 1.
struct DenominatorPad {
  Matrix original;
  Matrix padded;
  mpq_class scale;  // d / pi(d)
  std::vector<mpz_class> terms;
  mpz_class denominator;
  mpz_class padded_denominator;
};
DenominatorPad pad_unit_vector_denominator(const Matrix& v);

/// Writes r as a sum of at most `max_terms` positive squares, fewest terms
/// first, larger squares preferred. Empty for r = 0. Throws
/// InvalidArgumentError when no decomposition within the bound exists.
std::vector<mpz_class> sum_of_squares(const mpz_class& r, int max_terms);

/// pad_formula with every column input replaced by its denominator pad.
/// The leading block of evaluate(padded) is scale * evaluate(original).
struct NormalizedFormula {
  Formula original;
  Formula padded;
  std::uint64_t block_length = 0;
  mpq_class scale;  // product of the per-column scales
  std::vector<DenominatorPad> pads;
};
NormalizedFormula normalize_denominators(const Formula& f);

/// A gate array and input whose output state is the padded value.
struct CompiledFormula {
  GateArray array;
  StateVector input;
  std::uint64_t block_length = 0;
};

/// Pads F and reads the result as a circuit: square inputs become gates on
/// the wires flowing into them, column inputs become amplitude blocks on
/// fresh wires, ⊗ runs its factors side by side and · runs them in sequence.
/// simulate(array, input) = evaluate(pad_formula(F).padded).
CompiledFormula formula_to_array(const Formula& f);
/// The same reading for an already padded, sum-free column formula.
CompiledFormula array_from_padded(const Formula& padded, std::uint64_t block_length);

}  // namespace sft
