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

#include "sft/forward_compiler.hpp"

#include <algorithm>
#include <numeric>

#include "sft/errors.hpp"

namespace sft {

namespace {

void append_identities(std::vector<Formula>& factors, int count, SemiringTag tag) {
  if (count <= 0) return;
  Formula i2 = Formula::atom(identity(2, tag));
  factors.insert(factors.end(), static_cast<std::size_t>(count), i2);
}

Formula right_chain(std::vector<Formula> parts) {
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Formula::tensor(parts[i], acc);
  return acc;
}

bool consecutive(const Gate& gate) {
  for (std::size_t t = 1; t < gate.wires.size(); ++t) {
    if (gate.wires[t] != gate.wires[t - 1] + 1) return false;
  }
  return true;
}

std::vector<const Gate*> sorted_by_first_wire(const Level& level) {
  std::vector<const Gate*> gates;
  for (const Gate& g : level) gates.push_back(&g);
  std::stable_sort(gates.begin(), gates.end(), [](const Gate* a, const Gate* b) {
    return *std::min_element(a->wires.begin(), a->wires.end()) <
           *std::min_element(b->wires.begin(), b->wires.end());
  });
  return gates;
}

}  // namespace

Formula identity_power(int count, SemiringTag tag) {
  if (count <= 0) return Formula::atom(identity(1, tag));
  std::vector<Formula> factors;
  append_identities(factors, count, tag);
  return balanced_tensor(factors);
}

Formula level_matrix_formula(const Level& level, int width, SemiringTag tag) {
  std::vector<Formula> factors;
  int next = 1;
  for (const Gate* gate : sorted_by_first_wire(level)) {
    if (!consecutive(*gate)) {
      throw InvalidArgumentError("level_matrix_formula: gate on non-adjacent wires; normalize the level first");
    }
    append_identities(factors, gate->wires.front() - next, tag);
    factors.push_back(Formula::atom(gate->matrix));
    next = gate->wires.back() + 1;
  }
  append_identities(factors, width - next + 1, tag);
  return balanced_tensor(factors);
}

Formula cycle_formula(int j, int k, int width, bool inverse, SemiringTag tag) {
  if (j < 1 || k > width || j >= k) {
    throw InvalidArgumentError("cycle_formula: need 1 <= j < k <= n, got j=" + std::to_string(j) +
                               " k=" + std::to_string(k) + " n=" + std::to_string(width));
  }
  const Formula swap = Formula::atom(builtin_gate("swap", tag));
  const int span = k - j;
  // T_{j,k} = prod_{i=1}^{k-j} (I^{k-j-i} ⊗ T ⊗ I^{i-1}); the barred form
  // mirrors the identity exponents.
  std::vector<Formula> swaps;
  for (int i = 1; i <= span; ++i) {
    const int before = inverse ? i - 1 : span - i;
    const int after = inverse ? span - i : i - 1;
    std::vector<Formula> parts;
    append_identities(parts, before, tag);
    parts.push_back(swap);
    append_identities(parts, after, tag);
    swaps.push_back(balanced_tensor(parts));
  }
  std::vector<Formula> parts;
  append_identities(parts, j - 1, tag);
  parts.push_back(balanced_product(swaps));
  append_identities(parts, width - k, tag);
  return balanced_tensor(parts);
}

Formula LevelPlan::formula() const {
  if (cycles.empty()) return packed_formula;
  return Formula::product(p_sigma_inverse, Formula::product(packed_formula, p_sigma));
}

LevelPlan adjacency_normalize(const Level& level, int width, SemiringTag tag, std::size_t level_index) {
  LevelPlan plan{level_index, {}, {}, identity_power(width, tag), identity_power(width, tag), identity_power(width, tag)};
  if (std::all_of(level.begin(), level.end(), consecutive)) {
    plan.packed = level;
    plan.packed_formula = level_matrix_formula(level, width, tag);
    return plan;
  }

  // position[w] is the current position of the bit that started on wire w.
  std::vector<int> position(width + 1);
  std::vector<int> occupant(width + 1);
  std::iota(position.begin(), position.end(), 0);
  std::iota(occupant.begin(), occupant.end(), 0);
  int target = 1;
  for (const Gate* gate : sorted_by_first_wire(level)) {
    Gate packed{{}, gate->matrix, gate->name};
    for (int w : gate->wires) {
      const int from = position[w];
      if (from != target) {
        plan.cycles.emplace_back(target, from);
        for (int p = from; p > target; --p) {
          occupant[p] = occupant[p - 1];
          position[occupant[p]] = p;
        }
        occupant[target] = w;
        position[w] = target;
      }
      packed.wires.push_back(target);
      ++target;
    }
    plan.packed.push_back(std::move(packed));
  }

  std::vector<Formula> forward;
  std::vector<Formula> backward;
  for (auto it = plan.cycles.rbegin(); it != plan.cycles.rend(); ++it) {
    forward.push_back(cycle_formula(it->first, it->second, width, true, tag));
  }
  for (const auto& [j, k] : plan.cycles) backward.push_back(cycle_formula(j, k, width, false, tag));
  plan.p_sigma = balanced_product(forward);
  plan.p_sigma_inverse = balanced_product(backward);
  plan.packed_formula = level_matrix_formula(plan.packed, width, tag);
  return plan;
}

Formula compile_array_to_formula(const GateArray& array) {
  require_valid_array(array);
  if (array.levels.empty()) return identity_power(array.width, array.tag);
  std::vector<Formula> factors;
  for (std::size_t i = array.levels.size(); i-- > 0;) {
    factors.push_back(adjacency_normalize(array.levels[i], array.width, array.tag, i).formula());
  }
  return balanced_product(factors);
}

Formula input_vector_formula(std::string_view bits, SemiringTag tag) {
  if (bits.empty()) throw InvalidArgumentError("input_vector_formula: empty bit string");
  std::vector<Formula> parts;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgumentError("input_vector_formula: '" + std::string(bits) + "' is not a bit string");
    parts.push_back(Formula::atom(basis_vector(2, c == '0' ? 1 : 2, tag)));
  }
  return right_chain(std::move(parts));
}

Formula input_vector_formula(const std::vector<Matrix>& wire_vectors) {
  if (wire_vectors.empty()) throw InvalidArgumentError("input_vector_formula: no wires");
  std::vector<Formula> parts;
  for (const Matrix& v : wire_vectors) {
    if (v.rows() != 2 || !v.is_column() || !is_unit_column(v)) {
      throw InvalidArgumentError("input_vector_formula: per-wire input " + render_matrix(v) +
                                 " is not a unit 2-vector");
    }
    parts.push_back(Formula::atom(v));
  }
  return right_chain(std::move(parts));
}

Formula random_bits_input_formula(int constant_bits, int random_bits, SemiringTag tag) {
  if (constant_bits < 0 || random_bits < 0 || constant_bits + random_bits == 0) {
    throw InvalidArgumentError("random_bits_input_formula: need at least one bit");
  }
  if (random_bits % 2 != 0) {
    throw InvalidArgumentError("random_bits_input_formula: random bits are encoded pairwise, t must be even");
  }
  if (random_bits > 0 && tag == SemiringTag::Boolean) {
    throw InvalidArgumentError("random_bits_input_formula: 1/2 amplitudes do not exist over bool");
  }
  std::vector<Formula> parts;
  for (int i = 0; i < constant_bits; ++i) parts.push_back(Formula::atom(basis_vector(2, 1, tag)));
  if (random_bits > 0) {
    const Scalar half = tag == SemiringTag::GaussianRational ? Scalar::gaussian(mpq_class(1, 2), 0)
                                                             : Scalar::real(tag, mpq_class(1, 2));
    const Formula pair = Formula::atom(Matrix(tag, 4, 1, {half, half, half, half}));
    for (int i = 0; i < random_bits / 2; ++i) parts.push_back(pair);
  }
  return right_chain(std::move(parts));
}

Formula state_formula(const StateVector& state) {
  const Matrix& amps = state.amplitudes;
  std::size_t nonzero = 0;
  std::size_t index = 0;
  for (std::size_t i = 0; i < amps.rows(); ++i) {
    if (amps.at(i, 0).is_zero()) continue;
    ++nonzero;
    index = i;
  }
  if (nonzero == 1 && amps.at(index, 0).is_one()) {
    std::string bits;
    for (int w = state.width - 1; w >= 0; --w) bits += ((index >> w) & 1) ? '1' : '0';
    return input_vector_formula(bits, state.tag);
  }
  return Formula::atom(amps);
}

}  // namespace sft
