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
#include <optional>
#include <string_view>

#include "sft/formula.hpp"

namespace sft {

enum class SftVariant : std::uint8_t { Standard, Promise, Nonzero };

std::string_view variant_name(SftVariant variant);
SftVariant parse_variant(std::string_view name);

/// F must be an OSL formula of order N x 1; 1/2 <= alpha < 1.
struct SftInstance {
  Formula formula;
  std::uint64_t k = 1;
  mpq_class alpha = mpq_class(1, 2);
  SftVariant variant = SftVariant::Standard;
};

struct SftVerdict {
  Scalar value;
  bool accept = false;
  /// Promise variant only: whether value lies in [1 - alpha, alpha].
  std::optional<bool> in_promise_band;
};

/// Sum of |v_i|^2 over the last k of the first `block_length` entries of v.
Scalar block_partial_trace(const Matrix& v, std::uint64_t block_length, std::uint64_t k);

/// The accept rule applied to an already computed value.
SftVerdict judge(const Scalar& value, const mpq_class& alpha, SftVariant variant);

/// value = partial_trace_outer(evaluate(F), k), compared exactly.
SftVerdict decide_sft(const SftInstance& instance, std::uint64_t entry_cap = kDefaultEntryCap);

/// Boolean instances only: compiles F to a reversible array and follows each
/// basis state of the input through it instead of evaluating the formula.
SftVerdict boolean_fastpath(const SftInstance& instance);

}  // namespace sft
