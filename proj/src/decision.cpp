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

#include "sft/decision.hpp"

#include <string>
#include <vector>

#include "sft/backward_compiler.hpp"
#include "sft/errors.hpp"

namespace sft {

std::string_view variant_name(SftVariant variant) {
  switch (variant) {
    case SftVariant::Standard:
      return "standard";
    case SftVariant::Promise:
      return "promise";
    case SftVariant::Nonzero:
      return "nonzero";
  }
  return "standard";
}

SftVariant parse_variant(std::string_view name) {
  if (name == "standard") return SftVariant::Standard;
  if (name == "promise") return SftVariant::Promise;
  if (name == "nonzero") return SftVariant::Nonzero;
  throw InvalidArgumentError("unknown SFT variant '" + std::string(name) + "'");
}

namespace {

void check_instance(const SftInstance& instance) {
  require_osl(instance.formula);
  if (instance.k == 0) throw InvalidArgumentError("sft: k must be positive");
  if (instance.alpha < mpq_class(1, 2) || instance.alpha >= 1) {
    throw InvalidArgumentError("sft: alpha must satisfy 1/2 <= alpha < 1, got " + instance.alpha.get_str());
  }
}

}  // namespace

Scalar block_partial_trace(const Matrix& v, std::uint64_t block_length, std::uint64_t k) {
  if (!v.is_column()) throw DimensionError("block_partial_trace: expected a column vector");
  if (block_length > v.rows()) throw DimensionError("block_partial_trace: block longer than the vector");
  const std::uint64_t first = k >= block_length ? 0 : block_length - k;
  Scalar total = Scalar::zero(v.tag());
  for (std::uint64_t i = first; i < block_length; ++i) total = total + norm_square(v.at(i, 0));
  return total;
}

SftVerdict judge(const Scalar& value, const mpq_class& alpha, SftVariant variant) {
  if (!value.is_real()) throw InvalidArgumentError("sft: partial trace is not real");
  SftVerdict verdict{value, false, std::nullopt};
  if (value.tag() == SemiringTag::Boolean) {
    verdict.accept = value.is_one();
  } else if (variant == SftVariant::Nonzero) {
    verdict.accept = !value.is_zero();
  } else {
    verdict.accept = value.re() > alpha;
  }
  if (variant == SftVariant::Promise) {
    verdict.in_promise_band = value.re() >= 1 - alpha && value.re() <= alpha;
  }
  return verdict;
}

SftVerdict decide_sft(const SftInstance& instance, std::uint64_t entry_cap) {
  check_instance(instance);
  const Matrix v = evaluate(instance.formula, EvalOptions{entry_cap, ParseMode::Strict});
  return judge(partial_trace_outer(v, instance.k), instance.alpha, instance.variant);
}

SftVerdict boolean_fastpath(const SftInstance& instance) {
  check_instance(instance);
  if (instance.formula.tag() != SemiringTag::Boolean) {
    throw InvalidArgumentError("boolean_fastpath: the formula must be over bool");
  }
  const CompiledFormula compiled = formula_to_array(instance.formula);
  const std::uint64_t n = compiled.block_length;
  const std::uint64_t first = instance.k >= n ? 0 : n - instance.k;
  const int width = compiled.array.width;

  // Every gate is a permutation; store where each local column is sent.
  struct Step {
    std::vector<int> wires;
    std::vector<std::size_t> image;
  };
  std::vector<Step> steps;
  for (const Level& level : compiled.array.levels) {
    for (const Gate& gate : level) {
      Step step{gate.wires, std::vector<std::size_t>(gate.matrix.cols())};
      for (std::size_t c = 0; c < gate.matrix.cols(); ++c) {
        for (std::size_t r = 0; r < gate.matrix.rows(); ++r) {
          if (gate.matrix.at(r, c).is_one()) step.image[c] = r;
        }
      }
      steps.push_back(std::move(step));
    }
  }

  bool hit = false;
  const Matrix& amps = compiled.input.amplitudes;
  for (std::size_t start = 0; start < amps.rows() && !hit; ++start) {
    if (amps.at(start, 0).is_zero()) continue;
    std::size_t index = start;
    for (const Step& step : steps) {
      const std::size_t count = step.wires.size();
      std::size_t local = 0;
      for (int w : step.wires) local = (local << 1) | ((index >> (width - w)) & 1);
      const std::size_t mapped = step.image[local];
      for (std::size_t t = 0; t < count; ++t) {
        const std::size_t bit = std::size_t{1} << (width - step.wires[t]);
        if ((mapped >> (count - 1 - t)) & 1) {
          index |= bit;
        } else {
          index &= ~bit;
        }
      }
    }
    hit = index >= first && index < n;
  }
  return judge(Scalar::boolean(hit), instance.alpha, instance.variant);
}

}  // namespace sft
