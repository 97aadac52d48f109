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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sft/linalg.hpp"

namespace sft {

enum class FormulaKind : std::uint8_t { Atom, Sum, Product, Tensor };

struct Order {
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  friend bool operator==(const Order&, const Order&) = default;
};

std::string to_string(const Order& order);

/// Immutable tensor-formula tree. Nodes are shared, so copying a Formula is
/// cheap. Each node caches its order, or std::nullopt when the subformula
/// violates the order constraints (an invalid formula).
class Formula {
 public:
  static Formula atom(Matrix m);
  static Formula sum(Formula lhs, Formula rhs);
  static Formula product(Formula lhs, Formula rhs);
  static Formula tensor(Formula lhs, Formula rhs);

  FormulaKind kind() const noexcept;
  SemiringTag tag() const noexcept;
  std::optional<Order> order() const noexcept;
  bool is_valid() const noexcept { return order().has_value(); }

  /// Atom only.
  const Matrix& matrix() const;
  /// Binary nodes only.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Identity of the underlying node, for memoization.
  const void* node_id() const noexcept { return node_.get(); }
  /// True when the node is referenced from more than one place.
  bool is_shared() const noexcept { return node_.use_count() > 1; }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(FormulaKind kind, Formula lhs, Formula rhs);

  std::shared_ptr<const Node> node_;
};

bool structurally_equal(const Formula& a, const Formula& b);

/// Balanced binary trees over a non-empty list. `balanced_product({A,B,C})`
/// evaluates to A·B·C.
Formula balanced_product(const std::vector<Formula>& factors);
Formula balanced_tensor(const std::vector<Formula>& factors);

/// strict: malformed or invalid text is an error. paper: it denotes the
/// trivial formula 0 of order 1x1.
enum class ParseMode : std::uint8_t { Strict, Paper };

/// Grammar (whitespace between tokens is insignificant):
///   formula := atom | '(' formula binop formula ')'
///   binop   := '+' | '*' | '#'        (sum, product, tensor)
///   atom    := '[' row+ ']'
///   row     := '[' scalar-token+ ']'  (Boolean rows may be digit runs)
Formula parse_formula(std::string_view text, SemiringTag tag, ParseMode mode = ParseMode::Strict);

/// Parses one atom (a bracketed matrix) spanning all of `text`.
Matrix parse_matrix(std::string_view text, SemiringTag tag);

/// The trivial formula 0 of order 1x1.
Formula trivial_formula(SemiringTag tag);

/// Fully parenthesized text; parse_formula(render_formula(F)) is structurally F.
std::string render_formula(const Formula& f);

std::optional<Order> compute_order(const Formula& f);
std::uint64_t formula_size(const Formula& f);
std::uint64_t formula_diameter(const Formula& f);
std::uint64_t formula_depth(const Formula& f);
bool is_sum_free(const Formula& f);

/// Largest diameter among the atoms.
std::uint64_t max_atom_diameter(const Formula& f);

/// Node paths are written "root", "root.L", "root.L.R", ...
struct OslReport {
  bool is_sum_free = false;
  bool inputs_ok = false;
  bool output_is_column = false;
  std::vector<std::string> offending;

  bool is_osl() const noexcept { return is_sum_free && inputs_ok && output_is_column; }
};

OslReport check_osl(const Formula& f);

/// Throws ValidationError listing the offending nodes unless F is OSL.
void require_osl(const Formula& f);

struct EvalOptions {
  std::uint64_t entry_cap = kDefaultEntryCap;
  ParseMode mode = ParseMode::Strict;
};

/// Bottom-up, left-to-right post-order evaluation. Every node's order is
/// checked against the cap before it is computed. An invalid formula is an
/// error in strict mode and evaluates to the 1x1 zero in paper mode.
Matrix evaluate(const Formula& f, const EvalOptions& options = {});

}  // namespace sft
