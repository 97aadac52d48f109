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

#include "sft/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>
#include <utility>

#include "sft/errors.hpp"

namespace sft {

std::string to_string(const Order& order) {
  return std::to_string(order.rows) + "x" + std::to_string(order.cols);
}

struct Formula::Node {
  FormulaKind kind;
  SemiringTag tag;
  std::optional<Order> order;
  Matrix matrix;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
};

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw CapExceededError("formula order overflows 64 bits");
  return a * b;
}

}  // namespace

Formula Formula::atom(Matrix m) {
  if (m.rows() == 0 || m.cols() == 0) throw DimensionError("atomic formula must have positive order");
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Atom;
  node->tag = m.tag();
  node->order = Order{m.rows(), m.cols()};
  node->matrix = std::move(m);
  return Formula(std::move(node));
}

Formula Formula::binary(FormulaKind kind, Formula lhs, Formula rhs) {
  require_same_tag(lhs.tag(), rhs.tag(), "formula");
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->tag = lhs.tag();
  auto a = lhs.order();
  auto b = rhs.order();
  if (a && b) {
    switch (kind) {
      case FormulaKind::Sum:
        if (*a == *b) node->order = *a;
        break;
      case FormulaKind::Product:
        if (a->cols == b->rows) node->order = Order{a->rows, b->cols};
        break;
      case FormulaKind::Tensor:
        node->order = Order{checked_mul(a->rows, b->rows), checked_mul(a->cols, b->cols)};
        break;
      case FormulaKind::Atom:
        break;
    }
  }
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::move(node));
}

Formula Formula::sum(Formula lhs, Formula rhs) { return binary(FormulaKind::Sum, std::move(lhs), std::move(rhs)); }
Formula Formula::product(Formula lhs, Formula rhs) {
  return binary(FormulaKind::Product, std::move(lhs), std::move(rhs));
}
Formula Formula::tensor(Formula lhs, Formula rhs) {
  return binary(FormulaKind::Tensor, std::move(lhs), std::move(rhs));
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }
SemiringTag Formula::tag() const noexcept { return node_->tag; }
std::optional<Order> Formula::order() const noexcept { return node_->order; }

const Matrix& Formula::matrix() const {
  if (node_->kind != FormulaKind::Atom) throw InvalidArgumentError("matrix() called on a non-atomic formula");
  return node_->matrix;
}
const Formula& Formula::lhs() const {
  if (!node_->lhs) throw InvalidArgumentError("lhs() called on an atomic formula");
  return *node_->lhs;
}
const Formula& Formula::rhs() const {
  if (!node_->rhs) throw InvalidArgumentError("rhs() called on an atomic formula");
  return *node_->rhs;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.node_id() == b.node_id()) return true;
  if (a.kind() != b.kind() || a.tag() != b.tag()) return false;
  if (a.kind() == FormulaKind::Atom) return a.matrix() == b.matrix();
  return structurally_equal(a.lhs(), b.lhs()) && structurally_equal(a.rhs(), b.rhs());
}

namespace {

Formula balanced(const std::vector<Formula>& xs, std::size_t lo, std::size_t hi,
                 Formula (*combine)(Formula, Formula)) {
  if (hi - lo == 1) return xs[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return combine(balanced(xs, lo, mid, combine), balanced(xs, mid, hi, combine));
}

}  // namespace

Formula balanced_product(const std::vector<Formula>& factors) {
  if (factors.empty()) throw InvalidArgumentError("balanced_product of no factors");
  return balanced(factors, 0, factors.size(), &Formula::product);
}

Formula balanced_tensor(const std::vector<Formula>& factors) {
  if (factors.empty()) throw InvalidArgumentError("balanced_tensor of no factors");
  return balanced(factors, 0, factors.size(), &Formula::tensor);
}

Formula trivial_formula(SemiringTag tag) { return Formula::atom(Matrix(tag, 1, 1)); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, SemiringTag tag) : text_(text), tag_(tag) {}

  Formula parse_all() {
    Formula f = parse_formula();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after formula");
    return f;
  }

  Matrix parse_matrix_all() {
    skip_ws();
    Matrix m = parse_atom();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after matrix");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Formula parse_formula() {
    char c = peek();
    if (c == '[') return Formula::atom(parse_atom());
    if (c != '(') fail(pos_ == text_.size() ? "unexpected end of input" : "expected '(' or '['");
    ++pos_;
    Formula lhs = parse_formula();
    char op = peek();
    FormulaKind kind;
    switch (op) {
      case '+':
        kind = FormulaKind::Sum;
        break;
      case '*':
        kind = FormulaKind::Product;
        break;
      case '#':
        kind = FormulaKind::Tensor;
        break;
      default:
        fail("expected operator '+', '*' or '#'");
    }
    ++pos_;
    Formula rhs = parse_formula();
    expect(')');
    switch (kind) {
      case FormulaKind::Sum:
        return Formula::sum(std::move(lhs), std::move(rhs));
      case FormulaKind::Product:
        return Formula::product(std::move(lhs), std::move(rhs));
      default:
        return Formula::tensor(std::move(lhs), std::move(rhs));
    }
  }

  Matrix parse_atom() {
    std::size_t start = pos_;
    expect('[');
    std::vector<std::vector<Scalar>> rows;
    while (peek() == '[') {
      ++pos_;
      rows.push_back(parse_row());
    }
    if (rows.empty()) fail("matrix needs at least one row");
    expect(']');
    const std::size_t cols = rows.front().size();
    std::vector<Scalar> entries;
    entries.reserve(rows.size() * cols);
    for (auto& row : rows) {
      if (row.size() != cols) {
        pos_ = start;
        fail("rows of a matrix must have equal length");
      }
      for (auto& s : row) entries.push_back(std::move(s));
    }
    return Matrix(tag_, rows.size(), cols, std::move(entries));
  }

  std::vector<Scalar> parse_row() {
    std::vector<Scalar> row;
    while (true) {
      char c = peek();
      if (c == ']') {
        ++pos_;
        break;
      }
      if (c == '\0') fail("unterminated row");
      if (c == '[' || c == '(' || c == ')') fail("unexpected character in row");
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isspace(static_cast<unsigned char>(d)) || d == '[' || d == ']' || d == '(' || d == ')') break;
        ++pos_;
      }
      std::string_view token = text_.substr(start, pos_ - start);
      try {
        if (tag_ == SemiringTag::Boolean && token.size() > 1) {
          for (char bit : token) row.push_back(parse_scalar(std::string_view(&bit, 1), tag_));
        } else {
          row.push_back(parse_scalar(token, tag_));
        }
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), start);
      } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (row.empty()) fail("empty row");
    return row;
  }

  std::string_view text_;
  SemiringTag tag_;
  std::size_t pos_ = 0;
};

// Path of the lowest invalid node, with the reason.
std::optional<std::string> find_invalid(const Formula& f, const std::string& path) {
  if (f.is_valid()) return std::nullopt;
  if (auto l = find_invalid(f.lhs(), path + ".L")) return l;
  if (auto r = find_invalid(f.rhs(), path + ".R")) return r;
  auto a = *f.lhs().order();
  auto b = *f.rhs().order();
  const char* what = f.kind() == FormulaKind::Sum ? "sum" : "product";
  return path + ": " + what + " of orders " + to_string(a) + " and " + to_string(b) + " is undefined";
}

}  // namespace

Formula parse_formula(std::string_view text, SemiringTag tag, ParseMode mode) {
  try {
    Formula f = Parser(text, tag).parse_all();
    if (auto bad = find_invalid(f, "root")) throw ValidationError("invalid tensor formula: " + *bad);
    return f;
  } catch (const Error&) {
    if (mode == ParseMode::Paper) return trivial_formula(tag);
    throw;
  }
}

Matrix parse_matrix(std::string_view text, SemiringTag tag) { return Parser(text, tag).parse_matrix_all(); }

std::string render_formula(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return render_matrix(f.matrix());
    case FormulaKind::Sum:
      return "(" + render_formula(f.lhs()) + "+" + render_formula(f.rhs()) + ")";
    case FormulaKind::Product:
      return "(" + render_formula(f.lhs()) + "*" + render_formula(f.rhs()) + ")";
    case FormulaKind::Tensor:
      return "(" + render_formula(f.lhs()) + "#" + render_formula(f.rhs()) + ")";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Structural measures

std::optional<Order> compute_order(const Formula& f) { return f.order(); }

std::uint64_t formula_size(const Formula& f) {
  if (f.kind() == FormulaKind::Atom) return 1;
  return 1 + formula_size(f.lhs()) + formula_size(f.rhs());
}

std::uint64_t formula_diameter(const Formula& f) {
  auto order = f.order();
  if (!order) throw ValidationError("diameter of an invalid formula");
  std::uint64_t d = std::max(order->rows, order->cols);
  if (f.kind() == FormulaKind::Atom) return d;
  return std::max({d, formula_diameter(f.lhs()), formula_diameter(f.rhs())});
}

std::uint64_t formula_depth(const Formula& f) {
  if (f.kind() == FormulaKind::Atom) return 0;
  return 1 + std::max(formula_depth(f.lhs()), formula_depth(f.rhs()));
}

bool is_sum_free(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return true;
    case FormulaKind::Sum:
      return false;
    default:
      return is_sum_free(f.lhs()) && is_sum_free(f.rhs());
  }
}

std::uint64_t max_atom_diameter(const Formula& f) {
  if (f.kind() == FormulaKind::Atom) return std::max(f.matrix().rows(), f.matrix().cols());
  return std::max(max_atom_diameter(f.lhs()), max_atom_diameter(f.rhs()));
}

// ---------------------------------------------------------------------------
// OSL

namespace {

void collect_osl(const Formula& f, const std::string& path, OslReport& report) {
  if (f.kind() == FormulaKind::Atom) {
    const Matrix& m = f.matrix();
    if (m.is_square()) {
      if (is_orthogonal(m)) return;
      if (m.is_column() && is_unit_column(m)) return;
      report.inputs_ok = false;
      report.offending.push_back(path + ": square input is not orthogonal");
    } else if (m.is_column()) {
      if (is_unit_column(m)) return;
      report.inputs_ok = false;
      report.offending.push_back(path + ": column input is not a unit vector");
    } else {
      report.inputs_ok = false;
      report.offending.push_back(path + ": input of order " + std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()) + " is neither square nor a column");
    }
    return;
  }
  if (f.kind() == FormulaKind::Sum) {
    report.is_sum_free = false;
    report.offending.push_back(path + ": sum node");
  }
  collect_osl(f.lhs(), path + ".L", report);
  collect_osl(f.rhs(), path + ".R", report);
}

}  // namespace

OslReport check_osl(const Formula& f) {
  OslReport report;
  report.is_sum_free = true;
  report.inputs_ok = true;
  collect_osl(f, "root", report);
  auto order = f.order();
  report.output_is_column = order && order->cols == 1;
  if (!order) {
    report.offending.push_back("root: invalid formula");
  } else if (order->cols != 1) {
    report.offending.push_back("root: output of order " + to_string(*order) + " is not a column");
  }
  return report;
}

void require_osl(const Formula& f) {
  OslReport report = check_osl(f);
  if (report.is_osl()) return;
  std::string msg = "formula is not OSL";
  for (const auto& o : report.offending) msg += "; " + o;
  throw ValidationError(msg);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Shared subtrees (common in generated formulas) are evaluated once.
using EvalCache = std::unordered_map<const void*, Matrix>;

Matrix eval_node(const Formula& f, const std::string& path, std::uint64_t cap, EvalCache& cache) {
  const Order order = *f.order();
  if (order.rows != 0 && order.cols > cap / order.rows) {
    throw CapExceededError("subformula " + path + " of order " + to_string(order) +
                           " exceeds the entry cap of " + std::to_string(cap));
  }
  if (f.kind() == FormulaKind::Atom) return f.matrix();
  const bool memo = f.is_shared();
  if (memo) {
    if (auto hit = cache.find(f.node_id()); hit != cache.end()) return hit->second;
  }
  Matrix a = eval_node(f.lhs(), path + ".L", cap, cache);
  Matrix b = eval_node(f.rhs(), path + ".R", cap, cache);
  Matrix out;
  switch (f.kind()) {
    case FormulaKind::Sum:
      out = mat_add(a, b);
      break;
    case FormulaKind::Product:
      out = mat_mul(a, b);
      break;
    default:
      out = kronecker(a, b, cap);
      break;
  }
  if (memo) cache.emplace(f.node_id(), out);
  return out;
}

}  // namespace

Matrix evaluate(const Formula& f, const EvalOptions& options) {
  if (!f.is_valid()) {
    if (options.mode == ParseMode::Paper) return Matrix(f.tag(), 1, 1);
    throw ValidationError("cannot evaluate an invalid tensor formula: " + *find_invalid(f, "root"));
  }
  EvalCache cache;
  return eval_node(f, "root", options.entry_cap, cache);
}

}  // namespace sft
