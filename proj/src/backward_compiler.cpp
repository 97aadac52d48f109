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

#include "sft/backward_compiler.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "sft/errors.hpp"
#include "sft/forward_compiler.hpp"

namespace sft {

std::uint64_t pow2_ceil(std::uint64_t n) {
  if (n == 0) throw InvalidArgumentError("pow2_ceil: n must be positive");
  return std::bit_ceil(n);
}

bool is_pow2(std::uint64_t n) noexcept { return std::has_single_bit(n); }

int exact_log2(std::uint64_t n) {
  if (!is_pow2(n)) throw InvalidArgumentError("exact_log2: " + std::to_string(n) + " is not a power of two");
  return std::countr_zero(n);
}

Matrix pad_atom(const Matrix& a) {
  if (!a.is_square() && !a.is_column()) {
    throw InvalidArgumentError("pad_atom: input of order " + std::to_string(a.rows()) + "x" +
                               std::to_string(a.cols()) + " is neither square nor a column");
  }
  const std::uint64_t n = a.rows();
  const std::uint64_t target = pow2_ceil(n);
  if (target == n) return a;
  if (a.is_square()) return block_diagonal(a, identity(target - n, a.tag()));
  Matrix out(a.tag(), target, 1);
  for (std::size_t i = 0; i < n; ++i) out.at(i, 0) = a.at(i, 0);
  return out;
}

Formula conj_transpose_formula(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return Formula::atom(conj_transpose(f.matrix()));
    case FormulaKind::Sum:
      return Formula::sum(conj_transpose_formula(f.lhs()), conj_transpose_formula(f.rhs()));
    case FormulaKind::Product:
      return Formula::product(conj_transpose_formula(f.rhs()), conj_transpose_formula(f.lhs()));
    case FormulaKind::Tensor:
      return Formula::tensor(conj_transpose_formula(f.lhs()), conj_transpose_formula(f.rhs()));
  }
  return f;
}

Formula stride_two_formula(std::uint64_t size, SemiringTag tag) {
  const int levels = exact_log2(size);
  if (levels < 1) throw InvalidArgumentError("stride_two_formula: size must be at least 2");
  const Formula i2 = Formula::atom(identity(2, tag));
  const Formula t = Formula::atom(builtin_gate("swap", tag));
  if (levels == 1) return i2;
  Formula acc = t;
  for (int l = 3; l <= levels; ++l) {
    acc = Formula::product(Formula::tensor(acc, i2), Formula::tensor(identity_power(l - 2, tag), t));
  }
  return acc;
}

bool row_gather_is_identity(std::uint64_t m, std::uint64_t n, std::uint64_t nu) noexcept {
  return m <= 1 || n == nu;
}

Formula row_gather_formula(std::uint64_t m, std::uint64_t n, std::uint64_t mu, std::uint64_t nu,
                           SemiringTag tag) {
  const int j = exact_log2(mu);
  const int k = exact_log2(nu);
  if (m == 0 || n == 0 || m > mu || n > nu) {
    throw InvalidArgumentError("row_gather_formula: need 1 <= m <= mu and 1 <= n <= nu");
  }
  if (row_gather_is_identity(m, n, nu)) return identity_power(j + k, tag);

  const Matrix u_matrix =
      block_diagonal(stride_permutation(n, 2, tag), identity(2 * (nu - n), tag));
  Formula u = Formula::atom(u_matrix);
  if (j > 1) u = Formula::tensor(u, identity_power(j - 1, tag));
  const Formula s = Formula::product(u, Formula::tensor(identity_power(k, tag), stride_two_formula(mu, tag)));

  std::vector<Formula> factors(static_cast<std::size_t>(j), s);
  const Formula shuffle = stride_two_formula(mu * nu, tag);
  factors.insert(factors.end(), static_cast<std::size_t>(k), shuffle);
  return balanced_product(factors);
}

KronFix kron_fix_permutations(Order h, Order k, Order h_padded, Order k_padded, SemiringTag tag) {
  for (std::uint64_t d : {h_padded.rows, h_padded.cols, k_padded.rows, k_padded.cols}) {
    if (!is_pow2(d)) throw InvalidArgumentError("kron_fix_permutations: padded orders must be powers of two");
  }
  KronFix fix{row_gather_formula(h.rows, k.rows, h_padded.rows, k_padded.rows, tag),
              conj_transpose_formula(row_gather_formula(h.cols, k.cols, h_padded.cols, k_padded.cols, tag)),
              row_gather_is_identity(h.rows, k.rows, k_padded.rows),
              row_gather_is_identity(h.cols, k.cols, k_padded.cols)};
  return fix;
}

namespace {

using ColumnHook = std::function<Formula(const Matrix&)>;

Formula pad_node(const Formula& f, const ColumnHook& column_hook) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      const Matrix& m = f.matrix();
      if (m.is_column() && column_hook) return column_hook(m);
      return Formula::atom(pad_atom(m));
    }
    case FormulaKind::Sum:
      throw ValidationError("pad_formula: sum nodes cannot be padded");
    case FormulaKind::Product: {
      Formula h = pad_node(f.lhs(), column_hook);
      Formula k = pad_node(f.rhs(), column_hook);
      const std::uint64_t inner_h = h.order()->cols;
      const std::uint64_t inner_k = k.order()->rows;
      if (inner_h < inner_k) {
        h = Formula::tensor(identity_power(exact_log2(inner_k / inner_h), f.tag()), h);
      } else if (inner_h > inner_k) {
        std::vector<Formula> zeros(static_cast<std::size_t>(exact_log2(inner_h / inner_k)),
                                   Formula::atom(basis_vector(2, 1, f.tag())));
        k = Formula::tensor(balanced_tensor(zeros), k);
      }
      return Formula::product(h, k);
    }
    case FormulaKind::Tensor: {
      const Formula h = pad_node(f.lhs(), column_hook);
      const Formula k = pad_node(f.rhs(), column_hook);
      const KronFix fix = kron_fix_permutations(*f.lhs().order(), *f.rhs().order(), *h.order(), *k.order(), f.tag());
      Formula g = Formula::tensor(h, k);
      if (!fix.q_prime_identity) g = Formula::product(g, fix.q_prime);
      if (!fix.q_identity) g = Formula::product(fix.q, g);
      return g;
    }
  }
  return f;
}

Formula pad_root(const Formula& f, const ColumnHook& column_hook) {
  Formula padded = pad_node(f, column_hook);
  if (padded.order()->rows == 1) padded = Formula::tensor(Formula::atom(basis_vector(2, 1, f.tag())), padded);
  return padded;
}

bool is_square_number(const mpz_class& r) { return mpz_perfect_square_p(r.get_mpz_t()) != 0; }

// 4^a (8b + 7) is exactly the set of non-sums of three squares.
bool needs_four_squares(mpz_class r) {
  if (r == 0) return false;
  while (mpz_divisible_ui_p(r.get_mpz_t(), 4)) r /= 4;
  return mpz_fdiv_ui(r.get_mpz_t(), 8) == 7;
}

bool find_squares(const mpz_class& r, int terms, const mpz_class& largest, std::vector<mpz_class>& out) {
  if (r == 0) return true;
  if (terms == 0) return false;
  if (terms == 3 && needs_four_squares(r)) return false;
  mpz_class s = sqrt(r);
  if (s > largest) s = largest;
  if (terms == 1) {
    if (s * s != r) return false;
    out.push_back(s);
    return true;
  }
  for (; s > 0 && s * s * terms >= r; --s) {
    out.push_back(s);
    if (find_squares(r - s * s, terms - 1, s, out)) return true;
    out.pop_back();
  }
  return false;
}

std::uint64_t ceil_log2(const mpz_class& d) {
  if (d <= 1) return 0;
  mpz_class below = d - 1;
  return mpz_sizeinbase(below.get_mpz_t(), 2);
}

}  // namespace

PaddedFormula pad_formula(const Formula& f) {
  require_osl(f);
  return PaddedFormula{f, pad_root(f, nullptr), f.order()->rows};
}

std::vector<mpz_class> sum_of_squares(const mpz_class& r, int max_terms) {
  if (r < 0) throw InvalidArgumentError("sum_of_squares: negative input");
  std::vector<mpz_class> out;
  if (r == 0) return out;
  if (is_square_number(r) && max_terms >= 1) return {sqrt(r)};
  for (int terms = 2; terms <= max_terms; ++terms) {
    out.clear();
    if (find_squares(r, terms, sqrt(r), out)) return out;
  }
  throw InvalidArgumentError("sum_of_squares: " + r.get_str() + " is not a sum of at most " +
                             std::to_string(max_terms) + " squares");
}

DenominatorPad pad_unit_vector_denominator(const Matrix& v) {
  if (v.tag() != SemiringTag::NonnegRational && v.tag() != SemiringTag::Rational) {
    throw InvalidArgumentError("pad_unit_vector_denominator: needs a qplus or q column");
  }
  if (!v.is_column() || !is_unit_column(v)) {
    throw InvalidArgumentError("pad_unit_vector_denominator: " + render_matrix(v) + " is not a unit column");
  }
  mpz_class d = 1;
  for (const Scalar& x : v.entries()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.re().get_den_mpz_t());
  }
  DenominatorPad pad{v, v, mpq_class(1), {}, d, d};
  if (mpz_popcount(d.get_mpz_t()) == 1) return pad;

  const std::uint64_t log_d = ceil_log2(d);
  mpz_class pi_d;
  mpz_ui_pow_ui(pi_d.get_mpz_t(), 2, log_d);
  pad.padded_denominator = pi_d;
  pad.scale = mpq_class(d, pi_d);
  pad.scale.canonicalize();

  const std::uint64_t bound = 3 * log_d;
  pad.terms = sum_of_squares(pi_d * pi_d - d * d, static_cast<int>(std::min<std::uint64_t>(bound, 4)));
  if (pad.terms.size() > bound) {
    throw InvalidArgumentError("pad_unit_vector_denominator: no decomposition within " + std::to_string(bound) +
                               " squares");
  }

  const std::uint64_t n = v.rows();
  std::uint64_t q = 1;
  while (q <= n + bound) q *= 4;
  check_entry_cap(q, 1, kDefaultEntryCap, "pad_unit_vector_denominator");
  Matrix out(v.tag(), q, 1);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class a = v.at(i, 0).re() * d / pi_d;
    a.canonicalize();
    out.at(i, 0) = Scalar::real(v.tag(), a);
  }
  const std::size_t first_term = q - pad.terms.size();
  for (std::size_t t = 0; t < pad.terms.size(); ++t) {
    mpq_class b(pad.terms[t], pi_d);
    b.canonicalize();
    out.at(first_term + t, 0) = Scalar::real(v.tag(), b);
  }
  pad.padded = std::move(out);
  return pad;
}

NormalizedFormula normalize_denominators(const Formula& f) {
  require_osl(f);
  if (f.tag() != SemiringTag::NonnegRational && f.tag() != SemiringTag::Rational) {
    throw InvalidArgumentError("normalize_denominators: needs a qplus or q formula");
  }
  NormalizedFormula result{f, f, f.order()->rows, mpq_class(1), {}};
  const ColumnHook hook = [&result](const Matrix& m) {
    DenominatorPad pad = pad_unit_vector_denominator(m);
    result.scale *= pad.scale;
    Formula atom = Formula::atom(pad.terms.empty() ? pad_atom(m) : pad.padded);
    result.pads.push_back(std::move(pad));
    return atom;
  };
  result.padded = pad_root(f, hook);
  return result;
}

namespace {

struct AmplitudeBlock {
  std::vector<int> wires;
  Matrix amplitudes;
};

struct PendingGate {
  std::vector<int> wires;
  Matrix matrix;
};

class CircuitReader {
 public:
  explicit CircuitReader(SemiringTag tag) : phase_(Scalar::one(tag)) {}

  std::vector<int> read(const Formula& f, std::vector<int> in) {
    switch (f.kind()) {
      case FormulaKind::Atom:
        return read_atom(f.matrix(), std::move(in));
      case FormulaKind::Sum:
        throw ValidationError("array_from_padded: sum nodes have no circuit reading");
      case FormulaKind::Product:
        return read(f.lhs(), read(f.rhs(), std::move(in)));
      case FormulaKind::Tensor: {
        const std::size_t split = static_cast<std::size_t>(exact_log2(f.lhs().order()->cols));
        std::vector<int> left(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(split));
        std::vector<int> right(in.begin() + static_cast<std::ptrdiff_t>(split), in.end());
        std::vector<int> out = read(f.lhs(), std::move(left));
        std::vector<int> tail = read(f.rhs(), std::move(right));
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
      }
    }
    return in;
  }

  const Scalar& phase() const noexcept { return phase_; }
  const std::vector<AmplitudeBlock>& blocks() const noexcept { return blocks_; }
  const std::vector<PendingGate>& gates() const noexcept { return gates_; }
  int wire_count() const noexcept { return next_wire_; }

 private:
  std::vector<int> read_atom(const Matrix& m, std::vector<int> in) {
    if (m.rows() == 1 && m.cols() == 1) {
      phase_ = phase_ * m.at(0, 0);
      return in;
    }
    if (m.is_column()) {
      std::vector<int> fresh;
      for (int w = exact_log2(m.rows()); w > 0; --w) fresh.push_back(next_wire_++);
      blocks_.push_back({fresh, m});
      return fresh;
    }
    if (!(m == identity(m.rows(), m.tag()))) gates_.push_back({in, m});
    return in;
  }

  Scalar phase_;
  int next_wire_ = 0;
  std::vector<AmplitudeBlock> blocks_;
  std::vector<PendingGate> gates_;
};

std::string builtin_name_for(const Matrix& m) {
  for (const char* name : {"not", "cnot", "swap", "toffoli", "fredkin", "rot35"}) {
    try {
      if (builtin_gate(name, m.tag()) == m) return name;
    } catch (const InvalidArgumentError&) {
    }
  }
  return {};
}

}  // namespace

CompiledFormula array_from_padded(const Formula& padded, std::uint64_t block_length) {
  const auto order = padded.order();
  if (!order || order->cols != 1 || order->rows < 2 || !is_pow2(order->rows)) {
    throw ValidationError("array_from_padded: expected a padded column formula of order 2^n x 1");
  }
  const SemiringTag tag = padded.tag();
  CircuitReader reader(tag);
  const std::vector<int> outputs = reader.read(padded, {});
  const int width = static_cast<int>(outputs.size());
  if (width > 30) throw CapExceededError("array_from_padded: " + std::to_string(width) + " wires exceed the limit of 30");
  check_entry_cap(std::uint64_t{1} << width, 1, kDefaultEntryCap, "array_from_padded");

  // Wire labels are renumbered so the root's outputs read 1..n, MSB first.
  std::vector<int> position(static_cast<std::size_t>(reader.wire_count()));
  for (int i = 0; i < width; ++i) position[static_cast<std::size_t>(outputs[static_cast<std::size_t>(i)])] = i + 1;
  auto relabel = [&](const std::vector<int>& wires) {
    std::vector<int> out;
    for (int w : wires) out.push_back(position[static_cast<std::size_t>(w)]);
    return out;
  };

  GateArray array{tag, width, {}};
  std::vector<std::size_t> depth(static_cast<std::size_t>(width) + 1, 0);
  for (const PendingGate& pending : reader.gates()) {
    Gate gate{relabel(pending.wires), pending.matrix, builtin_name_for(pending.matrix)};
    std::size_t level = 0;
    for (int w : gate.wires) level = std::max(level, depth[static_cast<std::size_t>(w)]);
    for (int w : gate.wires) depth[static_cast<std::size_t>(w)] = level + 1;
    if (array.levels.size() <= level) array.levels.resize(level + 1);
    array.levels[level].push_back(std::move(gate));
  }

  // Input state: the product of the amplitude blocks, times the collected phase.
  Matrix amplitudes(tag, std::size_t{1} << width, 1);
  std::function<void(std::size_t, std::size_t, const Scalar&)> expand =
      [&](std::size_t b, std::size_t index, const Scalar& weight) {
        if (b == reader.blocks().size()) {
          amplitudes.at(index, 0) = weight;
          return;
        }
        const AmplitudeBlock& block = reader.blocks()[b];
        const std::vector<int> wires = relabel(block.wires);
        const std::size_t count = wires.size();
        for (std::size_t local = 0; local < block.amplitudes.rows(); ++local) {
          const Scalar& a = block.amplitudes.at(local, 0);
          if (a.is_zero()) continue;
          std::size_t next = index;
          for (std::size_t t = 0; t < count; ++t) {
            if ((local >> (count - 1 - t)) & 1) next |= std::size_t{1} << (width - wires[t]);
          }
          expand(b + 1, next, weight * a);
        }
      };
  expand(0, 0, reader.phase());

  CompiledFormula compiled{std::move(array), StateVector{tag, width, std::move(amplitudes)}, block_length};
  require_valid_array(compiled.array);
  return compiled;
}

CompiledFormula formula_to_array(const Formula& f) {
  const PaddedFormula padded = pad_formula(f);
  return array_from_padded(padded.padded, padded.block_length);
}

}  // namespace sft
