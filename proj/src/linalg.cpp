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

#include "sft/linalg.hpp"

#include <algorithm>
#include <utility>

#include "sft/errors.hpp"

namespace sft {

namespace {

std::string order_str(std::uint64_t r, std::uint64_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

Matrix::Matrix(SemiringTag tag, std::size_t rows, std::size_t cols)
    : tag_(tag), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(tag)) {}

Matrix::Matrix(SemiringTag tag, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : tag_(tag), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("matrix of order " + order_str(rows, cols) + " given " +
                         std::to_string(entries_.size()) + " entries");
  }
  for (const Scalar& s : entries_) require_same_tag(tag, s.tag(), "matrix entry");
}

void check_entry_cap(std::uint64_t rows, std::uint64_t cols, std::uint64_t cap, const std::string& what) {
  if (rows != 0 && cols > cap / rows) {
    throw CapExceededError(what + " of order " + order_str(rows, cols) + " exceeds the entry cap of " +
                           std::to_string(cap));
  }
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_tag(a.tag(), b.tag(), "mat_add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("mat_add: orders " + order_str(a.rows(), a.cols()) + " and " +
                         order_str(b.rows(), b.cols()) + " differ");
  }
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(scalar_add(a.entries()[i], b.entries()[i]));
  return Matrix(a.tag(), a.rows(), a.cols(), std::move(out));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_tag(a.tag(), b.tag(), "mat_mul");
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner orders differ (" + order_str(a.rows(), a.cols()) + " times " +
                         order_str(b.rows(), b.cols()) + ")");
  }
  Matrix c(a.tag(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        accumulate_product(c.at(i, j), aik, bkj);
      }
    }
  }
  return c;
}

Matrix kronecker(const Matrix& a, const Matrix& b, std::uint64_t entry_cap) {
  require_same_tag(a.tag(), b.tag(), "kronecker");
  check_entry_cap(std::uint64_t{a.rows()} * b.rows(), std::uint64_t{a.cols()} * b.cols(), entry_cap,
                  "Kronecker product");
  Matrix c(a.tag(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t q = 0; q < a.rows(); ++q) {
    for (std::size_t r = 0; r < a.cols(); ++r) {
      const Scalar& aqr = a.at(q, r);
      if (aqr.is_zero()) continue;
      for (std::size_t s = 0; s < b.rows(); ++s) {
        for (std::size_t t = 0; t < b.cols(); ++t) {
          const Scalar& bst = b.at(s, t);
          if (bst.is_zero()) continue;
          accumulate_product(c.at(q * b.rows() + s, r * b.cols() + t), aqr, bst);
        }
      }
    }
  }
  return c;
}

Matrix conj_transpose(const Matrix& a) {
  Matrix t(a.tag(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = conjugate(a.at(i, j));
  }
  return t;
}

Matrix identity(std::size_t n, SemiringTag tag) {
  if (n == 0) throw DimensionError("identity: order must be positive");
  Matrix m(tag, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(tag);
  return m;
}

Matrix basis_vector(std::size_t n, std::size_t i, SemiringTag tag) {
  if (i < 1 || i > n) {
    throw DimensionError("basis_vector: index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  Matrix v(tag, n, 1);
  v.at(i - 1, 0) = Scalar::one(tag);
  return v;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_tag(a.tag(), b.tag(), "block_diagonal");
  Matrix m(a.tag(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

Matrix stride_permutation(std::size_t m, std::size_t n, SemiringTag tag, std::uint64_t entry_cap) {
  if (m == 0 || n == 0) throw DimensionError("stride_permutation: m and n must be positive");
  check_entry_cap(std::uint64_t{m} * n, std::uint64_t{m} * n, entry_cap, "stride permutation");
  Matrix p(tag, m * n, m * n);
  // Column of e_i^m ⊗ e_j^n is i*n + j; its image e_j^n ⊗ e_i^m sits at j*m + i.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.at(j * m + i, i * n + j) = Scalar::one(tag);
  }
  return p;
}

bool is_permutation_matrix(const Matrix& m) {
  if (!m.is_square()) return false;
  std::vector<bool> col_seen(m.cols(), false);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& s = m.at(i, j);
      if (s.is_zero()) continue;
      if (!s.is_one() || col_seen[j]) return false;
      col_seen[j] = true;
      ++ones;
    }
    if (ones != 1) return false;
  }
  return true;
}

bool is_orthogonal(const Matrix& m) {
  if (!m.is_square()) {
    throw DimensionError("is_orthogonal: matrix of order " + order_str(m.rows(), m.cols()) + " is not square");
  }
  if (m.tag() == SemiringTag::Boolean || m.tag() == SemiringTag::NonnegRational) {
    return is_permutation_matrix(m);
  }
  return mat_mul(conj_transpose(m), m) == identity(m.rows(), m.tag());
}

bool is_unit_column(const Matrix& v) {
  if (!v.is_column()) {
    throw DimensionError("is_unit_column: matrix of order " + order_str(v.rows(), v.cols()) + " is not a column");
  }
  if (v.tag() == SemiringTag::Boolean) {
    return std::any_of(v.entries().begin(), v.entries().end(), [](const Scalar& s) { return !s.is_zero(); });
  }
  return partial_trace_outer(v, v.rows()).is_one();
}

Scalar partial_trace_outer(const Matrix& v, std::uint64_t k) {
  if (!v.is_column()) {
    throw DimensionError("partial_trace_outer: matrix of order " + order_str(v.rows(), v.cols()) +
                         " is not a column");
  }
  const std::size_t n = v.rows();
  const std::size_t first = k >= n ? 0 : n - static_cast<std::size_t>(k);
  Scalar total = Scalar::zero(v.tag());
  for (std::size_t i = first; i < n; ++i) accumulate_product(total, v.at(i, 0), conjugate(v.at(i, 0)));
  return total;
}

std::string render_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m.at(i, j).to_string();
    }
    out += ']';
  }
  out += ']';
  return out;
}

}  // namespace sft
