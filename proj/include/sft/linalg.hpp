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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sft/semiring.hpp"

namespace sft {

/// Default bound on the number of entries of any matrix built by the
/// library (2^24).
inline constexpr std::uint64_t kDefaultEntryCap = std::uint64_t{1} << 24;

/// Dense row-major matrix over one semiring. Indices passed to `at` are
/// 0-based; the basis constructors (`basis_vector`) are 1-based.
class Matrix {
 public:
  Matrix() = default;
  /// rows x cols zero matrix.
  Matrix(SemiringTag tag, std::size_t rows, std::size_t cols);
  /// Takes ownership of `entries` (row-major); every entry must carry `tag`.
  Matrix(SemiringTag tag, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  SemiringTag tag() const noexcept { return tag_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_column() const noexcept { return cols_ == 1; }

  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.tag_ == b.tag_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  SemiringTag tag_ = SemiringTag::Rational;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Throws CapExceededError if rows*cols is larger than `cap`.
void check_entry_cap(std::uint64_t rows, std::uint64_t cols, std::uint64_t cap, const std::string& what);

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// (A ⊗ B)_{i,j} = A_{q,r} B_{s,t} with i = k(q-1)+s, j = l(r-1)+t.
Matrix kronecker(const Matrix& a, const Matrix& b, std::uint64_t entry_cap = kDefaultEntryCap);
Matrix conj_transpose(const Matrix& a);

Matrix identity(std::size_t n, SemiringTag tag);
/// e_i^n with 1-based i.
Matrix basis_vector(std::size_t n, std::size_t i, SemiringTag tag);
/// blockdiag(A, B).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// The mn-point stride-n permutation P_n^{mn}: e_i^m ⊗ e_j^n ↦ e_j^n ⊗ e_i^m.
Matrix stride_permutation(std::size_t m, std::size_t n, SemiringTag tag,
                          std::uint64_t entry_cap = kDefaultEntryCap);

/// Exactly one 1 per row and column, zeros elsewhere.
bool is_permutation_matrix(const Matrix& m);
/// M†M = I. Over bool and qplus this is the permutation-matrix test.
bool is_orthogonal(const Matrix& m);
/// v†v = 1; over bool, any nonzero column.
bool is_unit_column(const Matrix& v);

/// Sum of the last k diagonal entries of v v†, computed from v directly.
/// For k >= rows this is the full trace.
Scalar partial_trace_outer(const Matrix& v, std::uint64_t k);

/// Atom text: "[[a b][c d]]".
std::string render_matrix(const Matrix& m);

}  // namespace sft
