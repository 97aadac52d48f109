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

#include "random_objects.hpp"
#include "sft/circuit.hpp"
#include "sft/errors.hpp"
#include "sft/linalg.hpp"

namespace sft {
namespace {

constexpr SemiringTag Q = SemiringTag::Rational;

Scalar q(long p, long d = 1) { return Scalar::real(Q, mpq_class(p, d)); }

Matrix col(std::vector<Scalar> xs) {
  const SemiringTag tag = xs.front().tag();
  const std::size_t n = xs.size();
  return Matrix(tag, n, 1, std::move(xs));
}

TEST(MatAdd, Examples) {
  EXPECT_EQ(mat_add(identity(2, Q), Matrix(Q, 2, 2)), identity(2, Q));
  EXPECT_EQ(mat_add(Matrix(Q, 1, 1, {q(1, 2)}), Matrix(Q, 1, 1, {q(1, 2)})), identity(1, Q));
  const auto b = SemiringTag::Boolean;
  const Matrix sum = mat_add(Matrix(b, 1, 2, {Scalar::boolean(true), Scalar::boolean(false)}),
                             Matrix(b, 1, 2, {Scalar::boolean(false), Scalar::boolean(true)}));
  EXPECT_EQ(sum, Matrix(b, 1, 2, {Scalar::boolean(true), Scalar::boolean(true)}));
  EXPECT_THROW(mat_add(identity(2, Q), identity(3, Q)), DimensionError);
  EXPECT_THROW(mat_add(identity(2, Q), identity(2, SemiringTag::Boolean)), TagMismatchError);
}

TEST(MatMul, GateActions) {
  EXPECT_EQ(mat_mul(builtin_gate("cnot", Q), basis_vector(4, 3, Q)), basis_vector(4, 4, Q));
  EXPECT_EQ(mat_mul(builtin_gate("toffoli", Q), basis_vector(8, 7, Q)), basis_vector(8, 8, Q));
  testing::Rng rng(3);
  const Matrix a = testing::random_matrix(rng, 3, 2, Q);
  EXPECT_EQ(mat_mul(identity(3, Q), a), a);
  EXPECT_THROW(mat_mul(a, a), DimensionError);
}

TEST(Kronecker, Examples) {
  EXPECT_EQ(kronecker(basis_vector(2, 1, Q), basis_vector(2, 2, Q)), basis_vector(4, 2, Q));
  EXPECT_EQ(kronecker(identity(2, Q), identity(2, Q)), identity(4, Q));
  const Matrix half = col({q(1, 2), q(1, 2)});
  EXPECT_EQ(kronecker(half, half), col({q(1, 4), q(1, 4), q(1, 4), q(1, 4)}));
}

TEST(Kronecker, IndexLaw) {
  testing::Rng rng(4);
  const Matrix a = testing::random_matrix(rng, 2, 3, Q);
  const Matrix b = testing::random_matrix(rng, 3, 2, Q);
  const Matrix c = kronecker(a, b);
  ASSERT_EQ(c.rows(), 6u);
  ASSERT_EQ(c.cols(), 6u);
  for (std::size_t qq = 0; qq < 2; ++qq) {
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t s = 0; s < 3; ++s) {
        for (std::size_t t = 0; t < 2; ++t) EXPECT_EQ(c.at(qq * 3 + s, r * 2 + t), a.at(qq, r) * b.at(s, t));
      }
    }
  }
}

TEST(Kronecker, RespectsCap) {
  EXPECT_THROW(kronecker(identity(4, Q), identity(4, Q), 255), CapExceededError);
  EXPECT_NO_THROW(kronecker(identity(4, Q), identity(4, Q), 256));
}

TEST(Kronecker, MixedProductLaw) {
  testing::Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = testing::random_matrix(rng, 2, 3, Q), c = testing::random_matrix(rng, 3, 2, Q);
    const Matrix b = testing::random_matrix(rng, 2, 2, Q), d = testing::random_matrix(rng, 2, 1, Q);
    EXPECT_EQ(mat_mul(kronecker(a, b), kronecker(c, d)), kronecker(mat_mul(a, c), mat_mul(b, d)));
  }
}

TEST(ConjTranspose, Examples) {
  const Matrix row = conj_transpose(basis_vector(3, 2, Q));
  EXPECT_EQ(row, Matrix(Q, 1, 3, {q(0), q(1), q(0)}));
  const auto g = SemiringTag::GaussianRational;
  EXPECT_EQ(conj_transpose(Matrix(g, 1, 1, {Scalar::gaussian(mpq_class(3, 5), mpq_class(4, 5))})),
            Matrix(g, 1, 1, {Scalar::gaussian(mpq_class(3, 5), mpq_class(-4, 5))}));
  EXPECT_EQ(conj_transpose(builtin_gate("swap", Q)), builtin_gate("swap", Q));
}

TEST(Constructors, IdentityAndBasis) {
  EXPECT_EQ(identity(1, Q), Matrix(Q, 1, 1, {q(1)}));
  EXPECT_EQ(basis_vector(4, 2, Q), col({q(0), q(1), q(0), q(0)}));
  EXPECT_THROW(basis_vector(2, 3, Q), DimensionError);
  EXPECT_THROW(basis_vector(2, 0, Q), DimensionError);
}

TEST(StridePermutation, Examples) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(stride_permutation(1, n, Q), identity(n, Q));
  EXPECT_EQ(stride_permutation(2, 2, Q), builtin_gate("swap", Q));
  EXPECT_EQ(mat_mul(stride_permutation(2, 3, Q), kronecker(basis_vector(2, 1, Q), basis_vector(3, 2, Q))),
            kronecker(basis_vector(3, 2, Q), basis_vector(2, 1, Q)));
}

TEST(StridePermutation, DefiningEquation) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const Matrix p = stride_permutation(m, n, Q);
      EXPECT_TRUE(is_permutation_matrix(p));
      for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          EXPECT_EQ(mat_mul(p, kronecker(basis_vector(m, i, Q), basis_vector(n, j, Q))),
                    kronecker(basis_vector(n, j, Q), basis_vector(m, i, Q)));
        }
      }
    }
  }
}

// P(n, size) is the size-point stride n permutation.
Matrix P(std::size_t n, std::size_t size) { return stride_permutation(size / n, n, Q); }

TEST(StridePermutation, InverseIdentity) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(mat_mul(P(n, m * n), P(m, m * n)), identity(m * n, Q));
  }
}

TEST(StridePermutation, ProductIdentity) {
  for (std::size_t l = 1; l <= 3; ++l) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t size = l * m * n;
        EXPECT_EQ(P(m * n, size), mat_mul(P(m, size), P(n, size))) << l << m << n;
      }
    }
  }
}

TEST(StridePermutation, FactorIdentity) {
  for (std::size_t l = 1; l <= 3; ++l) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (std::size_t n = 1; n <= 3; ++n) {
        EXPECT_EQ(P(n, l * m * n),
                  mat_mul(kronecker(P(n, l * n), identity(m, Q)), kronecker(identity(l, Q), P(n, m * n))))
            << l << m << n;
      }
    }
  }
}

TEST(StridePermutation, RespectsCap) { EXPECT_THROW(stride_permutation(8, 8, Q, 1000), CapExceededError); }

TEST(IsOrthogonal, Examples) {
  EXPECT_TRUE(is_orthogonal(builtin_gate("toffoli", Q)));
  EXPECT_FALSE(is_orthogonal(Matrix(Q, 2, 2, {q(1), q(1), q(0), q(1)})));
  EXPECT_TRUE(is_orthogonal(builtin_gate("rot35", Q)));
  EXPECT_THROW(is_orthogonal(Matrix(Q, 2, 3)), DimensionError);
  const auto b = SemiringTag::Boolean;
  EXPECT_TRUE(is_orthogonal(builtin_gate("fredkin", b)));
  EXPECT_FALSE(is_orthogonal(Matrix(b, 2, 2, {Scalar::boolean(true), Scalar::boolean(true), Scalar::boolean(false),
                                               Scalar::boolean(true)})));
}

TEST(IsOrthogonal, ClosedUnderProducts) {
  testing::Rng rng(21);
  for (SemiringTag tag : {SemiringTag::Boolean, SemiringTag::NonnegRational, SemiringTag::Rational,
                          SemiringTag::GaussianRational}) {
    for (int i = 0; i < 10; ++i) {
      const Matrix a = testing::random_orthogonal(rng, 3, tag);
      const Matrix b = testing::random_orthogonal(rng, 3, tag);
      const Matrix c = testing::random_orthogonal(rng, 2, tag);
      EXPECT_TRUE(is_orthogonal(a));
      EXPECT_TRUE(is_orthogonal(mat_mul(a, b)));
      EXPECT_TRUE(is_orthogonal(kronecker(a, c)));
    }
  }
}

TEST(IsUnitColumn, Examples) {
  EXPECT_TRUE(is_unit_column(basis_vector(5, 3, Q)));
  EXPECT_TRUE(is_unit_column(col({q(3, 5), q(4, 5)})));
  EXPECT_FALSE(is_unit_column(Matrix(Q, 3, 1)));
  EXPECT_FALSE(is_unit_column(col({q(1, 2), q(1, 2)})));
  const auto b = SemiringTag::Boolean;
  EXPECT_TRUE(is_unit_column(col({Scalar::boolean(true), Scalar::boolean(true)})));
  EXPECT_THROW(is_unit_column(identity(2, Q)), DimensionError);
}

TEST(PartialTraceOuter, Examples) {
  EXPECT_EQ(partial_trace_outer(col({q(1, 2), q(1, 2), q(1, 2), q(1, 2)}), 2), q(1, 2));
  EXPECT_EQ(partial_trace_outer(col({q(3, 5), q(-4, 5)}), 7), q(1));
  EXPECT_TRUE(partial_trace_outer(basis_vector(4, 2, SemiringTag::Boolean), 2).is_zero());
  EXPECT_EQ(partial_trace_outer(basis_vector(4, 4, SemiringTag::Boolean), 1), Scalar::boolean(true));
  EXPECT_THROW(partial_trace_outer(identity(2, Q), 1), DimensionError);
}

TEST(PartialTraceOuter, FullTraceOfUnitIsOne) {
  testing::Rng rng(2);
  for (SemiringTag tag : {SemiringTag::NonnegRational, SemiringTag::Rational, SemiringTag::GaussianRational}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const Matrix v = testing::random_unit_column(rng, n, tag);
      EXPECT_EQ(partial_trace_outer(v, n), Scalar::one(tag));
    }
  }
}

TEST(RenderMatrix, Format) {
  EXPECT_EQ(render_matrix(Matrix(Q, 2, 2, {q(1), q(-4, 5), q(0), q(3)})), "[[1 -4/5][0 3]]");
}

}  // namespace
}  // namespace sft
