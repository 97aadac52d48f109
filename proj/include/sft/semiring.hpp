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
#include <memory>
#include <string>
#include <string_view>

namespace sft {

/// The four supported semirings: (B, or, and), nonnegative rationals,
/// rationals, and the Gaussian rationals Q[i] standing in for C.
enum class SemiringTag : std::uint8_t { Boolean, NonnegRational, Rational, GaussianRational };

/// CLI spelling of a tag: bool, qplus, q, qi.
std::string_view tag_name(SemiringTag tag);
SemiringTag parse_tag(std::string_view name);

/// Throws TagMismatchError when `a != b`.
void require_same_tag(SemiringTag a, SemiringTag b, std::string_view operation);

/// An exact semiring element. Rational parts are kept canonical by GMP
/// (lowest terms, positive denominator); the imaginary part is zero unless
/// the tag is GaussianRational, and Boolean values are exactly 0 or 1.
/// Values are immutable and shared between copies; zero holds no storage.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(SemiringTag tag);
  static Scalar one(SemiringTag tag);
  static Scalar boolean(bool bit);
  /// Real value in any tag; throws InvalidArgumentError if it does not
  /// belong to the semiring (negative for qplus, not 0/1 for bool).
  static Scalar real(SemiringTag tag, mpq_class value);
  static Scalar gaussian(mpq_class re, mpq_class im);

  SemiringTag tag() const noexcept { return tag_; }
  const mpq_class& re() const noexcept;
  const mpq_class& im() const noexcept;

  bool is_zero() const noexcept { return !value_; }
  bool is_one() const noexcept;
  bool is_real() const noexcept { return !value_ || sgn(value_->im) == 0; }

  /// Token form accepted by parse_scalar.
  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.tag_ != b.tag_) return false;
    if (a.value_ == b.value_) return true;
    if (!a.value_ || !b.value_) return false;
    return a.value_->re == b.value_->re && a.value_->im == b.value_->im;
  }

 private:
  struct Value {
    mpq_class re;
    mpq_class im;
  };

  Scalar(SemiringTag tag, mpq_class re, mpq_class im);

  friend Scalar scalar_add(const Scalar&, const Scalar&);
  friend Scalar scalar_mul(const Scalar&, const Scalar&);
  friend void accumulate_product(Scalar&, const Scalar&, const Scalar&);
  friend Scalar conjugate(const Scalar&);

  SemiringTag tag_ = SemiringTag::Rational;
  std::shared_ptr<const Value> value_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);

/// acc += a * b without intermediate temporaries. All three must share a tag;
/// this is the inner loop of matrix products and is not re-checked here.
void accumulate_product(Scalar& acc, const Scalar& a, const Scalar& b);

Scalar conjugate(const Scalar& a);

/// a * conjugate(a), real, in the tag of `a`. For Booleans this is `a`.
Scalar norm_square(const Scalar& a);

/// Parses one scalar token (no internal whitespace):
///   boolean  := '0' | '1'
///   rational := ['-'] digits ['/' digits]
///   gaussian := rational | rational 'i' | rational ('+'|'-') unsigned-rational 'i'
Scalar parse_scalar(std::string_view token, SemiringTag tag);

inline Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_add(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_mul(a, b); }

}  // namespace sft
