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

#include "sft/semiring.hpp"

#include <algorithm>
#include <utility>

#include "sft/errors.hpp"

namespace sft {

std::string_view tag_name(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::Boolean:
      return "bool";
    case SemiringTag::NonnegRational:
      return "qplus";
    case SemiringTag::Rational:
      return "q";
    case SemiringTag::GaussianRational:
      return "qi";
  }
  return "?";
}

SemiringTag parse_tag(std::string_view name) {
  if (name == "bool") return SemiringTag::Boolean;
  if (name == "qplus") return SemiringTag::NonnegRational;
  if (name == "q") return SemiringTag::Rational;
  if (name == "qi") return SemiringTag::GaussianRational;
  throw InvalidArgumentError("unknown semiring '" + std::string(name) + "' (expected bool, qplus, q or qi)");
}

void require_same_tag(SemiringTag a, SemiringTag b, std::string_view operation) {
  if (a != b) {
    throw TagMismatchError(std::string(operation) + ": semiring mismatch (" + std::string(tag_name(a)) +
                           " vs " + std::string(tag_name(b)) + ")");
  }
}

namespace {

const mpq_class& rational_zero() {
  static const mpq_class zero;
  return zero;
}

}  // namespace

Scalar::Scalar(SemiringTag tag, mpq_class re, mpq_class im) : tag_(tag) {
  if (sgn(re) != 0 || sgn(im) != 0) value_ = std::make_shared<const Value>(Value{std::move(re), std::move(im)});
}

const mpq_class& Scalar::re() const noexcept { return value_ ? value_->re : rational_zero(); }
const mpq_class& Scalar::im() const noexcept { return value_ ? value_->im : rational_zero(); }

bool Scalar::is_one() const noexcept { return value_ && value_->re == 1 && sgn(value_->im) == 0; }

Scalar Scalar::zero(SemiringTag tag) {
  Scalar s;
  s.tag_ = tag;
  return s;
}

Scalar Scalar::one(SemiringTag tag) {
  static const std::shared_ptr<const Value> unit = std::make_shared<const Value>(Value{mpq_class(1), mpq_class(0)});
  Scalar s;
  s.tag_ = tag;
  s.value_ = unit;
  return s;
}

Scalar Scalar::boolean(bool bit) { return bit ? one(SemiringTag::Boolean) : zero(SemiringTag::Boolean); }

Scalar Scalar::real(SemiringTag tag, mpq_class value) {
  value.canonicalize();
  if (tag == SemiringTag::Boolean && value != 0 && value != 1) {
    throw InvalidArgumentError("Boolean scalar must be 0 or 1, got " + value.get_str());
  }
  if (tag == SemiringTag::NonnegRational && sgn(value) < 0) {
    throw InvalidArgumentError("negative value " + value.get_str() + " is not in qplus");
  }
  if (value == 1) return one(tag);
  return Scalar(tag, std::move(value), mpq_class(0));
}

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  if (re == 1 && sgn(im) == 0) return one(SemiringTag::GaussianRational);
  return Scalar(SemiringTag::GaussianRational, std::move(re), std::move(im));
}

std::string Scalar::to_string() const {
  const mpq_class& r = re();
  const mpq_class& i = im();
  if (sgn(i) == 0) return r.get_str();
  std::string imag = mpq_class(abs(i)).get_str() + "i";
  if (sgn(r) == 0) return (sgn(i) < 0 ? "-" : "") + imag;
  return r.get_str() + (sgn(i) < 0 ? "-" : "+") + imag;
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
  require_same_tag(a.tag_, b.tag_, "add");
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  if (a.tag_ == SemiringTag::Boolean) return Scalar::one(a.tag_);
  if (a.tag_ == SemiringTag::GaussianRational) return Scalar(a.tag_, a.re() + b.re(), a.im() + b.im());
  return Scalar(a.tag_, a.re() + b.re(), mpq_class(0));
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
  require_same_tag(a.tag_, b.tag_, "mul");
  if (a.is_zero() || b.is_zero()) return Scalar::zero(a.tag_);
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.tag_ == SemiringTag::GaussianRational) {
    return Scalar(a.tag_, a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
  }
  return Scalar(a.tag_, a.re() * b.re(), mpq_class(0));
}

void accumulate_product(Scalar& acc, const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (acc.tag_ == SemiringTag::Boolean) {
    acc = Scalar::one(acc.tag_);
    return;
  }
  if (acc.is_zero()) {
    if (a.is_one()) {
      acc.value_ = b.value_;
      return;
    }
    if (b.is_one()) {
      acc.value_ = a.value_;
      return;
    }
  }
  acc = scalar_add(acc, scalar_mul(a, b));
}

Scalar conjugate(const Scalar& a) {
  if (a.tag_ != SemiringTag::GaussianRational || a.is_real()) return a;
  return Scalar(a.tag_, a.re(), -a.im());
}

Scalar norm_square(const Scalar& a) {
  if (a.tag() == SemiringTag::Boolean) return a;
  if (a.tag() == SemiringTag::GaussianRational) {
    return Scalar::gaussian(a.re() * a.re() + a.im() * a.im(), 0);
  }
  return Scalar::real(a.tag(), a.re() * a.re());
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// ['-'] digits ['/' digits]; `allow_sign` false gives unsigned-rational.
mpq_class parse_rational(std::string_view text, std::string_view whole, bool allow_sign) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("invalid scalar '" + std::string(whole) + "': " + why, 0);
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    if (!allow_sign) throw fail("unexpected sign");
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw fail("malformed denominator");
  }
  if (!all_digits(num)) throw fail("malformed numerator");
  mpq_class q;
  q.get_num() = mpz_class(std::string(num), 10);
  q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (sgn(q.get_den()) == 0) throw fail("zero denominator");
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

}  // namespace

Scalar parse_scalar(std::string_view token, SemiringTag tag) {
  switch (tag) {
    case SemiringTag::Boolean:
      if (token == "0" || token == "1") return Scalar::boolean(token == "1");
      throw ParseError("invalid Boolean scalar '" + std::string(token) + "'", 0);
    case SemiringTag::NonnegRational: {
      mpq_class q = parse_rational(token, token, true);
      if (sgn(q) < 0) throw ParseError("negative scalar '" + std::string(token) + "' is not in qplus", 0);
      return Scalar::real(tag, std::move(q));
    }
    case SemiringTag::Rational:
      return Scalar::real(tag, parse_rational(token, token, true));
    case SemiringTag::GaussianRational: {
      if (token.empty() || token.back() != 'i') {
        return Scalar::gaussian(parse_rational(token, token, true), 0);
      }
      std::string_view body = token.substr(0, token.size() - 1);
      std::size_t split = std::string_view::npos;
      for (std::size_t i = 1; i < body.size(); ++i) {
        if (body[i] == '+' || body[i] == '-') {
          split = i;
          break;
        }
      }
      if (split == std::string_view::npos) {
        return Scalar::gaussian(0, parse_rational(body, token, true));
      }
      mpq_class re = parse_rational(body.substr(0, split), token, true);
      mpq_class im = parse_rational(body.substr(split + 1), token, false);
      if (body[split] == '-') im = -im;
      return Scalar::gaussian(std::move(re), std::move(im));
    }
  }
  throw InvalidArgumentError("unknown semiring tag");
}

}  // namespace sft
