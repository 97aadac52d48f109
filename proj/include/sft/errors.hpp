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
#include <stdexcept>
#include <string>

namespace sft {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands carry different semiring tags.
class TagMismatchError : public Error {
 public:
  using Error::Error;
};

/// Matrix orders are incompatible with the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value or name is outside the domain accepted by an operation.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `position()` is a byte offset into the parsed text
/// (or a 1-based line number for line-oriented formats).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at " + std::to_string(position) + ")"), detail_(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// Structurally well-formed input that violates a semantic constraint
/// (invalid formula order, non-OSL formula, invalid gate array).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An intermediate matrix would exceed the configured entry cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace sft
