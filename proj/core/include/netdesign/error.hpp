// Copyright 2026 The netdesign Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETDESIGN_ERROR_HPP_
#define NETDESIGN_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netdesign {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something that violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list or network file. Carries the offending token and the
// 1-based line/column where it starts.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token, std::size_t line,
             std::size_t column);

  const std::string& token() const { return token_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string token_;
  std::size_t line_;
  std::size_t column_;
};

// The automorphism group grew past the configured element cap.
class GroupTooLarge : public Error {
 public:
  GroupTooLarge(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// Eigendecomposition of an information matrix did not converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace netdesign

#endif  // NETDESIGN_ERROR_HPP_
