// Copyright 2026 The mubhadamard Authors
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

#ifndef HADAMARD_ERRORS_HPP
#define HADAMARD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hadamard {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

class InvalidRescaleError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// An entry is not of modulus 1/sqrt(d).
class NotHadamardFormError : public Error {
 public:
  using Error::Error;
};

/// Dephased entries are not all roots of unity.
class NotButsonError : public Error {
 public:
  using Error::Error;
};

/// K[m] is not mutually unbiased to L[n].
class MuViolationError : public Error {
 public:
  MuViolationError(std::size_t m, std::size_t n)
      : Error("K[" + std::to_string(m) + "] is not mutually unbiased to L[" +
              std::to_string(n) + "]"),
        k_index(m),
        l_index(n) {}
  std::size_t k_index;
  std::size_t l_index;
};

/// The singular-value gap at the rank cut is too narrow to trust.
class IndeterminateRankError : public Error {
 public:
  using Error::Error;
};

class SearchSpaceError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or unknown names in an input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; always a library bug.
class ConstructionBug : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hadamard

#endif  // HADAMARD_ERRORS_HPP
