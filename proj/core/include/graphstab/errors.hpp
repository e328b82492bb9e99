// Copyright 2026 The graphstab Authors. All Rights Reserved.
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

#ifndef GRAPHSTAB_ERRORS_HPP_
#define GRAPHSTAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace graphstab {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller mixed incompatible operands (different fields, ambient sizes, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in GF(p)") {}
};

/// Input data violates a structural invariant (graph block form, isotropy, file schema).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search or dense simulation would exceed its hard size bound.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// No canonical stabilizer character exists for the requested graph
/// (GF(2) with loops on output vertices).
class UnsupportedCharacter : public Error {
 public:
  using Error::Error;
};

/// A self-check on a construction failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphstab

#endif  // GRAPHSTAB_ERRORS_HPP_
