// Copyright 2026 The dconv Authors
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

#ifndef DCONV_ERROR_HPP_
#define DCONV_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dconv {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A well-formed request whose result would be empty (and is therefore
/// reported instead of silently returned).
class EmptyResultError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad document, wrong object kind for a class label,
/// lifted object where a finite one is required, and so on.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic left the representable range, or an undefined
/// operation on +inf was requested.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace dconv

#endif  // DCONV_ERROR_HPP_
