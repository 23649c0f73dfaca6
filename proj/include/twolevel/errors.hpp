// Copyright 2026 The twolevel Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace twolevel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (d = 0, |mu| != 1, n out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input matrix failed the unitarity precondition.
class NotUnitaryError : public Error {
 public:
  using Error::Error;
};

/// Prescribed determinants are malformed or do not multiply to det(U).
class PrescriptionError : public Error {
 public:
  using Error::Error;
};

/// Pivot pair too small to build an elimination block from.
class DegeneratePivotError : public Error {
 public:
  using Error::Error;
};

/// Elimination plan step that cannot be carried out.
class PlanError : public Error {
 public:
  using Error::Error;
};

/// Restricted ordering misses an index the matrix acts on.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Two-level factor whose row labels differ in more or fewer than one bit.
class NotControlledGateError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace twolevel
