// Copyright 2026 The ddhlearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ddhlearn {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold (bad range, bad length, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A group parameterization violates the safe-prime / QR invariants.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// An enumeration or search exceeded its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An oracle was queried beyond its budget or outside its flavor.
class QueryBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A game participant broke the rules of the protocol (e.g. reused an exam
// string).
class ProtocolViolation : public Error {
 public:
  using Error::Error;
};

#define DDHLEARN_ENFORCE(cond, ExcType, msg) \
  do {                                       \
    if (!(cond)) {                           \
      throw ExcType(msg);                    \
    }                                        \
  } while (false)

}  // namespace ddhlearn
