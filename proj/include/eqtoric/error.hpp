// Copyright 2026 The eqtoric Authors
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

#ifndef EQTORIC_ERROR_HPP_
#define EQTORIC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace eqtoric {

// Base class of everything the library throws. Callers that only care about
// "bad input" versus "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments of an operation does not hold
// (non-square matrix, vertex out of range, singular anchor cone, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The input violates a structural invariant of a domain type.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Malformed fan document. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace eqtoric

#endif  // EQTORIC_ERROR_HPP_
