// Copyright 2026 The pfpower Authors
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

#ifndef PFPOWER_ERRORS_H_
#define PFPOWER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pfpower {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input refers to unknown players, overlapping blocks, mismatched player
// sets and similar structural problems.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

// A document or table failed validation. `path()` names the offending field
// (for example "players[2].weight"); it is empty when no field applies.
class ValidationError : public Error {
 public:
  ValidationError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// The game is well formed but cannot be evaluated as configured, e.g. the
// vote tie-break is requested without vote data.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// Player count exceeds the enumeration limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A characteristic-form operation was applied to a partition-form game or
// vice versa.
class FormMismatchError : public Error {
 public:
  using Error::Error;
};

class AntichainViolationError : public Error {
 public:
  using Error::Error;
};

// Power indices are undefined for the game (empty minimal winning set or a
// zero weight denominator).
class DegenerateGameError : public Error {
 public:
  using Error::Error;
};

class NotMergeableError : public Error {
 public:
  using Error::Error;
};

// Syntax error in an input document, with 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pfpower

#endif  // PFPOWER_ERRORS_H_
