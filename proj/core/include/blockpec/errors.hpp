// Copyright 2026 The blockpec Authors
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

#include <stdexcept>
#include <string>

namespace blockpec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedGate : public Error {
 public:
  using Error::Error;
};

/// Conjugating a Z-string through a gate did not yield a Z-string.
class NotZClosed : public Error {
 public:
  NotZClosed(std::string gate, std::string input_string)
      : Error("gate " + gate + " maps Z-string " + input_string +
              " outside the Z-string group"),
        gate_(std::move(gate)),
        input_(std::move(input_string)) {}

  const std::string& gate() const noexcept { return gate_; }
  const std::string& input_string() const noexcept { return input_; }

 private:
  std::string gate_;
  std::string input_;
};

class SingularChannel : public Error {
 public:
  using Error::Error;
};

class UnsupportedKind : public Error {
 public:
  using Error::Error;
};

/// A size guard (qubit count, enumeration size) was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class DegenerateVector : public Error {
 public:
  using Error::Error;
};

class InvalidSamples : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace blockpec
