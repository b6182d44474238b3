//
// Copyright 2026 The sentaug Authors
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
//

// Exception types shared across the library. The CLI maps them onto exit
// codes: ConfigError to 1, ParseError/StructureError/DataError to 2.

#ifndef SENTAUG_ERRORS_H_
#define SENTAUG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sentaug {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input line. `line` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                         : message),
        line_(line),
        message_(message) {}
  int line() const { return line_; }
  // The message without the line prefix.
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

// A sentence whose dependency annotation is not a single rooted tree.
class StructureError : public Error {
 public:
  StructureError(const std::string& sent_id, const std::string& message)
      : Error("sentence '" + sent_id + "': " + message), sent_id_(sent_id) {}
  const std::string& sent_id() const { return sent_id_; }

 private:
  std::string sent_id_;
};

// Invalid configuration value (temperature, rates, unknown keys, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Unreadable or malformed data file other than CoNLL-U.
class DataError : public Error {
 public:
  using Error::Error;
};

// Precondition violated by the caller, e.g. an empty token list.
class ContractError : public Error {
 public:
  using Error::Error;
};

// The requested quantity does not exist for the input: cosine of a zero
// vector, correlation of a constant list.
class UndefinedValueError : public Error {
 public:
  using Error::Error;
};

}  // namespace sentaug

#endif  // SENTAUG_ERRORS_H_
