// Copyright 2026 The asnkit Authors
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

namespace asnkit {

/// Base class for every domain failure reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed treebank input. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::string source, int line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line),
        detail_(message) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string source_;
  int line_;
  std::string detail_;
};

}  // namespace asnkit
