// Copyright 2026 The qreuse Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qreuse {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
   public:
    ParseError(const std::string &message, size_t line, size_t column)
        : Error(message), line(line), column(column) {}
    size_t line;
    size_t column;
};

/// Input text was well-formed but describes a circuit that fails validation.
class InvalidCircuit : public Error {
   public:
    using Error::Error;
};

/// Input is valid but outside what an operation accepts (e.g. compiling a
/// circuit that already contains mid-circuit measurement).
class UnsupportedInput : public Error {
   public:
    using Error::Error;
};

/// Exact simulation would exceed the configured width or gate arity limits.
class OracleLimitExceeded : public Error {
   public:
    using Error::Error;
};

/// The exact search hit its time limit before finding any feasible order.
class SearchTimeout : public Error {
   public:
    using Error::Error;
};

}  // namespace qreuse
