// Copyright 2026 The qgen Authors
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
#include <string_view>

namespace qgen {

enum class ErrorKind {
    invalid_argument,
    invalid_instruction,
    not_invertible,
    requires_trajectory,
    resource_limit,
    parse_error,
    unsupported_feature,
    io_error,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Raised by the QASM reader; line and column are 1-based.
class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string &message);

    std::size_t line() const noexcept {
        return line_;
    }
    std::size_t column() const noexcept {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

}  // namespace qgen
