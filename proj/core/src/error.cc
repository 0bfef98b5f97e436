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

#include "qgen/error.h"

namespace qgen {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument:
            return "invalid-argument";
        case ErrorKind::invalid_instruction:
            return "invalid-instruction";
        case ErrorKind::not_invertible:
            return "not-invertible";
        case ErrorKind::requires_trajectory:
            return "requires-trajectory";
        case ErrorKind::resource_limit:
            return "resource-limit";
        case ErrorKind::parse_error:
            return "parse-error";
        case ErrorKind::unsupported_feature:
            return "unsupported-feature";
        case ErrorKind::io_error:
            return "io-error";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message)
    : Error(ErrorKind::parse_error,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace qgen
