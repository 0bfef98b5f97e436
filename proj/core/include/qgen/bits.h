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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qgen {

/// Bitstrings follow histogram order: the last character is bit 0.
std::string to_bitstring(std::uint64_t value, std::size_t width);

/// Parses a '0'/'1' string of at most 64 characters. Throws invalid_argument.
std::uint64_t from_bitstring(std::string_view text);

/// bits[q] is the character at position size-1-q.
std::vector<int> bits_of(std::string_view text);
std::string string_of(const std::vector<int> &bits);

/// Checks a '0'/'1' string of exactly `width` characters; `what` names the
/// parameter in the error message.
void check_bitstring(std::string_view text, std::size_t width, std::string_view what);

}  // namespace qgen
