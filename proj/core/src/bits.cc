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

#include "qgen/bits.h"

#include "qgen/error.h"

namespace qgen {

std::string to_bitstring(std::uint64_t value, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t i = 0; i < width && i < 64; ++i) {
        if ((value >> i) & 1) out[width - 1 - i] = '1';
    }
    return out;
}

std::uint64_t from_bitstring(std::string_view text) {
    if (text.size() > 64) {
        fail(ErrorKind::invalid_argument, "bitstring longer than 64 bits");
    }
    std::uint64_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            fail(ErrorKind::invalid_argument, "bitstring '" + std::string(text) + "' has a non-binary character");
        }
        v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

std::vector<int> bits_of(std::string_view text) {
    std::vector<int> bits(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        bits[q] = text[text.size() - 1 - q] == '1' ? 1 : 0;
    }
    return bits;
}

std::string string_of(const std::vector<int> &bits) {
    std::string out(bits.size(), '0');
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q]) out[bits.size() - 1 - q] = '1';
    }
    return out;
}

void check_bitstring(std::string_view text, std::size_t width, std::string_view what) {
    if (text.size() != width) {
        fail(ErrorKind::invalid_argument, std::string(what) + " must have " + std::to_string(width) +
                                              " bits, got '" + std::string(text) + "'");
    }
    if (text.find_first_not_of("01") != std::string_view::npos) {
        fail(ErrorKind::invalid_argument,
             std::string(what) + " '" + std::string(text) + "' must contain only 0 and 1");
    }
}

}  // namespace qgen
