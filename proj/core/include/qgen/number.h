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

#include <cstdint>
#include <optional>
#include <utility>

namespace qgen {

__extension__ using uint128 = unsigned __int128;
__extension__ using int128 = __int128;

/// a^e mod m with 128-bit intermediates.
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Inverse of a modulo m; nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m);

/// Deterministic for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// (m, k) with n = m^k for the largest such k >= 2, or nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> perfect_power(std::uint64_t n);

/// Number of bits needed to write n (bit_length(0) = 0).
unsigned bit_length(std::uint64_t n);

}  // namespace qgen
