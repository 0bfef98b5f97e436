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

#include "qgen/number.h"

#include <bit>
#include <cmath>

namespace qgen {

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    uint128 result = 1, base = a % m;
    while (e > 0) {
        if (e & 1) result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m) {
    int128 old_r = static_cast<int128>(a % m), r = m;
    int128 old_s = 1, s = 0;
    while (r != 0) {
        const int128 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) return std::nullopt;
    int128 inv = old_s % static_cast<int128>(m);
    if (inv < 0) inv += m;
    return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a deterministic Miller-Rabin witness set below 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = static_cast<std::uint64_t>(static_cast<uint128>(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> perfect_power(std::uint64_t n) {
    if (n < 4) return std::nullopt;
    for (unsigned k = 63; k >= 2; --k) {
        auto m = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
        for (std::uint64_t cand : {m - 1, m, m + 1}) {
            if (cand < 2) continue;
            uint128 v = 1;
            for (unsigned i = 0; i < k && v <= n; ++i) v *= cand;
            if (v == n) return std::make_pair(cand, k);
        }
    }
    return std::nullopt;
}

unsigned bit_length(std::uint64_t n) {
    return static_cast<unsigned>(std::bit_width(n));
}

}  // namespace qgen
