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

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "qgen/bits.h"
#include "qgen/error.h"
#include "qgen/number.h"
#include "qgen/rng.h"

namespace qgen {
namespace {

TEST(BitsTest, BitstringOrder) {
    EXPECT_EQ(to_bitstring(6, 4), "0110");
    EXPECT_EQ(to_bitstring(1, 3), "001");
    EXPECT_EQ(from_bitstring("0110"), 6u);
    EXPECT_EQ(from_bitstring(std::string(64, '1')), ~std::uint64_t{0});
    EXPECT_EQ(bits_of("110"), (std::vector<int>{0, 1, 1}));
    EXPECT_EQ(string_of({0, 1, 1}), "110");
    for (std::uint64_t v = 0; v < 256; ++v) {
        EXPECT_EQ(from_bitstring(to_bitstring(v, 8)), v);
        EXPECT_EQ(string_of(bits_of(to_bitstring(v, 8))), to_bitstring(v, 8));
    }
}

TEST(BitsTest, Validation) {
    EXPECT_THROW(from_bitstring("01a"), Error);
    EXPECT_THROW(from_bitstring(std::string(65, '0')), Error);
    EXPECT_THROW(check_bitstring("101", 4, "secret"), Error);
    EXPECT_THROW(check_bitstring("1021", 4, "secret"), Error);
    EXPECT_NO_THROW(check_bitstring("1011", 4, "secret"));
    try {
        check_bitstring("1", 2, "secret");
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
        EXPECT_NE(std::string(e.what()).find("secret"), std::string::npos);
    }
}

std::uint64_t slow_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    for (std::uint64_t i = 0; i < e; ++i) r = r * (a % m) % m;
    return r;
}

TEST(NumberTest, ModPowMatchesRepeatedProduct) {
    for (std::uint64_t m = 1; m < 60; ++m) {
        for (std::uint64_t a = 0; a < 70; a += 3) {
            for (std::uint64_t e = 0; e < 40; e += 7) {
                EXPECT_EQ(mod_pow(a, e, m), slow_pow(a, e, m)) << a << "^" << e << " mod " << m;
            }
        }
    }
    // Fermat with a modulus near 2^64.
    const std::uint64_t p = 18446744073709551557ULL;
    EXPECT_EQ(mod_pow(123456789, p - 1, p), 1u);
}

TEST(NumberTest, ModInverse) {
    for (std::uint64_t m = 2; m < 80; ++m) {
        for (std::uint64_t a = 0; a < m; ++a) {
            const auto inv = mod_inverse(a, m);
            if (std::gcd(a, m) == 1) {
                ASSERT_TRUE(inv.has_value());
                EXPECT_LT(*inv, m);
                EXPECT_EQ(a * *inv % m, 1 % m);
            } else {
                EXPECT_FALSE(inv.has_value());
            }
        }
    }
}

TEST(NumberTest, PrimalityAgainstTrialDivision) {
    auto trial = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    };
    for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial(n)) << n;
    EXPECT_TRUE(is_prime(18446744073709551557ULL));
    EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST(NumberTest, PerfectPower) {
    std::map<std::uint64_t, std::pair<std::uint64_t, unsigned>> expected;
    for (std::uint64_t m = 2; m < 100; ++m) {
        std::uint64_t v = m * m;
        for (unsigned k = 2; v < 10000; ++k, v *= m) {
            auto it = expected.find(v);
            // Keep the largest exponent.
            if (it == expected.end() || it->second.second < k) expected[v] = {m, k};
        }
    }
    for (std::uint64_t n = 0; n < 10000; ++n) {
        const auto got = perfect_power(n);
        auto it = expected.find(n);
        if (it == expected.end()) {
            EXPECT_FALSE(got.has_value()) << n;
        } else {
            ASSERT_TRUE(got.has_value()) << n;
            EXPECT_EQ(*got, it->second) << n;
        }
    }
}

TEST(NumberTest, BitLength) {
    EXPECT_EQ(bit_length(0), 0u);
    EXPECT_EQ(bit_length(1), 1u);
    EXPECT_EQ(bit_length(15), 4u);
    EXPECT_EQ(bit_length(16), 5u);
    EXPECT_EQ(bit_length(~std::uint64_t{0}), 64u);
}

TEST(RngTest, SeededStreamsRepeat) {
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        EXPECT_EQ(x, b.next());
        differs |= x != c.next();
    }
    EXPECT_TRUE(differs);
}

TEST(RngTest, BelowStaysInRangeAndCoversIt) {
    Rng r(1);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto v = r.below(7);
        ASSERT_LT(v, 7u);
        seen.insert(v);
    }
    EXPECT_EQ(seen.size(), 7u);
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(RngTest, DeriveSeedIsOrderSensitive) {
    EXPECT_EQ(derive_seed({1, 2, 3}), derive_seed({1, 2, 3}));
    EXPECT_NE(derive_seed({1, 2, 3}), derive_seed({3, 2, 1}));
    EXPECT_NE(derive_seed({0}), derive_seed({0, 0}));
    EXPECT_EQ(stable_hash(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(stable_hash("a"), 0xaf63dc4c8601ec8cULL);
}

}  // namespace
}  // namespace qgen
