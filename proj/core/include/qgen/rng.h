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
#include <initializer_list>
#include <random>
#include <string_view>

namespace qgen {

/// SplitMix64 finalizer. Stable across platforms, used for seed derivation.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Folds a sequence of words into one seed. Order matters.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) noexcept;

/// FNV-1a over bytes; stable hash for string keys such as algorithm ids.
std::uint64_t stable_hash(std::string_view text) noexcept;

/// Seedable generator. Distributions are computed from raw 64-bit draws so
/// that streams are identical across standard library implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    bool coin() {
        return (engine_() >> 63) != 0;
    }

    /// Child stream; does not disturb the parent beyond one draw.
    Rng split() {
        return Rng(mix64(engine_()));
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qgen
