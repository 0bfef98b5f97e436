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

#include "gen_common.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "qgen/error.h"

namespace qgen::detail {

void require_min_size(std::size_t size, std::size_t minimum, std::string_view what) {
    if (size < minimum) {
        fail(ErrorKind::invalid_argument, std::string(what) + " must be at least " +
                                              std::to_string(minimum) + ", got " +
                                              std::to_string(size));
    }
}

GenResult make_result(Algorithm algo, std::size_t size, std::uint64_t seed, Circuit circuit,
                      nlohmann::json params, nlohmann::json hidden) {
    circuit.set_info({std::string(algorithm_id(algo)), std::string(category_of(algo)), seed});
    AlgoMetadata meta;
    meta.algorithm = algo;
    meta.problem_size = size;
    meta.seed = seed;
    meta.params = std::move(params);
    meta.hidden = std::move(hidden);
    return GenResult{std::move(circuit), std::move(meta)};
}

std::vector<std::uint64_t> sample_distinct(Rng &rng, std::size_t width, std::uint64_t count) {
    if (width >= 63) {
        fail(ErrorKind::resource_limit, "cannot sample marked states over 63 bits or more");
    }
    const std::uint64_t space = std::uint64_t{1} << width;
    if (count > space) {
        fail(ErrorKind::invalid_argument, "asked for " + std::to_string(count) +
                                              " distinct states out of " + std::to_string(space));
    }
    std::vector<std::uint64_t> out;
    out.reserve(count);
    if (count * 2 > space) {
        std::vector<std::uint64_t> all(space);
        std::iota(all.begin(), all.end(), std::uint64_t{0});
        for (std::uint64_t i = 0; i < count; ++i) {
            std::swap(all[i], all[i + rng.below(space - i)]);
            out.push_back(all[i]);
        }
        return out;
    }
    std::set<std::uint64_t> seen;
    while (out.size() < count) {
        const auto v = rng.below(space);
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

std::vector<int> random_bits(Rng &rng, std::size_t n) {
    std::vector<int> bits(n);
    for (auto &b : bits) b = rng.coin() ? 1 : 0;
    return bits;
}

void x_wrap(Circuit &c, const std::vector<Qubit> &qubits, std::uint64_t pattern) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (((pattern >> i) & 1) == 0) c.push(gates::x(qubits[i]));
    }
}

std::vector<Qubit> qubit_range(Qubit first, std::size_t count) {
    std::vector<Qubit> out(count);
    std::iota(out.begin(), out.end(), first);
    return out;
}

}  // namespace qgen::detail
