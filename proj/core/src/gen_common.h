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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgen/algorithm.h"
#include "qgen/rng.h"

namespace qgen::detail {

void require_min_size(std::size_t size, std::size_t minimum, std::string_view what);

GenResult make_result(Algorithm algo, std::size_t size, std::uint64_t seed, Circuit circuit,
                      nlohmann::json params, nlohmann::json hidden);

/// `count` distinct values from [0, 2^width), in draw order.
std::vector<std::uint64_t> sample_distinct(Rng &rng, std::size_t width, std::uint64_t count);

std::vector<int> random_bits(Rng &rng, std::size_t n);

/// Applies X to every qubit in `qubits` whose bit in `pattern` is 0.
void x_wrap(Circuit &c, const std::vector<Qubit> &qubits, std::uint64_t pattern);

std::vector<Qubit> qubit_range(Qubit first, std::size_t count);

}  // namespace qgen::detail
