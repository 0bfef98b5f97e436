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
#include <vector>

#include "qgen/algorithm.h"

namespace qgen {

using Edge = std::pair<Qubit, Qubit>;

/// {(i, i+1 mod n)} for n >= 3; the single edge (0, 1) for n = 2.
std::vector<Edge> cyclic_graph(std::size_t n);

struct QaoaParams {
    std::size_t problem_size = 2;
    /// nullopt selects cyclic_graph.
    std::optional<std::vector<Edge>> edges;
    std::size_t reps = 1;
    /// Length `reps` each; nullopt draws from [0, 2 pi).
    std::optional<std::vector<double>> gammas;
    std::optional<std::vector<double>> betas;
    std::uint64_t seed = 0;
};

enum class Entanglement { full, linear, circular };

struct VqeParams {
    std::size_t problem_size = 2;
    /// Subset of {RX, RY, RZ}, applied in this order within a layer.
    std::vector<GateTag> rotations = {GateTag::RY, GateTag::RZ};
    Entanglement entanglement = Entanglement::full;
    std::size_t reps = 1;
    /// (reps + 1) * |rotations| * n angles, layer by layer; nullopt draws.
    std::optional<std::vector<double>> angles;
    std::uint64_t seed = 0;
};

struct VqcParams {
    std::size_t problem_size = 2;
    std::size_t fm_reps = 1;
    std::size_t vf_reps = 1;
    /// n features; nullopt draws from [0, 2 pi).
    std::optional<std::vector<double>> features;
    /// (vf_reps + 1) * n RY angles; nullopt draws.
    std::optional<std::vector<double>> angles;
    std::uint64_t seed = 0;
};

/// MaxCut QAOA: H layer, then per rep RZZ(gamma) per edge and RX(2 beta)
/// per qubit; measure all.
GenResult gen_qaoa(const QaoaParams &params);

/// Rotation layers alternating with CX entangling blocks; measure all.
GenResult gen_vqe(const VqeParams &params);

/// ZZ feature map followed by a linear RY/CX ansatz; measure all.
GenResult gen_vqc(const VqcParams &params);

std::string_view to_string(Entanglement e);
Entanglement parse_entanglement(std::string_view name);

}  // namespace qgen
