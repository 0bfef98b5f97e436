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
#include <span>
#include <variant>

#include "qgen/algorithm.h"
#include "qgen/postprocess.h"

namespace qgen {

/// Appends the QFT on `reg` (reg[0] least significant), including the final
/// qubit reversal, so that |x> maps to sum_y e^{2 pi i x y / 2^n} |y>.
/// `inverse` appends the adjoint instead.
void append_qft(Circuit &circuit, std::span<const Qubit> reg, bool inverse = false);

struct QftParams {
    std::size_t problem_size = 2;
    /// Prepare the Fourier image of `init_value` before the transform.
    bool initialize = true;
    /// nullopt draws the value from the seed.
    std::optional<std::uint64_t> init_value;
    bool inverse = true;
    bool measure = true;
    std::uint64_t seed = 0;
};

enum class QpeMode { repeat, fused };

struct QpeParams {
    std::size_t problem_size = 3;  // counting qubits t
    double theta = 0.125;          // phase as a fraction of a full turn
    QpeMode mode = QpeMode::repeat;
    std::uint64_t seed = 0;
};

struct ShorParams {
    std::uint64_t N = 15;
    /// nullopt draws uniformly from the residues in (1, N) coprime to N.
    std::optional<std::uint64_t> a;
    std::uint64_t seed = 0;
};

/// With initialize + inverse + measure the outcome is the initial value.
GenResult gen_qft(const QftParams &params);

/// Counting qubits 0..t-1, eigenstate qubit t prepared in |1>; the unitary
/// is PHASE(2 pi theta).
GenResult gen_qpe(const QpeParams &params);

/// Phase-space addition of a classical constant on a register that is
/// already in the Fourier basis. Angles are reduced modulo 2^width and zero
/// rotations are dropped, so add(0) and add(2^width) are empty.
Circuit build_qft_const_adder(std::int64_t value, std::size_t width);

/// Singly controlled y -> y * a_power mod N for y < N.
/// Layout: qubit 0 control, 1..n target y, n+1..2n+1 scratch (n+1 qubits,
/// must start at 0), 2n+2 comparison ancilla (starts at 0). Width 2n+3.
Circuit build_c_modmul(std::uint64_t a_power, std::uint64_t N, std::size_t n);

/// Period finding for N with base a, 4n+2 qubits for n = bit_length(N):
/// counting 0..2n-1, target 2n..3n-1 (starts at |1>), scratch 3n..4n,
/// ancilla 4n+1. Inputs settled by classical screening come back as a
/// FactorResult with no circuit.
std::variant<GenResult, FactorResult> gen_shor(const ShorParams &params);

}  // namespace qgen
