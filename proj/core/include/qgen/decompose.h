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
#include <functional>

#include "qgen/circuit.h"

namespace qgen {

/// Rewrites a circuit over {one-qubit gates, CX, MEASURE, BARRIER}.
///
/// Rules: RZZ(t) -> CX, RZ(t), CX. CZ -> H, CX, H. SWAP -> 3 CX.
/// CPHASE(l) -> RZ(l/2) on the control, CX, RZ(-l/2), CX, RZ(l/2) on the
/// target. Toffoli uses the 6-CX Clifford+T network. Wider MCX gates borrow
/// idle qubits of the circuit as dirty ancillas (linear size); with no idle
/// qubit they fall back to H * MCPHASE(pi) * H. MCPHASE recurses through
/// controlled square roots, borrowing its own target for the inner MCX;
/// MCPHASE(pi) with three or more controls and an idle qubit is H * MCX * H.
///
/// No extra qubits are ever added. The unitary is preserved up to a global
/// phase.
Circuit decompose_to_basis(const Circuit &circuit);

/// Streams the basis gates of one instruction into `sink`. `width` is the
/// width of the enclosing circuit (idle qubits may be borrowed).
void decompose_instruction(const Instruction &instr, std::size_t width,
                           const std::function<void(Instruction &&)> &sink);

/// Basis gate counts without materializing the decomposed circuit.
struct BasisCost {
    std::size_t single_qubit = 0;
    std::size_t cnot = 0;
    std::size_t other = 0;  // measures and barriers

    std::size_t total() const {
        return single_qubit + cnot + other;
    }
    BasisCost &operator+=(const BasisCost &o) {
        single_qubit += o.single_qubit;
        cnot += o.cnot;
        other += o.other;
        return *this;
    }
};

BasisCost basis_cost(const Circuit &circuit);

}  // namespace qgen
