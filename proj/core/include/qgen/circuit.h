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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgen {

using Qubit = std::uint32_t;
using Clbit = std::uint32_t;

enum class GateTag : std::uint8_t {
    I,
    H,
    X,
    Y,
    Z,
    S,
    SDG,
    T,
    TDG,
    RX,
    RY,
    RZ,
    PHASE,
    U3,
    CX,
    CZ,
    CPHASE,
    RZZ,
    SWAP,
    MCX,
    MCPHASE,
    MEASURE,
    BARRIER,
};

inline constexpr std::size_t kNumGateTags = 23;

/// Number of angle parameters carried by a tag.
std::size_t angle_arity(GateTag tag) noexcept;

/// Lower-case mnemonic, also used in diagnostics ("h", "cx", "mcphase", ...).
std::string_view gate_name(GateTag tag) noexcept;

/// True for the one-qubit unitary tags (I through U3).
bool is_single_qubit(GateTag tag) noexcept;

/// One gate application. For MCX/MCPHASE the controls come first and the
/// target is the last qubit.
struct Instruction {
    GateTag tag = GateTag::I;
    std::vector<double> params;
    std::vector<Qubit> qubits;
    std::vector<Clbit> clbits;

    bool operator==(const Instruction &) const = default;

    Qubit target() const {
        return qubits.back();
    }
    std::span<const Qubit> controls() const {
        return std::span<const Qubit>(qubits).first(qubits.size() - 1);
    }
};

/// Instruction factories. None of these validate against a circuit; that
/// happens on append.
namespace gates {
Instruction id(Qubit q);
Instruction h(Qubit q);
Instruction x(Qubit q);
Instruction y(Qubit q);
Instruction z(Qubit q);
Instruction s(Qubit q);
Instruction sdg(Qubit q);
Instruction t(Qubit q);
Instruction tdg(Qubit q);
Instruction rx(double theta, Qubit q);
Instruction ry(double theta, Qubit q);
Instruction rz(double theta, Qubit q);
Instruction phase(double lambda, Qubit q);
Instruction u3(double theta, double phi, double lambda, Qubit q);
Instruction cx(Qubit control, Qubit target);
Instruction cz(Qubit control, Qubit target);
Instruction cphase(double lambda, Qubit control, Qubit target);
Instruction rzz(double theta, Qubit a, Qubit b);
Instruction swap(Qubit a, Qubit b);
Instruction mcx(std::vector<Qubit> controls, Qubit target);
Instruction mcphase(double lambda, std::vector<Qubit> controls, Qubit target);
Instruction measure(Qubit q, Clbit c);
Instruction barrier(std::vector<Qubit> qubits);
}  // namespace gates

/// Provenance attached to generated circuits.
struct CircuitInfo {
    std::string algorithm;
    std::string category;
    std::uint64_t seed = 0;

    bool operator==(const CircuitInfo &) const = default;
};

/// Ordered instruction list over a qubit and a classical register.
///
/// The mutating `push` family is the builder interface used while a circuit
/// is being assembled; the free functions below treat circuits as values.
class Circuit {
   public:
    Circuit(std::size_t num_qubits, std::size_t num_clbits = 0);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t num_clbits() const noexcept {
        return num_clbits_;
    }
    const std::vector<Instruction> &instructions() const noexcept {
        return instructions_;
    }
    std::size_t size() const noexcept {
        return instructions_.size();
    }
    bool empty() const noexcept {
        return instructions_.empty();
    }
    auto begin() const noexcept {
        return instructions_.begin();
    }
    auto end() const noexcept {
        return instructions_.end();
    }

    const std::optional<CircuitInfo> &info() const noexcept {
        return info_;
    }
    void set_info(CircuitInfo info) {
        info_ = std::move(info);
    }

    /// Validates and appends. Throws Error{invalid_instruction}.
    Circuit &push(Instruction instr);

    /// Appends every instruction of `other`, remapping its qubit i to
    /// `qubit_map[i]` and clbit j to `clbit_map[j]` (identity when empty).
    Circuit &push_circuit(const Circuit &other, std::span<const Qubit> qubit_map = {},
                          std::span<const Clbit> clbit_map = {});

    /// Checks every Instruction invariant against this circuit's sizes.
    void validate(const Instruction &instr) const;

    bool same_instructions(const Circuit &other) const {
        return num_qubits_ == other.num_qubits_ && num_clbits_ == other.num_clbits_ &&
               instructions_ == other.instructions_;
    }

   private:
    std::size_t num_qubits_;
    std::size_t num_clbits_;
    std::vector<Instruction> instructions_;
    std::optional<CircuitInfo> info_;
};

struct GateCensus {
    std::size_t width = 0;
    std::size_t depth = 0;
    std::size_t single_qubit_gates = 0;
    std::size_t cnot_gates = 0;
    std::size_t measure_gates = 0;
    bool has_mid_circuit_measure = false;

    bool operator==(const GateCensus &) const = default;
};

Circuit new_circuit(std::size_t num_qubits, std::size_t num_clbits);
Circuit append(const Circuit &circuit, Instruction instr);

/// Longest chain of instructions sharing a qubit or clbit. Barriers align
/// their operands without adding a layer.
std::size_t depth(const Circuit &circuit);

/// True iff some MEASURE is followed by a non-measure gate on its qubit.
bool has_mid_circuit_measure(const Circuit &circuit);

/// Gate statistics of the basis-decomposed circuit.
GateCensus census(const Circuit &circuit);

/// Census of a circuit that is already in the {1q, CX} basis.
GateCensus census_of_basis(const Circuit &circuit);

/// Reversed adjoint. Barriers keep their (mirrored) position; a MEASURE
/// throws Error{not_invertible}.
Circuit inverse(const Circuit &circuit);

/// `a` followed by `b`. Widths must match; clbits become the larger count.
Circuit compose(const Circuit &a, const Circuit &b);

/// Copy with every MEASURE removed (barriers kept).
Circuit without_measurements(const Circuit &circuit);

/// Adjoint of one unitary instruction.
Instruction adjoint(const Instruction &instr);

}  // namespace qgen
