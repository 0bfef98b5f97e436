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

#include "qgen/circuit.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "qgen/decompose.h"
#include "qgen/error.h"

namespace qgen {

namespace {

struct TagInfo {
    std::string_view name;
    std::size_t angles;
};

constexpr std::array<TagInfo, kNumGateTags> kTagInfo = {{
    {"id", 0},      {"h", 0},      {"x", 0},       {"y", 0},   {"z", 0},    {"s", 0},
    {"sdg", 0},     {"t", 0},      {"tdg", 0},     {"rx", 1},  {"ry", 1},   {"rz", 1},
    {"p", 1},       {"u3", 3},     {"cx", 0},      {"cz", 0},  {"cp", 1},   {"rzz", 1},
    {"swap", 0},    {"mcx", 0},    {"mcphase", 1}, {"measure", 0}, {"barrier", 0},
}};

std::string describe(const Instruction &instr) {
    std::string out(gate_name(instr.tag));
    for (auto q : instr.qubits) {
        out += " q" + std::to_string(q);
    }
    return out;
}

}  // namespace

std::size_t angle_arity(GateTag tag) noexcept {
    return kTagInfo[static_cast<std::size_t>(tag)].angles;
}

std::string_view gate_name(GateTag tag) noexcept {
    return kTagInfo[static_cast<std::size_t>(tag)].name;
}

bool is_single_qubit(GateTag tag) noexcept {
    return static_cast<std::uint8_t>(tag) <= static_cast<std::uint8_t>(GateTag::U3);
}

namespace gates {

namespace {
Instruction make(GateTag tag, std::vector<Qubit> qubits, std::vector<double> params = {}) {
    Instruction instr;
    instr.tag = tag;
    instr.params = std::move(params);
    instr.qubits = std::move(qubits);
    return instr;
}
}  // namespace

Instruction id(Qubit q) { return make(GateTag::I, {q}); }
Instruction h(Qubit q) { return make(GateTag::H, {q}); }
Instruction x(Qubit q) { return make(GateTag::X, {q}); }
Instruction y(Qubit q) { return make(GateTag::Y, {q}); }
Instruction z(Qubit q) { return make(GateTag::Z, {q}); }
Instruction s(Qubit q) { return make(GateTag::S, {q}); }
Instruction sdg(Qubit q) { return make(GateTag::SDG, {q}); }
Instruction t(Qubit q) { return make(GateTag::T, {q}); }
Instruction tdg(Qubit q) { return make(GateTag::TDG, {q}); }
Instruction rx(double theta, Qubit q) { return make(GateTag::RX, {q}, {theta}); }
Instruction ry(double theta, Qubit q) { return make(GateTag::RY, {q}, {theta}); }
Instruction rz(double theta, Qubit q) { return make(GateTag::RZ, {q}, {theta}); }
Instruction phase(double lambda, Qubit q) { return make(GateTag::PHASE, {q}, {lambda}); }
Instruction u3(double theta, double phi, double lambda, Qubit q) {
    return make(GateTag::U3, {q}, {theta, phi, lambda});
}
Instruction cx(Qubit control, Qubit target) { return make(GateTag::CX, {control, target}); }
Instruction cz(Qubit control, Qubit target) { return make(GateTag::CZ, {control, target}); }
Instruction cphase(double lambda, Qubit control, Qubit target) {
    return make(GateTag::CPHASE, {control, target}, {lambda});
}
Instruction rzz(double theta, Qubit a, Qubit b) { return make(GateTag::RZZ, {a, b}, {theta}); }
Instruction swap(Qubit a, Qubit b) { return make(GateTag::SWAP, {a, b}); }
Instruction mcx(std::vector<Qubit> controls, Qubit target) {
    controls.push_back(target);
    return make(GateTag::MCX, std::move(controls));
}
Instruction mcphase(double lambda, std::vector<Qubit> controls, Qubit target) {
    controls.push_back(target);
    return make(GateTag::MCPHASE, std::move(controls), {lambda});
}
Instruction measure(Qubit q, Clbit c) {
    Instruction instr = make(GateTag::MEASURE, {q});
    instr.clbits = {c};
    return instr;
}
Instruction barrier(std::vector<Qubit> qubits) { return make(GateTag::BARRIER, std::move(qubits)); }

}  // namespace gates

Circuit::Circuit(std::size_t num_qubits, std::size_t num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits) {
    if (num_qubits == 0) {
        fail(ErrorKind::invalid_argument, "a circuit needs at least one qubit");
    }
}

void Circuit::validate(const Instruction &instr) const {
    auto reject = [&](const std::string &why) {
        fail(ErrorKind::invalid_instruction, describe(instr) + ": " + why);
    };
    if (static_cast<std::size_t>(instr.tag) >= kNumGateTags) {
        reject("unknown gate tag");
    }
    if (instr.params.size() != angle_arity(instr.tag)) {
        reject("expected " + std::to_string(angle_arity(instr.tag)) + " angle(s), got " +
               std::to_string(instr.params.size()));
    }
    for (double a : instr.params) {
        if (!std::isfinite(a)) {
            reject("angles must be finite");
        }
    }
    const std::size_t n = instr.qubits.size();
    switch (instr.tag) {
        case GateTag::CX:
        case GateTag::CZ:
        case GateTag::CPHASE:
        case GateTag::RZZ:
        case GateTag::SWAP:
            if (n != 2) reject("expects 2 qubits");
            break;
        case GateTag::MCX:
        case GateTag::MCPHASE:
            if (n < 2) reject("expects at least one control and a target");
            break;
        case GateTag::BARRIER:
            if (n < 1) reject("barrier needs at least one qubit");
            break;
        default:
            if (n != 1) reject("expects exactly 1 qubit");
            break;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (instr.qubits[i] >= num_qubits_) {
            reject("qubit " + std::to_string(instr.qubits[i]) + " out of range for width " +
                   std::to_string(num_qubits_));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (instr.qubits[i] == instr.qubits[j]) {
                reject("duplicate qubit operand " + std::to_string(instr.qubits[i]));
            }
        }
    }
    if (instr.tag == GateTag::MEASURE) {
        if (instr.clbits.size() != 1) reject("measure needs exactly one clbit");
        if (instr.clbits[0] >= num_clbits_) {
            reject("clbit " + std::to_string(instr.clbits[0]) + " out of range for " +
                   std::to_string(num_clbits_) + " clbits");
        }
    } else if (!instr.clbits.empty()) {
        reject("only measure takes clbits");
    }
}

Circuit &Circuit::push(Instruction instr) {
    validate(instr);
    instructions_.push_back(std::move(instr));
    return *this;
}

Circuit &Circuit::push_circuit(const Circuit &other, std::span<const Qubit> qubit_map,
                               std::span<const Clbit> clbit_map) {
    if (!qubit_map.empty() && qubit_map.size() < other.num_qubits()) {
        fail(ErrorKind::invalid_argument, "qubit map shorter than sub-circuit width");
    }
    if (!clbit_map.empty() && clbit_map.size() < other.num_clbits()) {
        fail(ErrorKind::invalid_argument, "clbit map shorter than sub-circuit clbits");
    }
    instructions_.reserve(instructions_.size() + other.size());
    for (const auto &src : other) {
        Instruction instr = src;
        if (!qubit_map.empty()) {
            for (auto &q : instr.qubits) q = qubit_map[q];
        }
        if (!clbit_map.empty()) {
            for (auto &c : instr.clbits) c = clbit_map[c];
        }
        push(std::move(instr));
    }
    return *this;
}

Circuit new_circuit(std::size_t num_qubits, std::size_t num_clbits) {
    return Circuit(num_qubits, num_clbits);
}

Circuit append(const Circuit &circuit, Instruction instr) {
    Circuit out = circuit;
    out.push(std::move(instr));
    return out;
}

std::size_t depth(const Circuit &circuit) {
    std::vector<std::size_t> qubit_level(circuit.num_qubits(), 0);
    std::vector<std::size_t> clbit_level(circuit.num_clbits(), 0);
    std::size_t result = 0;
    for (const auto &instr : circuit) {
        std::size_t level = 0;
        for (auto q : instr.qubits) level = std::max(level, qubit_level[q]);
        for (auto c : instr.clbits) level = std::max(level, clbit_level[c]);
        if (instr.tag != GateTag::BARRIER) {
            ++level;
        }
        for (auto q : instr.qubits) qubit_level[q] = level;
        for (auto c : instr.clbits) clbit_level[c] = level;
        result = std::max(result, level);
    }
    return result;
}

bool has_mid_circuit_measure(const Circuit &circuit) {
    std::vector<bool> measured(circuit.num_qubits(), false);
    for (const auto &instr : circuit) {
        if (instr.tag == GateTag::MEASURE) {
            measured[instr.qubits[0]] = true;
        } else if (instr.tag != GateTag::BARRIER) {
            for (auto q : instr.qubits) {
                if (measured[q]) return true;
            }
        }
    }
    return false;
}

namespace {

/// Running census over a stream of basis instructions.
class CensusBuilder {
   public:
    CensusBuilder(std::size_t qubits, std::size_t clbits)
        : qubit_level_(qubits, 0), clbit_level_(clbits, 0), measured_(qubits, false) {
        census_.width = qubits;
    }

    void add(const Instruction &instr) {
        if (is_single_qubit(instr.tag)) {
            ++census_.single_qubit_gates;
        } else if (instr.tag == GateTag::CX) {
            ++census_.cnot_gates;
        } else if (instr.tag == GateTag::MEASURE) {
            ++census_.measure_gates;
        } else if (instr.tag != GateTag::BARRIER) {
            fail(ErrorKind::invalid_argument,
                 "census_of_basis: non-basis gate " + std::string(gate_name(instr.tag)));
        }
        std::size_t level = 0;
        for (auto q : instr.qubits) level = std::max(level, qubit_level_[q]);
        for (auto c : instr.clbits) level = std::max(level, clbit_level_[c]);
        if (instr.tag != GateTag::BARRIER) ++level;
        for (auto q : instr.qubits) qubit_level_[q] = level;
        for (auto c : instr.clbits) clbit_level_[c] = level;
        census_.depth = std::max(census_.depth, level);

        if (instr.tag == GateTag::MEASURE) {
            measured_[instr.qubits[0]] = true;
        } else if (instr.tag != GateTag::BARRIER) {
            for (auto q : instr.qubits) census_.has_mid_circuit_measure |= measured_[q];
        }
    }

    const GateCensus &result() const {
        return census_;
    }

   private:
    GateCensus census_;
    std::vector<std::size_t> qubit_level_;
    std::vector<std::size_t> clbit_level_;
    std::vector<bool> measured_;
};

}  // namespace

GateCensus census_of_basis(const Circuit &circuit) {
    CensusBuilder b(circuit.num_qubits(), circuit.num_clbits());
    for (const auto &instr : circuit) b.add(instr);
    return b.result();
}

GateCensus census(const Circuit &circuit) {
    // Streams the decomposition so wide multi-controlled gates never
    // materialize as a circuit.
    CensusBuilder b(circuit.num_qubits(), circuit.num_clbits());
    const std::function<void(Instruction &&)> sink = [&](Instruction &&i) { b.add(i); };
    for (const auto &instr : circuit) decompose_instruction(instr, circuit.num_qubits(), sink);
    return b.result();
}

Instruction adjoint(const Instruction &instr) {
    Instruction out = instr;
    switch (instr.tag) {
        case GateTag::S:
            out.tag = GateTag::SDG;
            break;
        case GateTag::SDG:
            out.tag = GateTag::S;
            break;
        case GateTag::T:
            out.tag = GateTag::TDG;
            break;
        case GateTag::TDG:
            out.tag = GateTag::T;
            break;
        case GateTag::RX:
        case GateTag::RY:
        case GateTag::RZ:
        case GateTag::PHASE:
        case GateTag::CPHASE:
        case GateTag::RZZ:
        case GateTag::MCPHASE:
            out.params[0] = -instr.params[0];
            break;
        case GateTag::U3:
            // U3(a, b, c)^dagger = U3(-a, -c, -b)
            out.params = {-instr.params[0], -instr.params[2], -instr.params[1]};
            break;
        case GateTag::MEASURE:
            fail(ErrorKind::not_invertible, "measurement has no adjoint");
        default:
            break;
    }
    return out;
}

Circuit inverse(const Circuit &circuit) {
    Circuit out(circuit.num_qubits(), circuit.num_clbits());
    const auto &instrs = circuit.instructions();
    for (auto it = instrs.rbegin(); it != instrs.rend(); ++it) {
        out.push(adjoint(*it));
    }
    return out;
}

Circuit without_measurements(const Circuit &circuit) {
    Circuit out(circuit.num_qubits(), circuit.num_clbits());
    if (circuit.info()) out.set_info(*circuit.info());
    for (const auto &instr : circuit) {
        if (instr.tag != GateTag::MEASURE) out.push(instr);
    }
    return out;
}

Circuit compose(const Circuit &a, const Circuit &b) {
    if (a.num_qubits() != b.num_qubits()) {
        fail(ErrorKind::invalid_argument, "compose: width mismatch (" +
                                              std::to_string(a.num_qubits()) + " vs " +
                                              std::to_string(b.num_qubits()) + ")");
    }
    Circuit out(a.num_qubits(), std::max(a.num_clbits(), b.num_clbits()));
    out.push_circuit(a);
    out.push_circuit(b);
    if (a.info()) out.set_info(*a.info());
    return out;
}

}  // namespace qgen
