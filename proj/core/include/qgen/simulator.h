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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgen/circuit.h"

namespace qgen {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultWidthCap = 26;

/// 2x2 matrix of a one-qubit tag, row-major: {m00, m01, m10, m11}.
std::array<Amplitude, 4> single_qubit_matrix(const Instruction &instr);

/// Dense state over `num_qubits` qubits, little-endian (qubit 0 is the least
/// significant bit of the basis index).
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(std::size_t num_qubits);
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t size() const noexcept {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    const Amplitude &operator[](std::size_t index) const {
        return amps_[index];
    }

    /// Applies one unitary instruction in place. BARRIER is a no-op;
    /// MEASURE throws invalid_argument (use `measure`).
    void apply(const Instruction &instr);

    /// Probability that `qubit` reads 1.
    double probability_one(Qubit qubit) const;

    /// Projects `qubit` onto `outcome` and renormalizes.
    void collapse(Qubit qubit, int outcome);

    /// Samples and collapses `qubit` using a uniform draw in [0, 1).
    int measure(Qubit qubit, double uniform);

    double norm_squared() const;
    std::vector<double> probabilities() const;

   private:
    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// |<a|b>|^2. Widths must match.
double fidelity(const StateVector &a, const StateVector &b);

struct SimOptions {
    std::size_t width_cap = kDefaultWidthCap;
    /// Run per-shot trajectories even when every measurement is terminal.
    bool force_trajectory = false;
};

/// Final state from |0...0>. Terminal measurements are ignored.
StateVector run_statevector(const Circuit &circuit, const SimOptions &options = {});

struct Histogram {
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;

    bool operator==(const Histogram &) const = default;

    /// Fraction of shots that produced `key` (0 when absent).
    double frequency(const std::string &key) const;
};

/// Samples `shots` outcomes. Keys are clbit strings with clbit 0 rightmost;
/// unmeasured clbits read 0.
///
/// Qubits that never share a gate are sampled as independent blocks, so the
/// width cap applies to the widest interacting block rather than the whole
/// circuit. Shot i of block b draws from a stream derived from
/// (seed, i, b), which keeps results independent of evaluation order.
Histogram sample_counts(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed,
                        const SimOptions &options = {});

void to_json(nlohmann::json &j, const Histogram &h);
void from_json(const nlohmann::json &j, Histogram &h);

/// "QGSV" binary format (little-endian header, then (re, im) doubles).
void write_statevector(std::ostream &out, const StateVector &state);
StateVector read_statevector(std::istream &in);

}  // namespace qgen
