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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "qgen/circuit.h"
#include "qgen/simulator.h"

namespace qgen::testing {

/// Full-width matrix of one unitary instruction, built column by column from
/// the textbook action of each gate on basis states.
Eigen::MatrixXcd reference_gate(const Instruction &instr, std::size_t width);

/// Product of reference_gate over the circuit; measurements and barriers
/// are skipped.
Eigen::MatrixXcd reference_unitary(const Circuit &circuit);

/// reference_unitary applied to |0...0>, computed gate by gate.
Eigen::VectorXcd reference_state(const Circuit &circuit);

Eigen::VectorXcd to_eigen(const StateVector &state);

/// max |a - e^{i phi} b| with phi chosen at the largest entry of a.
double phase_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// Outcome probabilities of a circuit whose measurements are all terminal,
/// keyed like histograms. Uses run_statevector.
std::map<std::string, double> exact_distribution(const Circuit &circuit);

/// Uniformly drawn gates over every unitary tag, including MCX/MCPHASE when
/// the width allows. No measurements.
Circuit random_circuit(std::mt19937_64 &rng, std::size_t width, std::size_t gates);

/// Probability of `key` in an exact distribution (0 when absent).
double prob(const std::map<std::string, double> &dist, const std::string &key);

}  // namespace qgen::testing
