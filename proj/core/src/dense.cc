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

#include "qgen/dense.h"

#include <complex>

#include "qgen/error.h"
#include "qgen/simulator.h"

namespace qgen {

Eigen::MatrixXcd local_matrix(const Instruction &instr) {
    const Eigen::Index k = static_cast<Eigen::Index>(instr.qubits.size());
    const Eigen::Index dim = Eigen::Index{1} << k;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
    const Eigen::Index all = dim - 1;
    switch (instr.tag) {
        case GateTag::BARRIER:
            return m;
        case GateTag::MEASURE:
            fail(ErrorKind::invalid_argument, "measure has no unitary matrix");
        case GateTag::CX:
        case GateTag::MCX: {
            // Controls are operands 0..k-2, the target is operand k-1.
            const Eigen::Index on = all ^ (Eigen::Index{1} << (k - 1));
            m(on, on) = 0.0;
            m(all, all) = 0.0;
            m(on, all) = 1.0;
            m(all, on) = 1.0;
            return m;
        }
        case GateTag::CZ:
            m(all, all) = -1.0;
            return m;
        case GateTag::CPHASE:
        case GateTag::MCPHASE:
            m(all, all) = std::polar(1.0, instr.params[0]);
            return m;
        case GateTag::SWAP:
            m(1, 1) = 0.0;
            m(2, 2) = 0.0;
            m(1, 2) = 1.0;
            m(2, 1) = 1.0;
            return m;
        case GateTag::RZZ: {
            const double half = instr.params[0] / 2;
            m(0, 0) = std::polar(1.0, -half);
            m(1, 1) = std::polar(1.0, half);
            m(2, 2) = std::polar(1.0, half);
            m(3, 3) = std::polar(1.0, -half);
            return m;
        }
        default: {
            const auto u = single_qubit_matrix(instr);
            m << u[0], u[1], u[2], u[3];
            return m;
        }
    }
}

Eigen::MatrixXcd dense_unitary(const Circuit &circuit) {
    const std::size_t n = circuit.num_qubits();
    if (n > kDenseWidthCap) {
        fail(ErrorKind::resource_limit, "dense unitary limited to 6 qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &instr : circuit) {
        if (instr.tag == GateTag::MEASURE) {
            fail(ErrorKind::invalid_argument, "dense unitary of a circuit with measurements");
        }
        if (instr.tag == GateTag::BARRIER) continue;
        const Eigen::MatrixXcd local = local_matrix(instr);
        Eigen::Index op_mask = 0;
        for (auto q : instr.qubits) op_mask |= Eigen::Index{1} << q;
        auto local_index = [&](Eigen::Index global) {
            Eigen::Index l = 0;
            for (std::size_t j = 0; j < instr.qubits.size(); ++j) {
                l |= ((global >> instr.qubits[j]) & 1) << j;
            }
            return l;
        };
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r) {
            for (Eigen::Index c = 0; c < dim; ++c) {
                if ((r & ~op_mask) == (c & ~op_mask)) {
                    g(r, c) = local(local_index(r), local_index(c));
                }
            }
        }
        total = g * total;
    }
    return total;
}

}  // namespace qgen
