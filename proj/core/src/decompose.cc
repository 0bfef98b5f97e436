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

#include "qgen/decompose.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <tuple>
#include <vector>

namespace qgen {

namespace {

using Qubits = std::vector<Qubit>;
using Sink = std::function<void(Instruction &&)>;

bool is_pi(double lambda) {
    const double r = std::remainder(lambda - std::numbers::pi, 2 * std::numbers::pi);
    return std::fabs(r) < 1e-12;
}

class Lowering {
   public:
    explicit Lowering(const Sink &sink) : sink_(sink) {}

    void emit(Instruction &&instr) {
        sink_(std::move(instr));
    }

    void cphase(double lambda, Qubit c, Qubit t) {
        emit(gates::rz(lambda / 2, c));
        emit(gates::cx(c, t));
        emit(gates::rz(-lambda / 2, t));
        emit(gates::cx(c, t));
        emit(gates::rz(lambda / 2, t));
    }

    void toffoli(Qubit c1, Qubit c2, Qubit t) {
        emit(gates::h(t));
        emit(gates::cx(c2, t));
        emit(gates::tdg(t));
        emit(gates::cx(c1, t));
        emit(gates::t(t));
        emit(gates::cx(c2, t));
        emit(gates::tdg(t));
        emit(gates::cx(c1, t));
        emit(gates::t(c2));
        emit(gates::t(t));
        emit(gates::h(t));
        emit(gates::cx(c1, c2));
        emit(gates::t(c1));
        emit(gates::tdg(c2));
        emit(gates::cx(c1, c2));
    }

    /// Toffoli ladder with m-2 borrowed qubits whose values are restored.
    void mcx_vchain(std::span<const Qubit> c, Qubit t, std::span<const Qubit> a) {
        const std::size_t m = c.size();
        auto up = [&] {
            for (std::size_t i = m - 3; i-- > 0;) toffoli(c[i + 2], a[i], a[i + 1]);
        };
        auto down = [&] {
            for (std::size_t i = 0; i + 3 < m; ++i) toffoli(c[i + 2], a[i], a[i + 1]);
        };
        for (int rep = 0; rep < 2; ++rep) {
            toffoli(c[m - 1], a[m - 3], t);
            up();
            toffoli(c[0], c[1], a[0]);
            down();
        }
    }

    /// X on t iff all controls are set. `pool` lists qubits that may be
    /// borrowed in any state.
    void mcx(std::span<const Qubit> c, Qubit t, std::span<const Qubit> pool) {
        const std::size_t k = c.size();
        if (k == 1) {
            emit(gates::cx(c[0], t));
            return;
        }
        if (k == 2) {
            toffoli(c[0], c[1], t);
            return;
        }
        if (pool.size() >= k - 2) {
            mcx_vchain(c, t, pool.first(k - 2));
            return;
        }
        if (!pool.empty()) {
            // Split the controls around one borrowed qubit; each half then
            // has enough idle qubits for a ladder.
            const Qubit anc = pool[0];
            const std::size_t m1 = (k + 1) / 2;
            Qubits first(c.begin(), c.begin() + m1);
            Qubits second(c.begin() + m1, c.end());
            second.push_back(anc);
            Qubits pool_first(c.begin() + m1, c.end());
            pool_first.push_back(t);
            pool_first.insert(pool_first.end(), pool.begin() + 1, pool.end());
            Qubits pool_second(first);
            pool_second.insert(pool_second.end(), pool.begin() + 1, pool.end());
            for (int rep = 0; rep < 2; ++rep) {
                mcx(first, anc, pool_first);
                mcx(second, t, pool_second);
            }
            return;
        }
        emit(gates::h(t));
        mcphase(std::numbers::pi, c, t, pool);
        emit(gates::h(t));
    }

    /// Phase e^{i lambda} on the all-ones state of controls + target.
    void mcphase(double lambda, std::span<const Qubit> c, Qubit t, std::span<const Qubit> pool) {
        const std::size_t k = c.size();
        if (k == 0) {
            emit(gates::phase(lambda, t));
            return;
        }
        if (k == 1) {
            cphase(lambda, c[0], t);
            return;
        }
        if (k >= 3 && !pool.empty() && is_pi(lambda)) {
            // A controlled Z: the borrowed-qubit ladder is linear in k.
            emit(gates::h(t));
            mcx(c, t, pool);
            emit(gates::h(t));
            return;
        }
        const Qubit last = c[k - 1];
        auto rest = c.first(k - 1);
        Qubits inner_pool{t};
        inner_pool.insert(inner_pool.end(), pool.begin(), pool.end());
        cphase(lambda / 2, last, t);
        mcx(rest, last, inner_pool);
        cphase(-lambda / 2, last, t);
        mcx(rest, last, inner_pool);
        Qubits outer_pool{last};
        outer_pool.insert(outer_pool.end(), pool.begin(), pool.end());
        mcphase(lambda / 2, rest, t, outer_pool);
    }

   private:
    const Sink &sink_;
};

Qubits idle_qubits(const Instruction &instr, std::size_t width) {
    std::vector<bool> used(width, false);
    for (auto q : instr.qubits) used[q] = true;
    Qubits idle;
    for (Qubit q = 0; q < width; ++q) {
        if (!used[q]) idle.push_back(q);
    }
    return idle;
}

}  // namespace

void decompose_instruction(const Instruction &instr, std::size_t width, const Sink &sink) {
    Lowering low(sink);
    const auto &q = instr.qubits;
    switch (instr.tag) {
        case GateTag::CZ:
            low.emit(gates::h(q[1]));
            low.emit(gates::cx(q[0], q[1]));
            low.emit(gates::h(q[1]));
            break;
        case GateTag::SWAP:
            low.emit(gates::cx(q[0], q[1]));
            low.emit(gates::cx(q[1], q[0]));
            low.emit(gates::cx(q[0], q[1]));
            break;
        case GateTag::RZZ:
            low.emit(gates::cx(q[0], q[1]));
            low.emit(gates::rz(instr.params[0], q[1]));
            low.emit(gates::cx(q[0], q[1]));
            break;
        case GateTag::CPHASE:
            low.cphase(instr.params[0], q[0], q[1]);
            break;
        case GateTag::MCX: {
            const Qubits pool = idle_qubits(instr, width);
            low.mcx(instr.controls(), instr.target(), pool);
            break;
        }
        case GateTag::MCPHASE: {
            const Qubits pool = idle_qubits(instr, width);
            low.mcphase(instr.params[0], instr.controls(), instr.target(), pool);
            break;
        }
        default: {
            Instruction copy = instr;
            sink(std::move(copy));
            break;
        }
    }
}

Circuit decompose_to_basis(const Circuit &circuit) {
    Circuit result(circuit.num_qubits(), circuit.num_clbits());
    if (circuit.info()) result.set_info(*circuit.info());
    Sink sink = [&](Instruction &&i) { result.push(std::move(i)); };
    for (const auto &instr : circuit) {
        decompose_instruction(instr, circuit.num_qubits(), sink);
    }
    return result;
}

BasisCost basis_cost(const Circuit &circuit) {
    // Cost of a multi-controlled gate depends only on its shape, so memoize.
    std::map<std::tuple<GateTag, std::size_t, std::size_t, bool>, BasisCost> memo;
    const std::size_t width = circuit.num_qubits();
    BasisCost total;
    for (const auto &instr : circuit) {
        if (is_single_qubit(instr.tag)) {
            ++total.single_qubit;
            continue;
        }
        if (instr.tag == GateTag::CX) {
            ++total.cnot;
            continue;
        }
        if (instr.tag == GateTag::MEASURE || instr.tag == GateTag::BARRIER) {
            ++total.other;
            continue;
        }
        const std::size_t idle = width - instr.qubits.size();
        const bool pi = instr.tag == GateTag::MCPHASE && is_pi(instr.params[0]);
        auto key = std::make_tuple(instr.tag, instr.qubits.size(), std::min<std::size_t>(idle, 64), pi);
        auto it = memo.find(key);
        if (it == memo.end()) {
            BasisCost cost;
            Sink count = [&](Instruction &&i) {
                if (i.tag == GateTag::CX) {
                    ++cost.cnot;
                } else {
                    ++cost.single_qubit;
                }
            };
            decompose_instruction(instr, width, count);
            it = memo.emplace(key, cost).first;
        }
        total += it->second;
    }
    return total;
}

}  // namespace qgen
