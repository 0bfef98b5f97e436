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

#include "qgen/search.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <set>

#include "gen_common.h"
#include "qgen/bits.h"
#include "qgen/decompose.h"
#include "qgen/error.h"
#include "qgen/fourier.h"
#include "qgen/rng.h"

namespace qgen {

namespace {

using detail::qubit_range;
using detail::x_wrap;
using Qubits = std::vector<Qubit>;

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kMaxWalkSteps = std::uint64_t{1} << 20;
constexpr std::size_t kMaxParityQubits = 20;

/// Resolves the marked set to integers over `width` bits.
std::vector<std::uint64_t> resolve_marked(const std::optional<std::vector<std::string>> &given,
                                          std::optional<std::uint64_t> count, std::uint64_t fallback,
                                          std::size_t width, Rng &rng) {
    if (width > 62) fail(ErrorKind::invalid_argument, "search register above 62 qubits");
    const std::uint64_t space = std::uint64_t{1} << width;
    if (given) {
        std::vector<std::uint64_t> out;
        std::set<std::uint64_t> seen;
        for (const auto &s : *given) {
            check_bitstring(s, width, "marked state");
            const auto v = from_bitstring(s);
            if (!seen.insert(v).second) {
                fail(ErrorKind::invalid_argument, "marked state '" + s + "' listed twice");
            }
            out.push_back(v);
        }
        if (out.empty()) fail(ErrorKind::invalid_argument, "marked set is empty");
        if (count && *count != out.size()) {
            fail(ErrorKind::invalid_argument, "solution count disagrees with the marked set");
        }
        return out;
    }
    const std::uint64_t m = count ? *count : fallback;
    if (m < 1 || m > space) {
        fail(ErrorKind::invalid_argument, "solution count " + std::to_string(m) + " outside [1, " +
                                              std::to_string(space) + "]");
    }
    return detail::sample_distinct(rng, width, m);
}

nlohmann::json marked_json(const std::vector<std::uint64_t> &marked, std::size_t width) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto v : marked) arr.push_back(to_bitstring(v, width));
    return arr;
}

/// Phase -1 on |m> of `reg` for each marked m, optionally controlled.
void append_oracle(Circuit &c, const Qubits &reg, const std::vector<std::uint64_t> &marked,
                   const Qubits &controls = {}) {
    for (auto m : marked) {
        x_wrap(c, reg, m);
        Qubits ctrl = controls;
        ctrl.insert(ctrl.end(), reg.begin(), reg.end() - 1);
        if (ctrl.empty()) {
            c.push(gates::phase(kPi, reg.back()));
        } else {
            c.push(gates::mcphase(kPi, ctrl, reg.back()));
        }
        x_wrap(c, reg, m);
    }
}

/// Controlled phase oracle as a diagonal parity network over the control
/// and `reg`: one RZ per nonzero Walsh coefficient, CX steps in Gray-code
/// order. Exact up to a global phase; 2^(n+1) - 1 CX at most.
void append_parity_oracle(Circuit &c, Qubit control, const Qubits &reg,
                          const std::vector<std::uint64_t> &marked) {
    Qubits y{control};
    y.insert(y.end(), reg.begin(), reg.end());
    const std::size_t m = y.size();
    const std::size_t dim = std::size_t{1} << m;
    std::vector<double> alpha(dim, 0.0);
    for (auto v : marked) alpha[(v << 1) | 1] = kPi;
    for (std::size_t len = 1; len < dim; len <<= 1) {
        for (std::size_t i = 0; i < dim; i += 2 * len) {
            for (std::size_t j = i; j < i + len; ++j) {
                const double a = alpha[j], b = alpha[j + len];
                alpha[j] = a + b;
                alpha[j + len] = a - b;
            }
        }
    }
    for (auto &a : alpha) a /= static_cast<double>(dim);

    for (std::size_t h = 0; h < m; ++h) {
        const std::size_t top = std::size_t{1} << h;
        bool any = false;
        for (std::size_t g = 0; g < top && !any; ++g) any = std::abs(alpha[g | top]) > 1e-12;
        if (!any) continue;
        std::size_t prev = 0;
        for (std::size_t k = 0; k < top; ++k) {
            const std::size_t g = k ^ (k >> 1);
            if (k > 0) c.push(gates::cx(y[std::countr_zero(g ^ prev)], y[h]));
            prev = g;
            const double a = alpha[g | top];
            if (std::abs(a) > 1e-12) c.push(gates::rz(-2 * a, y[h]));
        }
        if (h > 0) c.push(gates::cx(y[h - 1], y[h]));
    }
}

/// Controlled phase oracle in whichever form decomposes to fewer gates.
void append_controlled_oracle(Circuit &c, Qubit control, const Qubits &reg,
                              const std::vector<std::uint64_t> &marked) {
    Circuit per_state(c.num_qubits(), 0);
    append_oracle(per_state, reg, marked, {control});
    if (reg.size() + 1 <= kMaxParityQubits) {
        const std::size_t network = (std::size_t{2} << (reg.size() + 1)) - 2;
        if (network < basis_cost(per_state).total()) {
            append_parity_oracle(c, control, reg, marked);
            return;
        }
    }
    c.push_circuit(per_state);
}

/// 2|s><s| - I on `reg` (uniform s), exactly, when controlled; the
/// uncontrolled form is its negative.
void append_diffusion(Circuit &c, const Qubits &reg, const Qubits &controls = {}) {
    for (auto q : reg) c.push(gates::h(q));
    for (auto q : reg) c.push(gates::x(q));
    Qubits ctrl = controls;
    ctrl.insert(ctrl.end(), reg.begin(), reg.end() - 1);
    if (ctrl.empty()) {
        c.push(gates::phase(kPi, reg.back()));
    } else {
        c.push(gates::mcphase(kPi, ctrl, reg.back()));
    }
    for (auto q : reg) c.push(gates::x(q));
    for (auto q : reg) c.push(gates::h(q));
    // The network above is I - 2|s><s|; a Z on the control supplies the
    // missing -1 so the controlled operator is exactly the reflection.
    if (!controls.empty()) c.push(gates::z(controls.back()));
}

}  // namespace

std::size_t optimal_grover_iterations(double N, double M) {
    if (!(M > 0 && M <= N)) {
        fail(ErrorKind::invalid_argument, "need 0 < M <= N for the iteration count");
    }
    const double theta = std::asin(std::sqrt(M / N));
    const double k = std::round(kPi / (4 * theta) - 0.5);
    return k < 1 ? 1 : static_cast<std::size_t>(k);
}

GenResult gen_grover(const GroverParams &params) {
    const std::size_t n = params.problem_size;
    detail::require_min_size(n, 2, "Grover oracle width");
    Rng rng(params.seed);
    const std::uint64_t fallback = n >= 2 ? (std::uint64_t{1} << (n - 2)) : 1;
    const auto marked = resolve_marked(params.marked, params.solutions, fallback, n, rng);
    const double N = std::ldexp(1.0, static_cast<int>(n));
    const std::size_t iters = params.iterations
                                  ? *params.iterations
                                  : optimal_grover_iterations(N, static_cast<double>(marked.size()));
    const auto reg = qubit_range(0, n);
    Circuit c(n, n);
    for (auto q : reg) c.push(gates::h(q));
    for (std::size_t it = 0; it < iters; ++it) {
        append_oracle(c, reg, marked);
        append_diffusion(c, reg);
    }
    for (auto q : reg) c.push(gates::measure(q, q));
    nlohmann::json p = {{"solutions", marked.size()}, {"iterations", iters}};
    return detail::make_result(Algorithm::grover, n, params.seed, std::move(c), std::move(p),
                               {{"marked", marked_json(marked, n)}});
}

GenResult gen_quantum_counting(const CountingParams &params) {
    const std::size_t t = params.problem_size;
    detail::require_min_size(t, 2, "counting qubits");
    const std::size_t n = params.searching_qubits.value_or(t);
    detail::require_min_size(n, 2, "searching qubits");
    if (t > 30) fail(ErrorKind::resource_limit, "counting register above 30 qubits");
    Rng rng(params.seed);
    std::optional<std::uint64_t> count = params.solutions;
    if (!count && !params.marked) {
        count = 1 + rng.below(std::uint64_t{1} << n);
    }
    const auto marked = resolve_marked(params.marked, count, 1, n, rng);

    const auto counting = qubit_range(0, t);
    const auto search = qubit_range(static_cast<Qubit>(t), n);
    Circuit c(t + n, t);
    for (auto q : counting) c.push(gates::h(q));
    for (auto q : search) c.push(gates::h(q));
    for (std::size_t k = 0; k < t; ++k) {
        const Qubits ctrl{counting[k]};
        const std::uint64_t reps = std::uint64_t{1} << k;
        for (std::uint64_t r = 0; r < reps; ++r) {
            append_controlled_oracle(c, counting[k], search, marked);
            append_diffusion(c, search, ctrl);
        }
    }
    append_qft(c, counting, true);
    for (auto q : counting) c.push(gates::measure(q, q));
    nlohmann::json p = {{"searching_qubits", n}};
    nlohmann::json hidden = {{"solutions", marked.size()}, {"marked", marked_json(marked, n)}};
    return detail::make_result(Algorithm::counting, t, params.seed, std::move(c), std::move(p),
                               std::move(hidden));
}

std::size_t walk_optimal_iterations(std::size_t coin_width, std::uint64_t solutions) {
    const double nodes = std::ldexp(1.0, 1 << coin_width);
    return optimal_grover_iterations(nodes, static_cast<double>(solutions));
}

namespace {

struct WalkLayout {
    Qubits theta, node, coin;
    Qubit anc;
};

/// One controlled walk step W = Shift * (GroverCoin x I).
void append_controlled_step(Circuit &c, const WalkLayout &w, Qubit ctrl) {
    append_diffusion(c, w.coin, {ctrl});
    for (std::size_t dir = 0; dir < w.node.size(); ++dir) {
        x_wrap(c, w.coin, dir);
        Qubits controls{ctrl};
        controls.insert(controls.end(), w.coin.begin(), w.coin.end());
        c.push(gates::mcx(controls, w.node[dir]));
        x_wrap(c, w.coin, dir);
    }
}

}  // namespace

GenResult gen_quantum_walk(const WalkParams &params) {
    const std::size_t p = params.problem_size;
    detail::require_min_size(p, 2, "coin width");
    if (p > 4) fail(ErrorKind::resource_limit, "coin width above 4 gives over 2^16 nodes");
    const std::size_t d = std::size_t{1} << p;
    const std::size_t t = params.theta_qubits.value_or(d);
    detail::require_min_size(t, 1, "theta qubits");
    Rng rng(params.seed);
    const std::uint64_t fallback = std::uint64_t{1} << (p - 2);
    const auto marked = resolve_marked(params.marked, params.solutions, fallback, d, rng);
    const std::size_t iters = params.iterations.value_or(walk_optimal_iterations(p, marked.size()));
    // Each iteration runs the phase estimation and its inverse.
    if (t >= 20 || 2 * iters * ((std::uint64_t{1} << t) - 1) > kMaxWalkSteps) {
        fail(ErrorKind::resource_limit, "walk needs more than " + std::to_string(kMaxWalkSteps) +
                                            " controlled steps; lower theta_qubits or iterations");
    }

    WalkLayout w;
    w.theta = qubit_range(0, t);
    w.node = qubit_range(static_cast<Qubit>(t), d);
    w.coin = qubit_range(static_cast<Qubit>(t + d), p);
    w.anc = static_cast<Qubit>(t + d + p);
    Circuit c(t + d + p + 1, d);
    for (auto q : w.node) c.push(gates::h(q));
    for (auto q : w.coin) c.push(gates::h(q));
    c.push(gates::x(w.anc));
    c.push(gates::h(w.anc));

    // Step sequence of the phase-estimation stage, reused in reverse for
    // the uncompute.
    Circuit estimate(c.num_qubits(), 0);
    for (auto q : w.theta) estimate.push(gates::h(q));
    for (std::size_t k = 0; k < t; ++k) {
        const std::uint64_t reps = std::uint64_t{1} << k;
        for (std::uint64_t r = 0; r < reps; ++r) append_controlled_step(estimate, w, w.theta[k]);
    }
    append_qft(estimate, w.theta, true);
    const Circuit unestimate = inverse(estimate);

    for (std::size_t it = 0; it < iters; ++it) {
        append_oracle(c, w.node, marked);
        c.push_circuit(estimate);
        // Phase -1 on the zero-eigenphase component via the |-> ancilla.
        for (auto q : w.theta) c.push(gates::x(q));
        c.push(gates::mcx(w.theta, w.anc));
        for (auto q : w.theta) c.push(gates::x(q));
        c.push_circuit(unestimate);
    }
    for (std::size_t i = 0; i < d; ++i) c.push(gates::measure(w.node[i], static_cast<Clbit>(i)));
    nlohmann::json params_json = {{"theta_qubits", t},
                                  {"node_qubits", d},
                                  {"coin_qubits", p},
                                  {"solutions", marked.size()},
                                  {"iterations", iters}};
    return detail::make_result(Algorithm::walk, p, params.seed, std::move(c), std::move(params_json),
                               {{"marked", marked_json(marked, d)}});
}

}  // namespace qgen
