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

#include "qgen/comm.h"

#include <cmath>
#include <numbers>

#include "gen_common.h"
#include "qgen/bits.h"
#include "qgen/error.h"
#include "qgen/rng.h"

namespace qgen {

namespace {

using detail::qubit_range;

nlohmann::json bits_json(const std::vector<int> &bits) {
    return nlohmann::json(bits);
}

}  // namespace

GenResult gen_qkd(const QkdParams &params) {
    const std::size_t n = params.problem_size;
    detail::require_min_size(n, 2, "key width");
    Rng rng(params.seed);
    const auto sender_bits = detail::random_bits(rng, n);
    const auto sender_bases = detail::random_bits(rng, n);
    const auto attacker_bases = detail::random_bits(rng, n);
    const auto receiver_bases = detail::random_bits(rng, n);
    const bool eve = params.interception;

    Circuit c(n, eve ? 2 * n : n);
    const auto all = qubit_range(0, n);
    for (Qubit q = 0; q < n; ++q) {
        if (sender_bits[q]) c.push(gates::x(q));
        const int frame = sender_bases[q] ^ (eve ? attacker_bases[q] : receiver_bases[q]);
        if (frame) c.push(gates::h(q));
    }
    c.push(gates::barrier(all));
    if (eve) {
        for (Qubit q = 0; q < n; ++q) c.push(gates::measure(q, q));
        c.push(gates::barrier(all));
        for (Qubit q = 0; q < n; ++q) {
            if (attacker_bases[q] ^ receiver_bases[q]) c.push(gates::h(q));
        }
        c.push(gates::barrier(all));
        for (Qubit q = 0; q < n; ++q) c.push(gates::measure(q, static_cast<Clbit>(n + q)));
    } else {
        for (Qubit q = 0; q < n; ++q) c.push(gates::measure(q, q));
    }

    nlohmann::json hidden = {{"sender_bits", bits_json(sender_bits)},
                             {"sender_bases", bits_json(sender_bases)},
                             {"receiver_bases", bits_json(receiver_bases)},
                             {"receiver_clbit_offset", eve ? n : 0}};
    if (eve) {
        hidden["attacker_bases"] = bits_json(attacker_bases);
    }
    return detail::make_result(Algorithm::qkd, n, params.seed, std::move(c),
                               {{"interception", eve}}, std::move(hidden));
}

GenResult gen_superdense(const SuperdenseParams &params) {
    const std::size_t n = params.problem_size;
    detail::require_min_size(n, 2, "transmission width");
    if (n % 2 != 0) {
        fail(ErrorKind::invalid_argument, "superdense coding needs an even width, got " + std::to_string(n));
    }
    Rng rng(params.seed);
    std::string message;
    if (params.message) {
        check_bitstring(*params.message, n, "message");
        message = *params.message;
    } else {
        message = string_of(detail::random_bits(rng, n));
    }
    const auto bits = bits_of(message);
    Circuit c(n, n);
    for (Qubit s = 0; s < n; s += 2) {
        c.push(gates::h(s));
        c.push(gates::cx(s, s + 1));
    }
    for (Qubit s = 0; s < n; s += 2) {
        if (bits[s + 1]) c.push(gates::x(s));
        if (bits[s]) c.push(gates::z(s));
    }
    for (Qubit s = 0; s < n; s += 2) {
        c.push(gates::cx(s, s + 1));
        c.push(gates::h(s));
    }
    for (Qubit q = 0; q < n; ++q) c.push(gates::measure(q, q));
    return detail::make_result(Algorithm::superdense, n, params.seed, std::move(c),
                               nlohmann::json::object(), {{"message", message}});
}

GenResult gen_teleport(const TeleportParams &params) {
    const std::size_t k = params.problem_size;
    detail::require_min_size(k, 1, "teleportation sets");
    Rng rng(params.seed);
    std::vector<std::array<double, 3>> states;
    if (params.states) {
        states = *params.states;
        if (states.size() != k) {
            fail(ErrorKind::invalid_argument, "expected " + std::to_string(k) + " state triples");
        }
    } else {
        for (std::size_t s = 0; s < k; ++s) {
            std::array<double, 3> a;
            for (auto &v : a) v = rng.uniform(0.0, 2 * std::numbers::pi);
            states.push_back(a);
        }
    }
    Circuit c(3 * k, k);
    nlohmann::json states_json = nlohmann::json::array();
    for (std::size_t s = 0; s < k; ++s) {
        const Qubit q0 = static_cast<Qubit>(3 * s), q1 = q0 + 1, q2 = q0 + 2;
        const auto &[th, ph, la] = states[s];
        const std::vector<Qubit> set{q0, q1, q2};
        c.push(gates::u3(th, ph, la, q0));
        c.push(gates::barrier(set));
        c.push(gates::h(q1));
        c.push(gates::cx(q1, q2));
        c.push(gates::barrier(set));
        c.push(gates::cx(q0, q1));
        c.push(gates::h(q0));
        c.push(gates::barrier(set));
        c.push(gates::cx(q1, q2));
        c.push(gates::cz(q0, q2));
        c.push(gates::barrier(set));
        c.push(gates::u3(-th, -la, -ph, q2));
        c.push(gates::measure(q2, static_cast<Clbit>(s)));
        states_json.push_back({th, ph, la});
    }
    return detail::make_result(Algorithm::teleport, k, params.seed, std::move(c),
                               nlohmann::json::object(), {{"states", states_json}});
}

}  // namespace qgen
