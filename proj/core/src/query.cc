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

#include "qgen/query.h"

#include <algorithm>

#include "gen_common.h"
#include "qgen/bits.h"
#include "qgen/error.h"
#include "qgen/rng.h"

namespace qgen {

namespace {

using detail::qubit_range;

void barrier_all(Circuit &c) {
    c.push(gates::barrier(qubit_range(0, c.num_qubits())));
}

void measure_first(Circuit &c, std::size_t n) {
    for (Qubit q = 0; q < n; ++q) c.push(gates::measure(q, q));
}

std::string resolve_secret(const std::optional<std::string> &given, std::size_t n, Rng &rng,
                           bool allow_zero) {
    if (given) {
        check_bitstring(*given, n, "secret");
        return *given;
    }
    std::vector<int> bits;
    do {
        bits = detail::random_bits(rng, n);
    } while (!allow_zero && std::find(bits.begin(), bits.end(), 1) == bits.end());
    return string_of(bits);
}

}  // namespace

GenResult gen_deutsch_jozsa(const DjParams &params) {
    const std::size_t n = params.problem_size;
    detail::require_min_size(n, 2, "Deutsch-Jozsa oracle width");
    Rng rng(params.seed);
    const Qubit out = static_cast<Qubit>(n);
    Circuit c(n + 1, n);
    for (Qubit q = 0; q < n; ++q) c.push(gates::h(q));
    c.push(gates::x(out));
    c.push(gates::h(out));
    barrier_all(c);

    nlohmann::json hidden;
    if (params.oracle == DjOracle::constant) {
        int f = params.constant_value ? *params.constant_value : (rng.coin() ? 1 : 0);
        if (f != 0 && f != 1) {
            fail(ErrorKind::invalid_argument, "constant oracle value must be 0 or 1");
        }
        if (f == 1) c.push(gates::x(out));
        hidden = {{"oracle", "constant"}, {"value", f}, {"expected", std::string(n, '0')}};
    } else {
        std::string pattern = resolve_secret(params.pattern, n, rng, true);
        const auto b = bits_of(pattern);
        for (Qubit q = 0; q < n; ++q) {
            if (b[q]) c.push(gates::x(q));
        }
        for (Qubit q = 0; q < n; ++q) c.push(gates::cx(q, out));
        for (Qubit q = 0; q < n; ++q) {
            if (b[q]) c.push(gates::x(q));
        }
        hidden = {{"oracle", "balanced"}, {"pattern", pattern}};
    }
    barrier_all(c);
    for (Qubit q = 0; q < n; ++q) c.push(gates::h(q));
    measure_first(c, n);

    nlohmann::json p = {{"oracle", params.oracle == DjOracle::constant ? "constant" : "balanced"}};
    return detail::make_result(Algorithm::dj, n, params.seed, std::move(c), std::move(p),
                               std::move(hidden));
}

GenResult gen_bernstein_vazirani(const BvParams &params) {
    const std::size_t n = params.problem_size;
    detail::require_min_size(n, 2, "Bernstein-Vazirani oracle width");
    Rng rng(params.seed);
    const std::string secret = resolve_secret(params.secret, n, rng, true);
    const auto s = bits_of(secret);
    const Qubit aux = static_cast<Qubit>(n);

    Circuit c(n + 1, n);
    c.push(gates::x(aux));
    c.push(gates::h(aux));
    for (Qubit q = 0; q < n; ++q) c.push(gates::h(q));
    barrier_all(c);
    for (Qubit q = 0; q < n; ++q) {
        if (s[q]) c.push(gates::cx(q, aux));
    }
    barrier_all(c);
    for (Qubit q = 0; q < n; ++q) c.push(gates::h(q));
    measure_first(c, n);
    return detail::make_result(Algorithm::bv, n, params.seed, std::move(c), nlohmann::json::object(),
                               {{"secret", secret}});
}

GenResult gen_simon(const SimonParams &params) {
    const std::size_t n = params.problem_size;
    detail::require_min_size(n, 2, "Simon oracle width");
    Rng rng(params.seed);
    const std::string secret = resolve_secret(params.secret, n, rng, false);
    const auto s = bits_of(secret);

    Circuit c(2 * n, n);
    for (Qubit q = 0; q < n; ++q) c.push(gates::h(q));
    barrier_all(c);
    // f(x) = x xor (x_j * s) with j the lowest set bit of s: two-to-one with
    // period s, or one-to-one when s = 0.
    for (Qubit q = 0; q < n; ++q) c.push(gates::cx(q, static_cast<Qubit>(n + q)));
    auto lowest = std::find(s.begin(), s.end(), 1);
    if (lowest != s.end()) {
        const Qubit j = static_cast<Qubit>(lowest - s.begin());
        for (Qubit q = 0; q < n; ++q) {
            if (s[q]) c.push(gates::cx(j, static_cast<Qubit>(n + q)));
        }
    }
    barrier_all(c);
    for (Qubit q = 0; q < n; ++q) c.push(gates::h(q));
    measure_first(c, n);
    return detail::make_result(Algorithm::simon, n, params.seed, std::move(c),
                               nlohmann::json::object(), {{"secret", secret}});
}

}  // namespace qgen
