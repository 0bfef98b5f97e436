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

#include "qgen/fourier.h"

#include <cmath>
#include <numbers>
#include <numeric>

#include "gen_common.h"
#include "qgen/bits.h"
#include "qgen/error.h"
#include "qgen/number.h"
#include "qgen/rng.h"

namespace qgen {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

using detail::qubit_range;
using Qubits = std::vector<Qubit>;

/// 2 pi k / 2^w with k reduced modulo 2^w.
double turn_fraction(uint128 k, std::size_t w) {
    const uint128 mask = (static_cast<uint128>(1) << w) - 1;
    return std::ldexp(kTwoPi * static_cast<double>(k & mask), -static_cast<int>(w));
}

/// Adds `value` to a Fourier-basis register, optionally controlled.
void append_phi_add(Circuit &c, std::span<const Qubit> reg, std::uint64_t value,
                    const Qubits &controls) {
    const std::size_t w = reg.size();
    for (std::size_t j = 0; j < w; ++j) {
        const double angle = turn_fraction(static_cast<uint128>(value) << j, w);
        if (angle == 0.0) continue;
        if (controls.empty()) {
            c.push(gates::phase(angle, reg[j]));
        } else if (controls.size() == 1) {
            c.push(gates::cphase(angle, controls[0], reg[j]));
        } else {
            c.push(gates::mcphase(angle, controls, reg[j]));
        }
    }
}

std::uint64_t negate_mod_pow2(std::uint64_t v, std::size_t w) {
    const std::uint64_t mod = std::uint64_t{1} << w;
    return (mod - v % mod) % mod;
}

/// Doubly controlled b -> (b + a) mod N on a Fourier-basis register b of
/// n+1 qubits with b < N. `anc` starts and ends at 0.
void append_cc_phi_add_mod(Circuit &c, Qubit c1, Qubit c2, std::span<const Qubit> b, Qubit anc,
                           std::uint64_t a, std::uint64_t N) {
    const std::size_t w = b.size();
    const Qubit msb = b[w - 1];
    const Qubits both{c1, c2};
    append_phi_add(c, b, a, both);
    append_phi_add(c, b, negate_mod_pow2(N, w), {});
    append_qft(c, b, true);
    c.push(gates::cx(msb, anc));
    append_qft(c, b, false);
    append_phi_add(c, b, N, {anc});
    append_phi_add(c, b, negate_mod_pow2(a, w), both);
    append_qft(c, b, true);
    c.push(gates::x(msb));
    c.push(gates::cx(msb, anc));
    c.push(gates::x(msb));
    append_qft(c, b, false);
    append_phi_add(c, b, a, both);
}

/// b -> (b + a * x) mod N when `control` is set.
void append_c_mult(Circuit &c, Qubit control, std::span<const Qubit> x, std::span<const Qubit> b,
                   Qubit anc, std::uint64_t a, std::uint64_t N) {
    append_qft(c, b, false);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::uint64_t term = static_cast<std::uint64_t>(
            (static_cast<uint128>(a) << i) % N);
        append_cc_phi_add_mod(c, control, x[i], b, anc, term, N);
    }
    append_qft(c, b, true);
}

/// x -> a x mod N when `control` is set, with b and anc returned to 0.
void append_c_modmul(Circuit &c, Qubit control, std::span<const Qubit> x, std::span<const Qubit> b,
                     Qubit anc, std::uint64_t a, std::uint64_t N) {
    const auto a_inv = mod_inverse(a, N);
    if (!a_inv) {
        fail(ErrorKind::invalid_argument,
             "multiplier " + std::to_string(a) + " is not invertible modulo " + std::to_string(N));
    }
    append_c_mult(c, control, x, b, anc, a, N);
    for (std::size_t i = 0; i < x.size(); ++i) {
        c.push(gates::cx(b[i], x[i]));
        c.push(gates::mcx({control, x[i]}, b[i]));
        c.push(gates::cx(b[i], x[i]));
    }
    Circuit undo(c.num_qubits(), 0);
    append_c_mult(undo, control, x, b, anc, *a_inv, N);
    c.push_circuit(inverse(undo));
}

}  // namespace

void append_qft(Circuit &circuit, std::span<const Qubit> reg, bool inverse_qft) {
    const std::size_t n = reg.size();
    Circuit body(circuit.num_qubits(), 0);
    for (std::size_t j = n; j-- > 0;) {
        body.push(gates::h(reg[j]));
        for (std::size_t k = j; k-- > 0;) {
            body.push(gates::cphase(std::ldexp(std::numbers::pi, -static_cast<int>(j - k)), reg[k],
                                    reg[j]));
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
        body.push(gates::swap(reg[i], reg[n - 1 - i]));
    }
    circuit.push_circuit(inverse_qft ? inverse(body) : body);
}

GenResult gen_qft(const QftParams &params) {
    const std::size_t n = params.problem_size;
    detail::require_min_size(n, 2, "QFT width");
    if (n > 63) fail(ErrorKind::invalid_argument, "QFT width above 63 is not supported");
    Rng rng(params.seed);
    const std::uint64_t space = std::uint64_t{1} << n;
    const std::uint64_t x = params.init_value ? *params.init_value : rng.below(space);
    if (x >= space) {
        fail(ErrorKind::invalid_argument,
             "initial value " + std::to_string(x) + " does not fit in " + std::to_string(n) + " qubits");
    }
    Circuit c(n, params.measure ? n : 0);
    const auto reg = qubit_range(0, n);
    if (params.initialize) {
        for (Qubit q = 0; q < n; ++q) c.push(gates::h(q));
        for (Qubit q = 0; q < n; ++q) {
            c.push(gates::phase(turn_fraction(x, n - q), q));
        }
    }
    append_qft(c, reg, params.inverse);
    if (params.measure) {
        for (Qubit q = 0; q < n; ++q) c.push(gates::measure(q, q));
    }
    nlohmann::json p = {{"initialize", params.initialize},
                        {"inverse", params.inverse},
                        {"measure", params.measure}};
    nlohmann::json hidden = {{"value", x}};
    if (params.initialize && params.inverse && params.measure) {
        hidden["expected"] = to_bitstring(x, n);
    }
    return detail::make_result(Algorithm::qft, n, params.seed, std::move(c), std::move(p),
                               std::move(hidden));
}

GenResult gen_qpe(const QpeParams &params) {
    const std::size_t t = params.problem_size;
    detail::require_min_size(t, 2, "QPE counting qubits");
    if (!(params.theta >= 0.0 && params.theta < 1.0)) {
        fail(ErrorKind::invalid_argument, "theta must lie in [0, 1)");
    }
    if (params.mode == QpeMode::repeat && t > 40) {
        fail(ErrorKind::resource_limit, "repeat-mode QPE above 40 counting qubits");
    }
    const Qubit eigen = static_cast<Qubit>(t);
    Circuit c(t + 1, t);
    c.push(gates::x(eigen));
    for (Qubit q = 0; q < t; ++q) c.push(gates::h(q));
    const double angle = kTwoPi * params.theta;
    for (Qubit k = 0; k < t; ++k) {
        if (params.mode == QpeMode::repeat) {
            const std::uint64_t reps = std::uint64_t{1} << k;
            for (std::uint64_t r = 0; r < reps; ++r) c.push(gates::cphase(angle, k, eigen));
        } else {
            c.push(gates::cphase(std::ldexp(angle, static_cast<int>(k)), k, eigen));
        }
    }
    append_qft(c, qubit_range(0, t), true);
    for (Qubit q = 0; q < t; ++q) c.push(gates::measure(q, q));
    nlohmann::json p = {{"theta", params.theta},
                        {"mode", params.mode == QpeMode::repeat ? "repeat" : "fused"}};
    return detail::make_result(Algorithm::qpe, t, params.seed, std::move(c), std::move(p),
                               {{"theta", params.theta}});
}

Circuit build_qft_const_adder(std::int64_t value, std::size_t width) {
    detail::require_min_size(width, 1, "adder width");
    if (width > 62) fail(ErrorKind::invalid_argument, "adder width above 62");
    const std::int64_t mod = std::int64_t{1} << width;
    const auto v = static_cast<std::uint64_t>(((value % mod) + mod) % mod);
    Circuit c(width, 0);
    const auto reg = qubit_range(0, width);
    append_phi_add(c, reg, v, {});
    return c;
}

Circuit build_c_modmul(std::uint64_t a_power, std::uint64_t N, std::size_t n) {
    if (N < 2 || n != bit_length(N)) {
        fail(ErrorKind::invalid_argument, "register width must equal bit_length(N)");
    }
    if (std::gcd(a_power, N) != 1) {
        fail(ErrorKind::invalid_argument, std::to_string(a_power) + " is not coprime to " +
                                              std::to_string(N));
    }
    Circuit c(2 * n + 3, 0);
    const auto x = qubit_range(1, n);
    const auto b = qubit_range(static_cast<Qubit>(n + 1), n + 1);
    append_c_modmul(c, 0, x, b, static_cast<Qubit>(2 * n + 2), a_power % N, N);
    return c;
}

std::variant<GenResult, FactorResult> gen_shor(const ShorParams &params) {
    const std::uint64_t N = params.N;
    if (auto settled = shor_screen(N, params.a)) return *settled;
    if (N >= (std::uint64_t{1} << 15)) {
        fail(ErrorKind::resource_limit, "N above 2^15 gives an impractically wide circuit");
    }
    Rng rng(params.seed);
    std::uint64_t a;
    if (params.a) {
        a = *params.a;
    } else {
        std::vector<std::uint64_t> coprime;
        for (std::uint64_t v = 2; v < N; ++v) {
            if (std::gcd(v, N) == 1) coprime.push_back(v);
        }
        a = coprime[rng.below(coprime.size())];
    }
    const std::size_t n = bit_length(N);
    const std::size_t m = 2 * n;
    Circuit c(4 * n + 2, m);
    const auto counting = qubit_range(0, m);
    const auto x = qubit_range(static_cast<Qubit>(m), n);
    const auto b = qubit_range(static_cast<Qubit>(3 * n), n + 1);
    const Qubit anc = static_cast<Qubit>(4 * n + 1);
    c.push(gates::x(x[0]));
    for (auto q : counting) c.push(gates::h(q));
    for (std::size_t k = 0; k < m; ++k) {
        const std::uint64_t a_k = mod_pow(a, std::uint64_t{1} << k, N);
        append_c_modmul(c, counting[k], x, b, anc, a_k, N);
    }
    append_qft(c, counting, true);
    for (Qubit q = 0; q < m; ++q) c.push(gates::measure(q, q));

    std::uint64_t order = 1;
    while (mod_pow(a, order, N) != 1) ++order;
    nlohmann::json p = {{"N", N}, {"a", a}};
    nlohmann::json hidden = {{"N", N}, {"a", a}, {"n", n}, {"counting_qubits", m}, {"period", order}};
    return detail::make_result(Algorithm::shor, N, params.seed, std::move(c), std::move(p),
                               std::move(hidden));
}

}  // namespace qgen
