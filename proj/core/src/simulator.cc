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

#include "qgen/simulator.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>

#include "qgen/error.h"
#include "qgen/rng.h"

namespace qgen {

namespace {

using std::size_t;

constexpr Amplitude kI{0.0, 1.0};

inline size_t bit(Qubit q) {
    return size_t{1} << q;
}

/// Inserts a zero bit at each of the ascending `positions`.
inline size_t spread(size_t j, std::span<const Qubit> positions) {
    for (Qubit p : positions) {
        const size_t low = j & (bit(p) - 1);
        j = ((j >> p) << (p + 1)) | low;
    }
    return j;
}

/// Calls f(base) for every basis index with all `qubits` cleared.
template <typename F>
void for_each_free(size_t num_qubits, std::span<const Qubit> qubits, F &&f) {
    const size_t n = size_t{1} << num_qubits;
    if (qubits.size() == 2) {
        const size_t lo = bit(std::min(qubits[0], qubits[1]));
        const size_t hi = bit(std::max(qubits[0], qubits[1]));
        for (size_t i0 = 0; i0 < n; i0 += 2 * hi) {
            for (size_t i1 = i0; i1 < i0 + hi; i1 += 2 * lo) {
                for (size_t i = i1; i < i1 + lo; ++i) f(i);
            }
        }
        return;
    }
    std::array<Qubit, 64> sorted{};
    std::copy(qubits.begin(), qubits.end(), sorted.begin());
    const std::span<Qubit> used(sorted.data(), qubits.size());
    std::sort(used.begin(), used.end());
    const size_t count = n >> used.size();
    for (size_t j = 0; j < count; ++j) {
        f(spread(j, used));
    }
}

/// Complex product without the C99 NaN/Inf recovery path.
inline Amplitude mul(Amplitude x, Amplitude y) {
    return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

size_t mask_of(std::span<const Qubit> qubits) {
    size_t m = 0;
    for (auto q : qubits) m |= bit(q);
    return m;
}

}  // namespace

std::array<Amplitude, 4> single_qubit_matrix(const Instruction &instr) {
    const double r = 1.0 / std::numbers::sqrt2;
    const auto &p = instr.params;
    switch (instr.tag) {
        case GateTag::I:
            return {1.0, 0.0, 0.0, 1.0};
        case GateTag::H:
            return {r, r, r, -r};
        case GateTag::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateTag::Y:
            return {0.0, -kI, kI, 0.0};
        case GateTag::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateTag::S:
            return {1.0, 0.0, 0.0, kI};
        case GateTag::SDG:
            return {1.0, 0.0, 0.0, -kI};
        case GateTag::T:
            return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
        case GateTag::TDG:
            return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)};
        case GateTag::RX: {
            const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
            return {c, -kI * s, -kI * s, c};
        }
        case GateTag::RY: {
            const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
            return {c, -s, s, c};
        }
        case GateTag::RZ:
            return {std::polar(1.0, -p[0] / 2), 0.0, 0.0, std::polar(1.0, p[0] / 2)};
        case GateTag::PHASE:
            return {1.0, 0.0, 0.0, std::polar(1.0, p[0])};
        case GateTag::U3: {
            const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
            return {c, -std::polar(s, p[2]), std::polar(s, p[1]), std::polar(c, p[1] + p[2])};
        }
        default:
            fail(ErrorKind::invalid_argument,
                 std::string(gate_name(instr.tag)) + " is not a one-qubit gate");
    }
}

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits >= 63) {
        fail(ErrorKind::resource_limit, "state of " + std::to_string(num_qubits) + " qubits");
    }
    amps_.assign(size_t{1} << num_qubits, Amplitude{});
    amps_[0] = 1.0;
}

StateVector::StateVector(size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits >= 63 || amps_.size() != (size_t{1} << num_qubits)) {
        fail(ErrorKind::invalid_argument, "amplitude count does not match 2^num_qubits");
    }
}

void StateVector::apply(const Instruction &instr) {
    const auto &q = instr.qubits;
    for (auto qb : q) {
        if (qb >= num_qubits_) {
            fail(ErrorKind::invalid_instruction, "qubit out of range for state");
        }
    }
    Amplitude *a = amps_.data();
    const size_t n = amps_.size();
    switch (instr.tag) {
        case GateTag::I:
        case GateTag::BARRIER:
            return;
        case GateTag::MEASURE:
            fail(ErrorKind::invalid_argument, "measure is not a unitary instruction");
        case GateTag::CX: {
            const size_t c = bit(q[0]), t = bit(q[1]);
            for_each_free(num_qubits_, q, [&](size_t base) { std::swap(a[base | c], a[base | c | t]); });
            return;
        }
        case GateTag::CZ: {
            const size_t m = mask_of(q);
            for_each_free(num_qubits_, q, [&](size_t base) { a[base | m] = -a[base | m]; });
            return;
        }
        case GateTag::CPHASE:
        case GateTag::MCPHASE: {
            const size_t m = mask_of(q);
            const Amplitude ph = std::polar(1.0, instr.params[0]);
            for_each_free(num_qubits_, q, [&](size_t base) { a[base | m] = mul(a[base | m], ph); });
            return;
        }
        case GateTag::MCX: {
            const size_t c = mask_of(instr.controls()), t = bit(instr.target());
            for_each_free(num_qubits_, q, [&](size_t base) { std::swap(a[base | c], a[base | c | t]); });
            return;
        }
        case GateTag::SWAP: {
            const size_t b0 = bit(q[0]), b1 = bit(q[1]);
            for_each_free(num_qubits_, q, [&](size_t base) { std::swap(a[base | b0], a[base | b1]); });
            return;
        }
        case GateTag::RZZ: {
            const Amplitude even = std::polar(1.0, -instr.params[0] / 2);
            const Amplitude odd = std::conj(even);
            const size_t m = mask_of(q);
            for (size_t i = 0; i < n; ++i) {
                a[i] = mul(a[i], (std::popcount(i & m) & 1) ? odd : even);
            }
            return;
        }
        default:
            break;
    }
    const auto u = single_qubit_matrix(instr);
    const size_t stride = bit(q[0]);
    if (instr.tag == GateTag::X) {
        for (size_t base = 0; base < n; base += 2 * stride) {
            std::swap_ranges(a + base, a + base + stride, a + base + stride);
        }
        return;
    }
    if (u[1] == Amplitude{} && u[2] == Amplitude{}) {
        for (size_t base = 0; base < n; base += 2 * stride) {
            for (size_t i = base; i < base + stride; ++i) {
                a[i] = mul(a[i], u[0]);
                a[i + stride] = mul(a[i + stride], u[3]);
            }
        }
        return;
    }
    for (size_t base = 0; base < n; base += 2 * stride) {
        for (size_t i = base; i < base + stride; ++i) {
            const Amplitude x0 = a[i], x1 = a[i + stride];
            a[i] = mul(u[0], x0) + mul(u[1], x1);
            a[i + stride] = mul(u[2], x0) + mul(u[3], x1);
        }
    }
}

double StateVector::probability_one(Qubit qubit) const {
    double p = 0.0;
    const size_t b = bit(qubit);
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & b) p += std::norm(amps_[i]);
    }
    return p;
}

void StateVector::collapse(Qubit qubit, int outcome) {
    const size_t b = bit(qubit);
    double kept = 0.0;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (((i & b) != 0) == (outcome != 0)) {
            kept += std::norm(amps_[i]);
        } else {
            amps_[i] = 0.0;
        }
    }
    if (kept <= 0.0) {
        fail(ErrorKind::invalid_argument, "collapse onto a zero-probability outcome");
    }
    const double scale = 1.0 / std::sqrt(kept);
    for (auto &x : amps_) x *= scale;
}

int StateVector::measure(Qubit qubit, double uniform) {
    const double p1 = probability_one(qubit);
    const int outcome = uniform < p1 ? 1 : 0;
    collapse(qubit, outcome);
    return outcome;
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto &x : amps_) s += std::norm(x);
    return s;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        fail(ErrorKind::invalid_argument, "fidelity of states with different widths");
    }
    Amplitude dot{};
    for (size_t i = 0; i < a.size(); ++i) dot += std::conj(a[i]) * b[i];
    return std::norm(dot);
}

StateVector run_statevector(const Circuit &circuit, const SimOptions &options) {
    if (circuit.num_qubits() > options.width_cap) {
        fail(ErrorKind::resource_limit, "width " + std::to_string(circuit.num_qubits()) +
                                            " exceeds simulator cap " +
                                            std::to_string(options.width_cap));
    }
    if (has_mid_circuit_measure(circuit)) {
        fail(ErrorKind::requires_trajectory,
             "circuit measures a qubit and then acts on it again; use sample_counts");
    }
    StateVector state(circuit.num_qubits());
    for (const auto &instr : circuit) {
        if (instr.tag != GateTag::MEASURE) state.apply(instr);
    }
    return state;
}

double Histogram::frequency(const std::string &key) const {
    auto it = counts.find(key);
    if (it == counts.end() || shots == 0) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(shots);
}

namespace {

/// Qubits that interact (directly, or by writing the same clbit) form one
/// block; blocks evolve as a product state.
struct Block {
    std::vector<Qubit> qubits;  // global ids, ascending
    std::vector<Instruction> instrs;  // remapped to local qubit ids
    bool measured = false;
};

std::vector<Block> split_blocks(const Circuit &circuit) {
    const size_t n = circuit.num_qubits();
    std::vector<Qubit> parent(n);
    std::iota(parent.begin(), parent.end(), Qubit{0});
    auto find = [&](Qubit x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](Qubit x, Qubit y) { parent[find(x)] = find(y); };
    std::vector<long long> clbit_owner(circuit.num_clbits(), -1);
    for (const auto &instr : circuit) {
        if (instr.tag == GateTag::BARRIER) continue;
        for (size_t i = 1; i < instr.qubits.size(); ++i) unite(instr.qubits[0], instr.qubits[i]);
        if (instr.tag == GateTag::MEASURE) {
            auto &owner = clbit_owner[instr.clbits[0]];
            if (owner >= 0) {
                unite(static_cast<Qubit>(owner), instr.qubits[0]);
            } else {
                owner = instr.qubits[0];
            }
        }
    }
    std::vector<long long> block_of(n, -1);
    std::vector<Block> blocks;
    std::vector<Qubit> local(n);
    for (Qubit q = 0; q < n; ++q) {
        const Qubit root = find(q);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<long long>(blocks.size());
            blocks.emplace_back();
        }
        auto &b = blocks[static_cast<size_t>(block_of[root])];
        local[q] = static_cast<Qubit>(b.qubits.size());
        b.qubits.push_back(q);
    }
    for (const auto &instr : circuit) {
        if (instr.tag == GateTag::BARRIER || instr.tag == GateTag::I) continue;
        auto &b = blocks[static_cast<size_t>(block_of[find(instr.qubits[0])])];
        Instruction copy = instr;
        for (auto &q : copy.qubits) q = local[q];
        b.measured = b.measured || instr.tag == GateTag::MEASURE;
        b.instrs.push_back(std::move(copy));
    }
    return blocks;
}

bool block_has_mid_measure(const Block &block) {
    std::vector<bool> measured(block.qubits.size(), false);
    for (const auto &instr : block.instrs) {
        if (instr.tag == GateTag::MEASURE) {
            measured[instr.qubits[0]] = true;
            continue;
        }
        for (auto q : instr.qubits) {
            if (measured[q]) return true;
        }
    }
    return false;
}

using Outcomes = std::vector<std::string>;

inline void write_clbit(std::string &key, Clbit c, int value) {
    key[key.size() - 1 - c] = value ? '1' : '0';
}

void sample_trajectories(const Block &block, std::uint64_t shots, std::uint64_t seed,
                         std::uint64_t block_index, Outcomes &out) {
    size_t first_measure = 0;
    StateVector prefix(block.qubits.size());
    while (first_measure < block.instrs.size() &&
           block.instrs[first_measure].tag != GateTag::MEASURE) {
        prefix.apply(block.instrs[first_measure++]);
    }
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        Rng rng(derive_seed({seed, shot, block_index}));
        StateVector state = prefix;
        for (size_t i = first_measure; i < block.instrs.size(); ++i) {
            const auto &instr = block.instrs[i];
            if (instr.tag == GateTag::MEASURE) {
                write_clbit(out[shot], instr.clbits[0], state.measure(instr.qubits[0], rng.uniform()));
            } else {
                state.apply(instr);
            }
        }
    }
}

void sample_marginal(const Block &block, std::uint64_t shots, std::uint64_t seed,
                     std::uint64_t block_index, Outcomes &out) {
    StateVector state(block.qubits.size());
    // Last writer wins for each clbit.
    std::map<Clbit, Qubit> reads;
    for (const auto &instr : block.instrs) {
        if (instr.tag == GateTag::MEASURE) {
            reads[instr.clbits[0]] = instr.qubits[0];
        } else {
            state.apply(instr);
        }
    }
    std::vector<Qubit> measured;
    for (const auto &[c, q] : reads) measured.push_back(q);
    std::sort(measured.begin(), measured.end());
    measured.erase(std::unique(measured.begin(), measured.end()), measured.end());

    std::vector<double> cdf(size_t{1} << measured.size(), 0.0);
    for (size_t i = 0; i < state.size(); ++i) {
        const double p = std::norm(state[i]);
        if (p == 0.0) continue;
        size_t key = 0;
        for (size_t j = 0; j < measured.size(); ++j) {
            key |= ((i >> measured[j]) & 1) << j;
        }
        cdf[key] += p;
    }
    std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
    const double total = cdf.back();

    std::vector<size_t> slot_of(block.qubits.size(), 0);
    for (size_t j = 0; j < measured.size(); ++j) slot_of[measured[j]] = j;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        Rng rng(derive_seed({seed, shot, block_index}));
        const double u = rng.uniform() * total;
        size_t key = static_cast<size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        key = std::min(key, cdf.size() - 1);
        for (const auto &[c, q] : reads) {
            write_clbit(out[shot], c, static_cast<int>((key >> slot_of[q]) & 1));
        }
    }
}

}  // namespace

Histogram sample_counts(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed,
                        const SimOptions &options) {
    if (shots == 0) {
        fail(ErrorKind::invalid_argument, "shots must be at least 1");
    }
    const auto blocks = split_blocks(circuit);
    for (const auto &b : blocks) {
        if (b.measured && b.qubits.size() > options.width_cap) {
            fail(ErrorKind::resource_limit,
                 "interacting block of " + std::to_string(b.qubits.size()) +
                     " qubits exceeds simulator cap " + std::to_string(options.width_cap));
        }
    }
    Outcomes outcomes(shots, std::string(circuit.num_clbits(), '0'));
    for (size_t i = 0; i < blocks.size(); ++i) {
        const auto &b = blocks[i];
        if (!b.measured) continue;
        if (options.force_trajectory || block_has_mid_measure(b)) {
            sample_trajectories(b, shots, seed, i, outcomes);
        } else {
            sample_marginal(b, shots, seed, i, outcomes);
        }
    }
    Histogram h;
    h.shots = shots;
    for (auto &key : outcomes) ++h.counts[std::move(key)];
    return h;
}

void to_json(nlohmann::json &j, const Histogram &h) {
    j = nlohmann::json{{"shots", h.shots}, {"counts", h.counts}};
}

void from_json(const nlohmann::json &j, Histogram &h) {
    try {
        h.shots = j.at("shots").get<std::uint64_t>();
        h.counts = j.at("counts").get<std::map<std::string, std::uint64_t>>();
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::parse_error, std::string("histogram json: ") + e.what());
    }
    std::uint64_t sum = 0;
    size_t width = h.counts.empty() ? 0 : h.counts.begin()->first.size();
    for (const auto &[k, v] : h.counts) {
        sum += v;
        if (k.size() != width || k.find_first_not_of("01") != std::string::npos) {
            fail(ErrorKind::parse_error, "histogram key '" + k + "' is not a uniform bitstring");
        }
    }
    if (sum != h.shots) {
        fail(ErrorKind::parse_error, "histogram counts sum to " + std::to_string(sum) +
                                         " but shots is " + std::to_string(h.shots));
    }
}

namespace {

constexpr char kMagic[4] = {'Q', 'G', 'S', 'V'};
constexpr std::uint32_t kFormatVersion = 1;

void put_u32(std::ostream &out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void put_f64(std::ostream &out, double d) {
    const auto v = std::bit_cast<std::uint64_t>(d);
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

std::uint64_t get_le(std::istream &in, int bytes) {
    unsigned char b[8] = {};
    in.read(reinterpret_cast<char *>(b), bytes);
    if (!in) fail(ErrorKind::io_error, "truncated statevector file");
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= std::uint64_t{b[i]} << (8 * i);
    return v;
}

}  // namespace

void write_statevector(std::ostream &out, const StateVector &state) {
    out.write(kMagic, 4);
    put_u32(out, kFormatVersion);
    put_u32(out, static_cast<std::uint32_t>(state.num_qubits()));
    for (const auto &x : state.amplitudes()) {
        put_f64(out, x.real());
        put_f64(out, x.imag());
    }
    if (!out) fail(ErrorKind::io_error, "failed writing statevector");
}

StateVector read_statevector(std::istream &in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) {
        fail(ErrorKind::io_error, "not a QGSV statevector file");
    }
    const auto version = get_le(in, 4);
    if (version != kFormatVersion) {
        fail(ErrorKind::io_error, "unsupported QGSV version " + std::to_string(version));
    }
    const auto n = get_le(in, 4);
    if (n > 40) fail(ErrorKind::io_error, "implausible statevector width");
    std::vector<Amplitude> amps(size_t{1} << n);
    for (auto &x : amps) {
        const double re = std::bit_cast<double>(get_le(in, 8));
        const double im = std::bit_cast<double>(get_le(in, 8));
        x = {re, im};
    }
    return StateVector(static_cast<size_t>(n), std::move(amps));
}

}  // namespace qgen
