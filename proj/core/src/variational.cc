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

#include "qgen/variational.h"

#include <numbers>

#include "gen_common.h"
#include "qgen/error.h"
#include "qgen/rng.h"

namespace qgen {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::vector<double> resolve_angles(const std::optional<std::vector<double>> &given, std::size_t count,
                                   Rng &rng, std::string_view what) {
    if (given) {
        if (given->size() != count) {
            fail(ErrorKind::invalid_argument, std::string(what) + ": expected " +
                                                  std::to_string(count) + " values, got " +
                                                  std::to_string(given->size()));
        }
        return *given;
    }
    std::vector<double> out(count);
    for (auto &v : out) v = rng.uniform(0.0, kTwoPi);
    return out;
}

void measure_all(Circuit &c) {
    for (Qubit q = 0; q < c.num_qubits(); ++q) c.push(gates::measure(q, q));
}

Instruction rotation(GateTag tag, double angle, Qubit q) {
    switch (tag) {
        case GateTag::RX:
            return gates::rx(angle, q);
        case GateTag::RY:
            return gates::ry(angle, q);
        case GateTag::RZ:
            return gates::rz(angle, q);
        default:
            fail(ErrorKind::invalid_argument,
                 "rotation layers accept rx, ry, rz; got " + std::string(gate_name(tag)));
    }
}

}  // namespace

std::vector<Edge> cyclic_graph(std::size_t n) {
    if (n < 2) return {};
    if (n == 2) return {{0, 1}};
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<Qubit>(i), static_cast<Qubit>((i + 1) % n));
    }
    return edges;
}

std::string_view to_string(Entanglement e) {
    switch (e) {
        case Entanglement::full:
            return "full";
        case Entanglement::linear:
            return "linear";
        case Entanglement::circular:
            return "circular";
    }
    return "full";
}

Entanglement parse_entanglement(std::string_view name) {
    if (name == "full") return Entanglement::full;
    if (name == "linear") return Entanglement::linear;
    if (name == "circular") return Entanglement::circular;
    fail(ErrorKind::invalid_argument, "unknown entanglement '" + std::string(name) + "'");
}

GenResult gen_qaoa(const QaoaParams &params) {
    const std::size_t n = params.problem_size;
    detail::require_min_size(n, 2, "QAOA node count");
    detail::require_min_size(params.reps, 1, "QAOA reps");
    const auto edges = params.edges ? *params.edges : cyclic_graph(n);
    for (const auto &[u, v] : edges) {
        if (u >= n || v >= n) fail(ErrorKind::invalid_argument, "edge endpoint out of range");
        if (u == v) fail(ErrorKind::invalid_argument, "self-loop on node " + std::to_string(u));
    }
    Rng rng(params.seed);
    const auto gammas = resolve_angles(params.gammas, params.reps, rng, "gammas");
    const auto betas = resolve_angles(params.betas, params.reps, rng, "betas");

    Circuit c(n, n);
    for (Qubit q = 0; q < n; ++q) c.push(gates::h(q));
    for (std::size_t r = 0; r < params.reps; ++r) {
        for (const auto &[u, v] : edges) c.push(gates::rzz(gammas[r], u, v));
        for (Qubit q = 0; q < n; ++q) c.push(gates::rx(2 * betas[r], q));
    }
    measure_all(c);
    nlohmann::json edge_json = nlohmann::json::array();
    for (const auto &[u, v] : edges) edge_json.push_back({u, v});
    nlohmann::json p = {{"reps", params.reps}, {"graph", params.edges ? "explicit" : "cyclic"}};
    nlohmann::json hidden = {{"edges", edge_json}, {"gammas", gammas}, {"betas", betas}};
    return detail::make_result(Algorithm::qaoa, n, params.seed, std::move(c), std::move(p),
                               std::move(hidden));
}

GenResult gen_vqe(const VqeParams &params) {
    const std::size_t n = params.problem_size;
    detail::require_min_size(n, 2, "VQE width");
    detail::require_min_size(params.reps, 1, "VQE reps");
    if (params.rotations.empty()) {
        fail(ErrorKind::invalid_argument, "VQE needs at least one rotation gate");
    }
    Rng rng(params.seed);
    const std::size_t per_layer = params.rotations.size() * n;
    const auto angles = resolve_angles(params.angles, (params.reps + 1) * per_layer, rng, "angles");

    Circuit c(n, n);
    std::size_t next = 0;
    auto rotation_layer = [&] {
        for (auto tag : params.rotations) {
            for (Qubit q = 0; q < n; ++q) c.push(rotation(tag, angles[next++], q));
        }
    };
    for (std::size_t r = 0; r < params.reps; ++r) {
        rotation_layer();
        switch (params.entanglement) {
            case Entanglement::full:
                for (Qubit i = 0; i < n; ++i) {
                    for (Qubit j = i + 1; j < n; ++j) c.push(gates::cx(i, j));
                }
                break;
            case Entanglement::linear:
            case Entanglement::circular:
                for (Qubit i = 0; i + 1 < n; ++i) c.push(gates::cx(i, i + 1));
                if (params.entanglement == Entanglement::circular && n > 2) {
                    c.push(gates::cx(static_cast<Qubit>(n - 1), 0));
                }
                break;
        }
    }
    rotation_layer();
    measure_all(c);
    nlohmann::json rot = nlohmann::json::array();
    for (auto tag : params.rotations) rot.push_back(gate_name(tag));
    nlohmann::json p = {{"rotations", rot},
                        {"entanglement", to_string(params.entanglement)},
                        {"reps", params.reps}};
    return detail::make_result(Algorithm::vqe, n, params.seed, std::move(c), std::move(p),
                               {{"angles", angles}});
}

GenResult gen_vqc(const VqcParams &params) {
    const std::size_t n = params.problem_size;
    detail::require_min_size(n, 2, "VQC width");
    detail::require_min_size(params.fm_reps, 1, "feature-map reps");
    detail::require_min_size(params.vf_reps, 1, "variational-form reps");
    Rng rng(params.seed);
    const auto x = resolve_angles(params.features, n, rng, "features");
    const auto theta = resolve_angles(params.angles, (params.vf_reps + 1) * n, rng, "angles");
    const double pi = std::numbers::pi;

    Circuit c(n, n);
    for (std::size_t r = 0; r < params.fm_reps; ++r) {
        for (Qubit q = 0; q < n; ++q) c.push(gates::h(q));
        for (Qubit q = 0; q < n; ++q) c.push(gates::phase(2 * x[q], q));
        for (Qubit i = 0; i < n; ++i) {
            for (Qubit j = i + 1; j < n; ++j) {
                c.push(gates::cx(i, j));
                c.push(gates::phase(2 * (pi - x[i]) * (pi - x[j]), j));
                c.push(gates::cx(i, j));
            }
        }
    }
    std::size_t next = 0;
    for (std::size_t r = 0; r < params.vf_reps; ++r) {
        for (Qubit q = 0; q < n; ++q) c.push(gates::ry(theta[next++], q));
        for (Qubit i = 0; i + 1 < n; ++i) c.push(gates::cx(i, i + 1));
    }
    for (Qubit q = 0; q < n; ++q) c.push(gates::ry(theta[next++], q));
    measure_all(c);
    nlohmann::json p = {{"fm_reps", params.fm_reps}, {"vf_reps", params.vf_reps}};
    return detail::make_result(Algorithm::vqc, n, params.seed, std::move(c), std::move(p),
                               {{"features", x}, {"angles", theta}});
}

}  // namespace qgen
