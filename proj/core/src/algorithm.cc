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

#include "qgen/algorithm.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "qgen/comm.h"
#include "qgen/error.h"
#include "qgen/fourier.h"
#include "qgen/query.h"
#include "qgen/search.h"
#include "qgen/variational.h"

namespace qgen {

namespace {

struct AlgoInfo {
    Algorithm algo;
    std::string_view id;
    std::string_view category;
    std::string_view long_name;
};

constexpr std::array<AlgoInfo, 15> kInfo = {{
    {Algorithm::dj, "dj", "query", "deutsch-jozsa"},
    {Algorithm::bv, "bv", "query", "bernstein-vazirani"},
    {Algorithm::simon, "simon", "query", "simon"},
    {Algorithm::qft, "qft", "fourier", "quantum-fourier-transform"},
    {Algorithm::qpe, "qpe", "fourier", "phase-estimation"},
    {Algorithm::shor, "shor", "fourier", "shor"},
    {Algorithm::grover, "grover", "search", "grover"},
    {Algorithm::counting, "counting", "search", "quantum-counting"},
    {Algorithm::walk, "walk", "search", "quantum-walk"},
    {Algorithm::qkd, "qkd", "communication", "key-distribution"},
    {Algorithm::superdense, "superdense", "communication", "superdense-coding"},
    {Algorithm::teleport, "teleport", "communication", "teleportation"},
    {Algorithm::qaoa, "qaoa", "variational", "qaoa"},
    {Algorithm::vqe, "vqe", "variational", "vqe"},
    {Algorithm::vqc, "vqc", "variational", "vqc"},
}};

const AlgoInfo &info(Algorithm algo) {
    return kInfo[static_cast<std::size_t>(algo)];
}

/// Typed view over a generator options object that rejects unknown keys.
class Options {
   public:
    Options(const nlohmann::json &j, std::string_view algo) : j_(j), algo_(algo) {
        if (!j.is_null() && !j.is_object()) {
            fail(ErrorKind::invalid_argument, "generator options must be a JSON object");
        }
    }

    bool has(const char *key) {
        seen_.insert(key);
        return j_.is_object() && j_.contains(key) && !j_.at(key).is_null() &&
               !(j_.at(key).is_string() && j_.at(key).get<std::string>() == "random");
    }

    template <typename T>
    std::optional<T> get(const char *key) {
        if (!has(key)) return std::nullopt;
        try {
            return j_.at(key).get<T>();
        } catch (const nlohmann::json::exception &) {
            fail(ErrorKind::invalid_argument,
                 std::string(algo_) + " option '" + key + "' has the wrong type");
        }
    }

    template <typename T>
    T get_or(const char *key, T fallback) {
        auto v = get<T>(key);
        return v ? *v : fallback;
    }

    const nlohmann::json &raw(const char *key) {
        seen_.insert(key);
        return j_.at(key);
    }

    void finish() const {
        if (!j_.is_object()) return;
        for (const auto &[key, value] : j_.items()) {
            if (!seen_.count(key)) {
                fail(ErrorKind::invalid_argument,
                     "unknown option '" + key + "' for " + std::string(algo_));
            }
        }
    }

   private:
    const nlohmann::json &j_;
    std::string_view algo_;
    std::set<std::string> seen_;
};

double parse_fraction(const nlohmann::json &v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return std::stod(s);
            return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
        } catch (const std::exception &) {
        }
    }
    fail(ErrorKind::invalid_argument, "theta must be a number or a fraction like \"1/8\"");
}

GateTag parse_rotation(const std::string &name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "rx") return GateTag::RX;
    if (lower == "ry") return GateTag::RY;
    if (lower == "rz") return GateTag::RZ;
    fail(ErrorKind::invalid_argument, "unknown rotation gate '" + name + "'");
}

}  // namespace

std::string_view algorithm_id(Algorithm algo) {
    return info(algo).id;
}

std::string_view category_of(Algorithm algo) {
    return info(algo).category;
}

Algorithm parse_algorithm(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) {
        return ch == '_' ? '-' : static_cast<char>(std::tolower(ch));
    });
    for (const auto &i : kInfo) {
        if (lower == i.id || lower == i.long_name) return i.algo;
    }
    fail(ErrorKind::invalid_argument, "unknown algorithm '" + std::string(name) + "'");
}

void to_json(nlohmann::json &j, const AlgoMetadata &m) {
    j = nlohmann::json{{"algorithm", algorithm_id(m.algorithm)},
                       {"category", category_of(m.algorithm)},
                       {"problem_size", m.problem_size},
                       {"seed", m.seed},
                       {"params", m.params},
                       {"hidden", m.hidden}};
}

void from_json(const nlohmann::json &j, AlgoMetadata &m) {
    try {
        m.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
        m.problem_size = j.at("problem_size").get<std::size_t>();
        m.seed = j.value("seed", std::uint64_t{0});
        m.params = j.value("params", nlohmann::json::object());
        m.hidden = j.value("hidden", nlohmann::json::object());
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::parse_error, std::string("metadata json: ") + e.what());
    }
}

GenResult generate(Algorithm algo, std::size_t size, std::uint64_t seed,
                   const nlohmann::json &options) {
    Options opt(options, algorithm_id(algo));
    GenResult result = [&]() -> GenResult {
        switch (algo) {
            case Algorithm::dj: {
                DjParams p{size, DjOracle::constant, 1, std::nullopt, seed};
                const auto kind = opt.get_or<std::string>("oracle", "constant");
                if (kind == "balanced") {
                    p.oracle = DjOracle::balanced;
                } else if (kind != "constant") {
                    fail(ErrorKind::invalid_argument, "oracle must be constant or balanced");
                }
                if (opt.has("value")) {
                    p.constant_value = opt.get<int>("value");
                } else if (options.is_object() && options.contains("value")) {
                    p.constant_value = std::nullopt;
                }
                p.pattern = opt.get<std::string>("pattern");
                return gen_deutsch_jozsa(p);
            }
            case Algorithm::bv:
                return gen_bernstein_vazirani({size, opt.get<std::string>("secret"), seed});
            case Algorithm::simon:
                return gen_simon({size, opt.get<std::string>("secret"), seed});
            case Algorithm::qft: {
                QftParams p;
                p.problem_size = size;
                p.init_value = opt.get<std::uint64_t>("value");
                p.initialize = opt.get_or("initialize", true);
                p.inverse = opt.get_or("inverse", true);
                p.measure = opt.get_or("measure", true);
                p.seed = seed;
                return gen_qft(p);
            }
            case Algorithm::qpe: {
                QpeParams p;
                p.problem_size = size;
                if (opt.has("theta")) p.theta = parse_fraction(opt.raw("theta"));
                const auto mode = opt.get_or<std::string>("mode", "repeat");
                if (mode == "fused") {
                    p.mode = QpeMode::fused;
                } else if (mode != "repeat") {
                    fail(ErrorKind::invalid_argument, "mode must be repeat or fused");
                }
                p.seed = seed;
                return gen_qpe(p);
            }
            case Algorithm::shor: {
                auto r = gen_shor({size, opt.get<std::uint64_t>("a"), seed});
                if (auto *g = std::get_if<GenResult>(&r)) return std::move(*g);
                const auto &f = std::get<FactorResult>(r);
                fail(ErrorKind::invalid_argument,
                     "N=" + std::to_string(size) + " needs no circuit (" +
                         std::string(to_string(f.status)) + ")");
            }
            case Algorithm::grover: {
                GroverParams p;
                p.problem_size = size;
                p.marked = opt.get<std::vector<std::string>>("marked");
                p.solutions = opt.get<std::uint64_t>("solutions");
                p.iterations = opt.get<std::size_t>("iterations");
                p.seed = seed;
                return gen_grover(p);
            }
            case Algorithm::counting: {
                CountingParams p;
                p.problem_size = size;
                p.searching_qubits = opt.get<std::size_t>("searching_qubits");
                p.marked = opt.get<std::vector<std::string>>("marked");
                p.solutions = opt.get<std::uint64_t>("solutions");
                p.seed = seed;
                return gen_quantum_counting(p);
            }
            case Algorithm::walk: {
                WalkParams p;
                p.problem_size = size;
                p.theta_qubits = opt.get<std::size_t>("theta_qubits");
                p.marked = opt.get<std::vector<std::string>>("marked");
                p.solutions = opt.get<std::uint64_t>("solutions");
                p.iterations = opt.get<std::size_t>("iterations");
                p.seed = seed;
                return gen_quantum_walk(p);
            }
            case Algorithm::qkd:
                return gen_qkd({size, opt.get_or("interception", true), seed});
            case Algorithm::superdense:
                return gen_superdense({size, opt.get<std::string>("message"), seed});
            case Algorithm::teleport:
                return gen_teleport(
                    {size, opt.get<std::vector<std::array<double, 3>>>("states"), seed});
            case Algorithm::qaoa: {
                QaoaParams p;
                p.problem_size = size;
                if (auto edges = opt.get<std::vector<std::array<Qubit, 2>>>("edges")) {
                    std::vector<Edge> e;
                    for (const auto &[u, v] : *edges) e.emplace_back(u, v);
                    p.edges = e;
                }
                p.reps = opt.get_or<std::size_t>("reps", 1);
                p.gammas = opt.get<std::vector<double>>("gammas");
                p.betas = opt.get<std::vector<double>>("betas");
                p.seed = seed;
                return gen_qaoa(p);
            }
            case Algorithm::vqe: {
                VqeParams p;
                p.problem_size = size;
                if (auto rot = opt.get<std::vector<std::string>>("rotations")) {
                    p.rotations.clear();
                    for (const auto &r : *rot) p.rotations.push_back(parse_rotation(r));
                }
                if (auto e = opt.get<std::string>("entanglement")) p.entanglement = parse_entanglement(*e);
                p.reps = opt.get_or<std::size_t>("reps", 1);
                p.angles = opt.get<std::vector<double>>("angles");
                p.seed = seed;
                return gen_vqe(p);
            }
            case Algorithm::vqc: {
                VqcParams p;
                p.problem_size = size;
                p.fm_reps = opt.get_or<std::size_t>("fm_reps", 1);
                p.vf_reps = opt.get_or<std::size_t>("vf_reps", 1);
                p.features = opt.get<std::vector<double>>("features");
                p.angles = opt.get<std::vector<double>>("angles");
                p.seed = seed;
                return gen_vqc(p);
            }
        }
        fail(ErrorKind::invalid_argument, "unhandled algorithm");
    }();
    opt.finish();
    return result;
}

}  // namespace qgen
