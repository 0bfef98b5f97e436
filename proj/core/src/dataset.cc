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

#include "qgen/dataset.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "qgen/decompose.h"
#include "qgen/error.h"
#include "qgen/postprocess.h"
#include "qgen/qasm.h"
#include "qgen/rng.h"
#include "qgen/simulator.h"

#ifndef QGEN_VERSION_STRING
#define QGEN_VERSION_STRING "0.0.0"
#endif

namespace qgen {

namespace fs = std::filesystem;

std::string_view version() {
    return QGEN_VERSION_STRING;
}

int complexity_rating(Algorithm algo) {
    // Position within the category, in the order the categories list them.
    switch (algo) {
        case Algorithm::dj:
        case Algorithm::qft:
        case Algorithm::grover:
        case Algorithm::qkd:
        case Algorithm::qaoa:
            return 1;
        case Algorithm::bv:
        case Algorithm::qpe:
        case Algorithm::counting:
        case Algorithm::superdense:
        case Algorithm::vqe:
            return 2;
        case Algorithm::simon:
        case Algorithm::shor:
        case Algorithm::walk:
        case Algorithm::teleport:
        case Algorithm::vqc:
            return 3;
    }
    return 1;
}

std::vector<std::uint64_t> shor_dataset_inputs(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 9; n <= limit; n += 2) {
        if (!shor_screen(n, std::nullopt)) out.push_back(n);
    }
    return out;
}

DatasetConfig DatasetConfig::defaults() {
    DatasetConfig c;
    for (auto algo : kAllAlgorithms) c.sweeps[algo] = SweepConfig{};
    c.sweeps[Algorithm::shor].n_list = shor_dataset_inputs();
    return c;
}

namespace {

template <typename T>
void read_key(const nlohmann::json &j, const char *key, T &out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

void check_keys(const nlohmann::json &j, std::initializer_list<std::string_view> allowed,
                std::string_view where) {
    if (!j.is_object()) fail(ErrorKind::invalid_argument, std::string(where) + " must be an object");
    for (const auto &[key, value] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            fail(ErrorKind::invalid_argument,
                 "unknown key '" + key + "' in " + std::string(where));
        }
    }
}

}  // namespace

DatasetConfig dataset_config_from_json(const nlohmann::json &j) {
    DatasetConfig c = DatasetConfig::defaults();
    try {
        check_keys(j,
                   {"output_dir", "master_seed", "shots", "replicates", "histogram_width_cap",
                    "statevector_width_cap", "max_basis_gates", "max_sim_work", "timeout_ms",
                    "threads", "record_gen_ms", "algorithms", "categories"},
                   "dataset config");
        if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
        read_key(j, "master_seed", c.master_seed);
        read_key(j, "shots", c.shots);
        read_key(j, "replicates", c.replicates);
        read_key(j, "histogram_width_cap", c.histogram_width_cap);
        read_key(j, "statevector_width_cap", c.statevector_width_cap);
        read_key(j, "max_basis_gates", c.max_basis_gates);
        read_key(j, "max_sim_work", c.max_sim_work);
        read_key(j, "timeout_ms", c.timeout_ms);
        read_key(j, "threads", c.threads);
        read_key(j, "record_gen_ms", c.record_gen_ms);
        if (j.contains("algorithms")) {
            const auto &algs = j.at("algorithms");
            if (!algs.is_object()) fail(ErrorKind::invalid_argument, "algorithms must be an object");
            // Listing any algorithm switches to opt-in for the rest.
            for (auto &[algo, sweep] : c.sweeps) sweep.enabled = false;
            for (const auto &[name, body] : algs.items()) {
                const Algorithm algo = parse_algorithm(name);
                SweepConfig &s = c.sweeps[algo];
                s.enabled = true;
                if (body.is_boolean()) {
                    s.enabled = body.get<bool>();
                    continue;
                }
                check_keys(body, {"enabled", "min_size", "max_size", "n_list", "options"},
                           "algorithms." + name);
                read_key(body, "enabled", s.enabled);
                read_key(body, "min_size", s.min_size);
                if (body.contains("max_size") && !body.at("max_size").is_null()) {
                    s.max_size = body.at("max_size").get<std::size_t>();
                }
                read_key(body, "n_list", s.n_list);
                if (body.contains("options")) s.options = body.at("options");
            }
        }
        if (j.contains("categories")) {
            for (const auto &[name, label] : j.at("categories").items()) {
                c.category_labels[parse_algorithm(name)] = label.get<std::string>();
            }
        }
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::invalid_argument, std::string("dataset config: ") + e.what());
    }
    if (c.shots == 0) fail(ErrorKind::invalid_argument, "shots must be positive");
    if (c.replicates == 0) fail(ErrorKind::invalid_argument, "replicates must be positive");
    for (const auto &[algo, s] : c.sweeps) {
        if (algo == Algorithm::shor) continue;
        if (s.min_size < 2) {
            fail(ErrorKind::invalid_argument,
                 std::string(algorithm_id(algo)) + ": minimum problem size is 2");
        }
        if (s.max_size && *s.max_size < s.min_size) {
            fail(ErrorKind::invalid_argument, std::string(algorithm_id(algo)) + ": empty size range");
        }
    }
    return c;
}

std::uint64_t dataset_seed(std::uint64_t master, Algorithm algo, std::size_t size,
                           std::size_t replicate) {
    return derive_seed({master, stable_hash(algorithm_id(algo)), size, replicate});
}

namespace {

struct Job {
    DatasetEntry entry;
    std::optional<GenResult> generated;
};

void write_file(const fs::path &path, const std::string &bytes) {
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    if (!out) fail(ErrorKind::io_error, "cannot write " + path.string());
}

std::string entry_stem(Algorithm algo, std::size_t size, std::size_t replicate) {
    std::string stem = std::string(algorithm_id(algo)) + "/" + std::string(algorithm_id(algo)) +
                       "_" + std::to_string(size);
    if (replicate > 0) stem += "_r" + std::to_string(replicate);
    return stem;
}

/// Sizes for one sweep, with the size at which the sweep stopped.
std::vector<std::size_t> sweep_sizes(Algorithm algo, const SweepConfig &s) {
    if (algo == Algorithm::shor) {
        std::vector<std::size_t> ns(s.n_list.begin(), s.n_list.end());
        if (ns.empty()) {
            for (auto n : shor_dataset_inputs()) ns.push_back(n);
        }
        return ns;
    }
    // Open-ended sweeps are bounded by the caps; the limit here only guards
    // against a misconfigured cap.
    const std::size_t last = s.max_size.value_or(64);
    std::vector<std::size_t> sizes;
    for (std::size_t n = s.min_size; n <= last; ++n) {
        // Odd widths cannot be split into sender/receiver pairs.
        if (algo == Algorithm::superdense && n % 2 != 0) continue;
        sizes.push_back(n);
    }
    return sizes;
}

/// Generates entries for one algorithm until a cap trips.
void plan_sweep(const DatasetConfig &config, Algorithm algo, const SweepConfig &sweep,
                std::vector<Job> &jobs, std::vector<SweepStop> &stops) {
    const std::string category = config.category_labels.contains(algo)
                                     ? config.category_labels.at(algo)
                                     : std::string(category_of(algo));
    for (std::size_t size : sweep_sizes(algo, sweep)) {
        bool stop = false;
        for (std::size_t rep = 0; rep < config.replicates && !stop; ++rep) {
            Job job;
            DatasetEntry &e = job.entry;
            e.algorithm = algo;
            e.category = category;
            e.complexity_rating = complexity_rating(algo);
            e.problem_size = size;
            e.replicate = rep;
            e.seed = dataset_seed(config.master_seed, algo, size, rep);
            e.params = sweep.options;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                GenResult g = generate(algo, size, e.seed, sweep.options);
                const double ms = std::chrono::duration<double, std::milli>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count();
                const std::size_t width = g.circuit.num_qubits();
                const BasisCost cost = basis_cost(g.circuit);
                const double work = static_cast<double>(g.circuit.size()) * std::ldexp(1.0, static_cast<int>(width));
                std::string reason;
                if (algo != Algorithm::shor && width > config.histogram_width_cap) {
                    reason = "width " + std::to_string(width) + " above cap";
                } else if (cost.total() > config.max_basis_gates) {
                    reason = "basis gate count " + std::to_string(cost.total()) + " above cap";
                } else if (algo != Algorithm::shor && work > config.max_sim_work) {
                    reason = "simulation work above cap";
                } else if (ms > static_cast<double>(config.timeout_ms)) {
                    reason = "generation timeout";
                }
                if (!reason.empty()) {
                    stops.push_back({algo, size, reason});
                    stop = true;
                    break;
                }
                e.params = g.metadata.params;
                if (config.record_gen_ms) e.gen_ms = ms;
                job.generated = std::move(g);
            } catch (const Error &err) {
                if (err.kind() == ErrorKind::resource_limit) {
                    stops.push_back({algo, size, err.what()});
                    stop = true;
                    break;
                }
                e.ok = false;
                e.error = err.what();
            }
            jobs.push_back(std::move(job));
        }
        if (stop) return;
    }
}

void run_job(const DatasetConfig &config, Job &job) {
    DatasetEntry &e = job.entry;
    if (!job.generated) return;  // generation already failed
    const GenResult &g = *job.generated;
    const fs::path root = config.output_dir;
    const std::string stem = entry_stem(e.algorithm, e.problem_size, e.replicate);
    try {
        const std::string qasm = to_qasm(g.circuit);
        e.qasm_path = stem + ".qasm";
        write_file(root / e.qasm_path, qasm);
        e.census = census_of_basis(from_qasm(qasm));

        e.metadata_path = stem + ".meta.json";
        write_file(root / e.metadata_path, nlohmann::json(g.metadata).dump(2) + "\n");

        const std::size_t width = g.circuit.num_qubits();
        if (width <= config.histogram_width_cap) {
            const Histogram h = sample_counts(g.circuit, config.shots,
                                              derive_seed({e.seed, stable_hash("shots")}));
            e.histogram_path = stem + ".json";
            write_file(root / e.histogram_path, nlohmann::json(h).dump() + "\n");
            const Verification v = verify(g, h);
            e.verdict = std::string(to_string(v.verdict));
            e.score = v.score;
        }
        if (width <= config.statevector_width_cap) {
            const StateVector sv = run_statevector(without_measurements(g.circuit));
            std::ostringstream bytes(std::ios::binary);
            write_statevector(bytes, sv);
            e.statevector_path = stem + ".qgsv";
            write_file(root / e.statevector_path, bytes.str());
        }
        e.ok = true;
    } catch (const Error &err) {
        e.ok = false;
        e.error = err.what();
    }
}

nlohmann::json census_json(const GateCensus &c) {
    return {{"width", c.width},
            {"depth", c.depth},
            {"single_qubit", c.single_qubit_gates},
            {"cnot", c.cnot_gates},
            {"measure", c.measure_gates}};
}

nlohmann::json path_or_null(const std::string &p) {
    return p.empty() ? nlohmann::json(nullptr) : nlohmann::json(p);
}

}  // namespace

void to_json(nlohmann::json &j, const DatasetManifest &m) {
    j = nlohmann::json::object();
    j["tool"] = "qgen";
    j["tool_version"] = m.tool_version;
    j["master_seed"] = m.master_seed;
    j["shots"] = m.shots;
    j["ratings_provisional"] = true;
    auto entries = nlohmann::json::array();
    for (const auto &e : m.entries) {
        nlohmann::json x;
        x["algorithm"] = algorithm_id(e.algorithm);
        x["category"] = e.category;
        x["complexity_rating"] = e.complexity_rating;
        x["problem_size"] = e.problem_size;
        x["replicate"] = e.replicate;
        x["seed"] = e.seed;
        x["params"] = e.params;
        x["status"] = e.ok ? "ok" : "failed";
        if (!e.ok) x["error"] = e.error;
        if (e.ok) x["census"] = census_json(e.census);
        x["qasm"] = path_or_null(e.qasm_path);
        x["metadata"] = path_or_null(e.metadata_path);
        x["histogram"] = path_or_null(e.histogram_path);
        x["statevector"] = path_or_null(e.statevector_path);
        if (e.verdict) x["verdict"] = *e.verdict;
        if (e.score) x["score"] = *e.score;
        if (e.gen_ms) x["gen_ms"] = *e.gen_ms;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    auto stops = nlohmann::json::array();
    for (const auto &s : m.stops) {
        stops.push_back({{"algorithm", algorithm_id(s.algorithm)},
                         {"problem_size", s.problem_size},
                         {"reason", s.reason}});
    }
    j["sweep_stops"] = std::move(stops);
}

std::string census_csv(const DatasetManifest &manifest) {
    std::string out = "algorithm,size,width,depth,single_qubit,cnot,measure,gen_ms\n";
    for (const auto &e : manifest.entries) {
        if (!e.ok) continue;
        out += std::string(algorithm_id(e.algorithm)) + "," + std::to_string(e.problem_size) + "," +
               std::to_string(e.census.width) + "," + std::to_string(e.census.depth) + "," +
               std::to_string(e.census.single_qubit_gates) + "," +
               std::to_string(e.census.cnot_gates) + "," + std::to_string(e.census.measure_gates) +
               ",";
        if (e.gen_ms) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", *e.gen_ms);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

DatasetManifest build_dataset(const DatasetConfig &config) {
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec || !fs::is_directory(config.output_dir)) {
        fail(ErrorKind::io_error, "cannot create output directory " + config.output_dir.string());
    }

    std::vector<Job> jobs;
    DatasetManifest manifest;
    manifest.tool_version = std::string(version());
    manifest.master_seed = config.master_seed;
    manifest.shots = config.shots;
    for (auto algo : kAllAlgorithms) {
        auto it = config.sweeps.find(algo);
        if (it == config.sweeps.end() || !it->second.enabled) continue;
        fs::create_directories(config.output_dir / std::string(algorithm_id(algo)), ec);
        if (ec) fail(ErrorKind::io_error, "cannot create " + std::string(algorithm_id(algo)) + "/");
        plan_sweep(config, algo, it->second, jobs, manifest.stops);
    }

    // Each job writes only its own files, so the order of completion does
    // not matter; results stay at their planned index.
    std::size_t threads = config.threads ? config.threads : std::thread::hardware_concurrency();
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(jobs.size(), 1));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
                    run_job(config, jobs[i]);
                    jobs[i].generated.reset();
                }
            });
        }
    }

    for (auto &job : jobs) manifest.entries.push_back(std::move(job.entry));
    write_file(config.output_dir / "manifest.json", nlohmann::json(manifest).dump(2) + "\n");
    write_file(config.output_dir / "census.csv", census_csv(manifest));
    return manifest;
}

}  // namespace qgen
