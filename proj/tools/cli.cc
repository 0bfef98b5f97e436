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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qgen/algorithm.h"
#include "qgen/circuit.h"
#include "qgen/dataset.h"
#include "qgen/error.h"
#include "qgen/postprocess.h"
#include "qgen/qasm.h"
#include "qgen/simulator.h"

namespace qgen::cli {

namespace {

using nlohmann::json;

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io_error, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) fail(ErrorKind::io_error, "cannot write " + path);
}

json read_json(const std::string &path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::parse_error &e) {
        fail(ErrorKind::parse_error, path + ": " + e.what());
    }
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

/// JSON when the text parses as a scalar or array, otherwise a string.
json loose_value(const std::string &text) {
    try {
        json v = json::parse(text);
        if (!v.is_object()) return v;
    } catch (const json::parse_error &) {
    }
    return text;
}

json census_json(const GateCensus &c) {
    return {{"width", c.width},
            {"depth", c.depth},
            {"single_qubit", c.single_qubit_gates},
            {"cnot", c.cnot_gates},
            {"measure", c.measure_gates},
            {"mid_circuit_measure", c.has_mid_circuit_measure}};
}

/// Algorithm-specific flags shared by `generate` and `plot-data`.
struct AlgoFlags {
    std::map<std::string, std::string> text;  // flag name -> option key
    std::map<std::string, std::optional<std::string>> values;
    std::vector<std::string> sets;

    void attach(CLI::App *cmd) {
        static const std::pair<const char *, const char *> kFlags[] = {
            {"--oracle", "constant or balanced (dj)"},
            {"--value", "constant output (dj) or initial integer (qft)"},
            {"--pattern", "balanced oracle bitstring (dj)"},
            {"--secret", "hidden bitstring (bv, simon)"},
            {"--theta", "phase as a number or fraction such as 1/8 (qpe)"},
            {"--mode", "repeat or fused (qpe)"},
            {"--a", "base coprime to N (shor)"},
            {"--marked", "comma-separated marked bitstrings (grover, counting, walk)"},
            {"--solutions", "number of marked states (grover, counting, walk)"},
            {"--iterations", "iteration count (grover, walk)"},
            {"--searching-qubits", "search register width (counting)"},
            {"--theta-qubits", "phase register width (walk)"},
            {"--interception", "true or false (qkd)"},
            {"--message", "bitstring (superdense)"},
            {"--reps", "repetitions (qaoa, vqe)"},
            {"--rotations", "comma-separated rotation gates (vqe)"},
            {"--entanglement", "full, linear or circular (vqe)"},
            {"--fm-reps", "feature map repetitions (vqc)"},
            {"--vf-reps", "variational form repetitions (vqc)"},
            {"--initialize", "true or false (qft)"},
            {"--inverse", "true or false (qft)"},
            {"--measure", "true or false (qft)"},
        };
        for (const auto &[flag, help] : kFlags) {
            values[flag];
            cmd->add_option(flag, values[flag], help);
        }
        cmd->add_option("--set", sets, "extra option as key=value (value parsed as JSON when possible)");
    }

    json options() const {
        json o = json::object();
        for (const auto &[flag, value] : values) {
            if (!value) continue;
            std::string key = std::string(flag).substr(2);
            std::replace(key.begin(), key.end(), '-', '_');
            if (key == "marked" || key == "rotations") {
                o[key] = split_list(*value);
            } else if (key == "oracle" || key == "pattern" || key == "secret" ||
                       key == "mode" || key == "message" || key == "entanglement") {
                o[key] = *value;
            } else if (key == "theta" && value->find('/') != std::string::npos) {
                o[key] = *value;
            } else {
                o[key] = loose_value(*value);
            }
        }
        for (const auto &kv : sets) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) {
                fail(ErrorKind::invalid_argument, "--set expects key=value, got '" + kv + "'");
            }
            o[kv.substr(0, eq)] = loose_value(kv.substr(eq + 1));
        }
        return o;
    }
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace

int cli_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Parameterized quantum circuit generator and simulator", "qgen"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version()));

    // generate
    auto *gen = app.add_subcommand("generate", "Generate a circuit as OpenQASM 2.0");
    std::string gen_algo;
    std::size_t gen_size = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out, gen_meta;
    AlgoFlags gen_flags;
    gen->add_option("algorithm", gen_algo, "algorithm id or name")->required();
    gen->add_option("-n,--problem-size", gen_size, "problem size (N for shor)")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--output", gen_out, "QASM output file (default stdout)");
    gen->add_option("--emit-metadata", gen_meta, "write verification metadata JSON");
    gen_flags.attach(gen);

    // simulate
    auto *sim = app.add_subcommand("simulate", "Sample a QASM circuit; histogram JSON to stdout");
    std::string sim_in, sim_sv;
    std::uint64_t sim_shots = 1024, sim_seed = 0;
    sim->add_option("circuit", sim_in, "QASM file")->required();
    sim->add_option("--shots", sim_shots, "number of shots")->check(CLI::PositiveNumber);
    sim->add_option("--seed", sim_seed, "sampling seed");
    sim->add_option("--statevector", sim_sv, "write the pre-measurement state (QGSV)");

    // stats
    auto *stats = app.add_subcommand("stats", "Gate census of a QASM circuit as JSON");
    std::string stats_in;
    stats->add_option("circuit", stats_in, "QASM file")->required();

    // verify
    auto *ver = app.add_subcommand("verify", "Check a histogram against generator metadata");
    std::string ver_meta, ver_hist;
    ver->add_option("metadata", ver_meta, "metadata JSON from generate --emit-metadata")->required();
    ver->add_option("histogram", ver_hist, "histogram JSON from simulate")->required();

    // dataset
    auto *ds = app.add_subcommand("dataset", "Build a dataset and its manifest");
    std::string ds_config, ds_output;
    ds->add_option("--config", ds_config, "dataset config JSON (defaults when omitted)");
    ds->add_option("-o,--output", ds_output, "output directory (overrides the config)");

    // plot-data
    auto *plot = app.add_subcommand("plot-data", "Census-vs-size series as CSV");
    std::string plot_algo;
    std::size_t plot_min = 2, plot_max = 10;
    std::uint64_t plot_seed = 0;
    AlgoFlags plot_flags;
    plot->add_option("algorithm", plot_algo, "algorithm id or name")->required();
    plot->add_option("--min-size", plot_min, "first problem size");
    plot->add_option("--max-size", plot_max, "last problem size (inclusive)");
    plot->add_option("--seed", plot_seed, "random seed");
    plot_flags.attach(plot);

    try {
        // CLI11 consumes arguments from the back.
        std::vector<std::string> rev;
        if (!args.empty()) rev.assign(args.rbegin(), args.rend() - 1);
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            const Algorithm algo = parse_algorithm(gen_algo);
            GenResult r = generate(algo, gen_size, gen_seed, gen_flags.options());
            const std::string qasm = to_qasm(r.circuit);
            if (gen_out.empty()) {
                out << qasm;
            } else {
                write_text(gen_out, qasm);
            }
            if (!gen_meta.empty()) write_text(gen_meta, json(r.metadata).dump(2) + "\n");
        } else if (*sim) {
            const Circuit c = from_qasm(read_text(sim_in));
            const Histogram h = sample_counts(c, sim_shots, sim_seed);
            if (!sim_sv.empty()) {
                std::ofstream f(sim_sv, std::ios::binary);
                write_statevector(f, run_statevector(without_measurements(c)));
                if (!f) fail(ErrorKind::io_error, "cannot write " + sim_sv);
            }
            out << json(h).dump() << "\n";
        } else if (*stats) {
            const Circuit c = from_qasm(read_text(stats_in));
            out << census_json(census(c)).dump() << "\n";
        } else if (*ver) {
            const auto meta = read_json(ver_meta).get<AlgoMetadata>();
            const auto hist = read_json(ver_hist).get<Histogram>();
            out << json(verify(meta, hist)).dump(2) << "\n";
        } else if (*ds) {
            DatasetConfig config = ds_config.empty() ? DatasetConfig::defaults()
                                                     : dataset_config_from_json(read_json(ds_config));
            if (!ds_output.empty()) config.output_dir = ds_output;
            if (const char *env = std::getenv("QGEN_SEED"); env && *env) {
                try {
                    config.master_seed = std::stoull(env);
                } catch (const std::exception &) {
                    throw UsageError("QGEN_SEED must be an unsigned integer");
                }
            }
            const DatasetManifest m = build_dataset(config);
            std::size_t failed = 0;
            for (const auto &e : m.entries) failed += e.ok ? 0 : 1;
            out << "wrote " << m.entries.size() << " entries (" << failed << " failed) to "
                << (config.output_dir / "manifest.json").string() << "\n";
            if (failed > 0) return kExitFailure;
        } else if (*plot) {
            const Algorithm algo = parse_algorithm(plot_algo);
            if (plot_max < plot_min) throw UsageError("--max-size is below --min-size");
            const json opts = plot_flags.options();
            out << "algorithm,size,width,depth,single_qubit,cnot,measure\n";
            for (std::size_t n = plot_min; n <= plot_max; ++n) {
                if (algo == Algorithm::superdense && n % 2 != 0) continue;
                if (algo == Algorithm::shor && shor_screen(n, std::nullopt)) continue;
                const GenResult r = generate(algo, n, plot_seed, opts);
                const GateCensus c = census(r.circuit);
                out << algorithm_id(algo) << ',' << n << ',' << c.width << ',' << c.depth << ','
                    << c.single_qubit_gates << ',' << c.cnot_gates << ',' << c.measure_gates
                    << '\n';
            }
        }
    } catch (const UsageError &e) {
        err << "qgen: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "qgen: " << e.what() << "\n";
        return e.kind() == ErrorKind::invalid_argument ? kExitUsage : kExitFailure;
    } catch (const json::exception &e) {
        err << "qgen: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace qgen::cli
