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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgen/algorithm.h"
#include "qgen/circuit.h"

namespace qgen {

std::string_view version();

/// Static 1-3 rating within each category. Provisional.
int complexity_rating(Algorithm algo);

/// Odd composites up to `limit` that pass shor_screen.
std::vector<std::uint64_t> shor_dataset_inputs(std::uint64_t limit = 123);

struct SweepConfig {
    bool enabled = true;
    std::size_t min_size = 2;
    /// Inclusive; nullopt sweeps until a cap trips.
    std::optional<std::size_t> max_size;
    /// Shor only: explicit N values, in order. Empty selects the defaults.
    std::vector<std::uint64_t> n_list;
    /// Passed to generate() for every size.
    nlohmann::json options = nlohmann::json::object();
};

struct DatasetConfig {
    std::filesystem::path output_dir = "dataset";
    std::uint64_t master_seed = 0;
    std::uint64_t shots = 4096;
    std::size_t replicates = 1;
    /// Widest circuit that is simulated. Sweeps stop at the first size
    /// above it (Shor entries above it are kept without a histogram).
    std::size_t histogram_width_cap = 20;
    std::size_t statevector_width_cap = 16;
    /// Deterministic stand-ins for a wall-clock budget: a sweep stops when
    /// the basis gate count or instructions * 2^width exceeds these.
    std::size_t max_basis_gates = 2'000'000;
    double max_sim_work = 8e9;
    /// Generation slower than this is recorded as a failure.
    std::uint64_t timeout_ms = 60'000;
    /// 0 uses the hardware concurrency.
    std::size_t threads = 0;
    /// Wall-clock fields make the manifest non-reproducible; off by default.
    bool record_gen_ms = false;
    std::map<Algorithm, SweepConfig> sweeps;
    /// Overrides for the category column, keyed by algorithm.
    std::map<Algorithm, std::string> category_labels;

    /// All 15 algorithms enabled with their dataset defaults.
    static DatasetConfig defaults();
};

/// Reads the JSON config format documented in the README. Keys missing from
/// the file keep their defaults() values.
DatasetConfig dataset_config_from_json(const nlohmann::json &j);

struct DatasetEntry {
    Algorithm algorithm = Algorithm::dj;
    std::string category;
    int complexity_rating = 1;
    std::size_t problem_size = 0;
    std::size_t replicate = 0;
    std::uint64_t seed = 0;
    nlohmann::json params;
    bool ok = false;
    std::string error;
    GateCensus census;
    /// Paths relative to the output directory; empty when absent.
    std::string qasm_path;
    std::string metadata_path;
    std::string histogram_path;
    std::string statevector_path;
    std::optional<std::string> verdict;
    std::optional<double> score;
    std::optional<double> gen_ms;
};

struct SweepStop {
    Algorithm algorithm = Algorithm::dj;
    std::size_t problem_size = 0;
    std::string reason;
};

struct DatasetManifest {
    std::string tool_version;
    std::uint64_t master_seed = 0;
    std::uint64_t shots = 0;
    std::vector<DatasetEntry> entries;  // ordered by (algorithm, size, replicate)
    std::vector<SweepStop> stops;
};

void to_json(nlohmann::json &j, const DatasetManifest &m);

std::uint64_t dataset_seed(std::uint64_t master, Algorithm algo, std::size_t size,
                           std::size_t replicate);

/// Sweeps, simulates and writes manifest.json and census.csv under
/// config.output_dir. Per-entry failures are recorded, not thrown; an
/// unwritable output directory throws Error{io_error}.
DatasetManifest build_dataset(const DatasetConfig &config);

/// One census row per size, as written to census.csv.
std::string census_csv(const DatasetManifest &manifest);

}  // namespace qgen
