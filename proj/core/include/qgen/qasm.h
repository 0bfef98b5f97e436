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

#include <string>
#include <string_view>

#include "qgen/circuit.h"

namespace qgen {

struct QasmOptions {
    /// Spell PHASE as u1 (and CPHASE as cu1) for strict 2.0 consumers.
    bool legacy_names = false;
};

/// OpenQASM 2.0 text of decompose_to_basis(circuit): one qreg `q`, one creg
/// `c` (omitted when there are no clbits), angles with 17 significant
/// digits. Output is byte-stable for a given circuit.
std::string to_qasm(const Circuit &circuit, const QasmOptions &options = {});

/// Parses the subset emitted by to_qasm plus the common qelib1 names
/// (u, u1, cu1, cp, cz, swap, rzz, ccx) and angle expressions over pi.
/// Throws ParseError with a 1-based line and column, or
/// Error{unsupported_feature} for if/gate/opaque/reset and extra registers.
Circuit from_qasm(std::string_view text);

}  // namespace qgen
