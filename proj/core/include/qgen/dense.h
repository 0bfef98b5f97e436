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

#include <Eigen/Dense>

#include "qgen/circuit.h"

namespace qgen {

inline constexpr std::size_t kDenseWidthCap = 6;

/// Full unitary of a measurement-free circuit as the ordered product of
/// per-gate embeddings. Test oracle; width is capped at 6.
Eigen::MatrixXcd dense_unitary(const Circuit &circuit);

/// Matrix of one instruction on its own operands, in operand order
/// (operand j is bit j of the local index).
Eigen::MatrixXcd local_matrix(const Instruction &instr);

}  // namespace qgen
