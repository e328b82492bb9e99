// Copyright 2026 The graphstab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHSTAB_SAMPLING_HPP_
#define GRAPHSTAB_SAMPLING_HPP_

#include <cstddef>
#include <random>

#include "graphstab/graph_code.hpp"
#include "graphstab/stabilizer.hpp"

namespace graphstab {

/// Random isotropic subspace of dimension `dim` ≤ n, grown one vector at a
/// time from the symplectic complement of the current span.
StabilizerSpace random_isotropic(const Field& field, std::size_t n, std::size_t dim,
                                 std::mt19937_64& rng);

/// Random valid graph code; redraws B and C until [B C] is injective. With
/// `loop_free`, A has a zero diagonal (required by the GF(2) character).
/// Requires inputs + aux ≤ outputs.
GraphCode random_graph_code(const Field& field, std::size_t inputs, std::size_t aux,
                            std::size_t outputs, std::mt19937_64& rng, bool loop_free = true);

}  // namespace graphstab

#endif  // GRAPHSTAB_SAMPLING_HPP_
