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

#ifndef GRAPHSTAB_GRAPH_CODE_HPP_
#define GRAPHSTAB_GRAPH_CODE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "graphstab/field.hpp"
#include "graphstab/matrix.hpp"

namespace graphstab {

enum class VertexKind { kInput, kAuxiliary, kOutput };

/// One failed graph-code invariant.
struct Violation {
  std::string invariant;  // short tag, e.g. "symmetric"
  std::string detail;     // human-readable, names offending indices
};

/// A graph code: symmetric Γ over GF(p) on vertices X ∪ J ∪ Y (in that order)
/// whose (X∪J)×(X∪J) block vanishes.
///
///        X   J   Y
///   X  [ 0   0   Bᵀ ]
///   J  [ 0   0   Cᵀ ]
///   Y  [ B   C   A  ]
///
/// Construction validates and throws ValidationError listing every violation.
class GraphCode {
 public:
  GraphCode(Field field, std::size_t inputs, std::size_t aux, std::size_t outputs, Matrix gamma);

  const Field& field() const noexcept { return field_; }
  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t aux() const noexcept { return aux_; }
  std::size_t outputs() const noexcept { return outputs_; }
  std::size_t vertex_count() const noexcept { return inputs_ + aux_ + outputs_; }
  const Matrix& gamma() const noexcept { return gamma_; }

  VertexKind kind(std::size_t vertex) const;
  /// "x0", "j2", "y4", ...
  std::string vertex_name(std::size_t vertex) const;

  bool operator==(const GraphCode&) const = default;

 private:
  Field field_;
  std::size_t inputs_;
  std::size_t aux_;
  std::size_t outputs_;
  Matrix gamma_;
};

/// Empty result iff (field, sizes, gamma) would form a valid GraphCode.
///
/// Checks: square of the right size, symmetric, zero (X∪J) block, B injective,
/// C injective, and ran(B) ∩ ran(C) = {0}. The last two make the derived
/// stabilizer space have dimension |Y| - |X| and the code map an isometry.
std::vector<Violation> validate(const Field& field, std::size_t inputs, std::size_t aux,
                                std::size_t outputs, const Matrix& gamma);

struct GammaBlocks {
  Matrix a;  // |Y| x |Y|, symmetric
  Matrix b;  // |Y| x |X|
  Matrix c;  // |Y| x |J|
};

GammaBlocks blocks(const GraphCode& g);
/// Inverse of blocks(); validates the result.
GraphCode assemble(const GammaBlocks& blocks);

struct Edge {
  std::size_t u;  // u <= v; u == v only for loops on output vertices
  std::size_t v;
  Elem weight;

  bool operator==(const Edge&) const = default;
};

/// One entry per unordered pair with nonzero weight, plus loops, ordered by (u, v).
std::vector<Edge> edge_list(const GraphCode& g);
GraphCode from_edge_list(Field field, std::size_t inputs, std::size_t aux, std::size_t outputs,
                         const std::vector<Edge>& edges);

/// Graphviz source. Inputs are open circles, auxiliary vertices carry a ⊗,
/// outputs are filled. Edge weights are printed only when p > 2.
std::string to_dot(const GraphCode& g);

}  // namespace graphstab

#endif  // GRAPHSTAB_GRAPH_CODE_HPP_
