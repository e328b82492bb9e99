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

#ifndef GRAPHSTAB_CODE_SIM_HPP_
#define GRAPHSTAB_CODE_SIM_HPP_

#include <cstddef>
#include <optional>

#include "graphstab/graph_code.hpp"
#include "graphstab/report.hpp"
#include "graphstab/stabilizer.hpp"
#include "graphstab/weyl.hpp"

namespace graphstab {

inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kIsometryTolerance = 1e-10;
inline constexpr double kEigenTolerance = 1e-9;
inline constexpr double kEquivalenceTolerance = 1e-8;

/// The encoding map of a graph code as a dense p^|Y| × p^|X| matrix.
/// Columns are indexed by h ∈ F^|X|, rows by g ∈ F^|Y|, both lexicographic.
struct CodeIsometry {
  GraphCode graph;
  CplxMatrix matrix;

  std::size_t logical_dim() const { return static_cast<std::size_t>(matrix.cols()); }
};

/// matrix[g][h] = (|G||F|)^(−1/2) Σ_f τ(h ⊕ f ⊕ g), the code map written in
/// orthonormal computational bases. Requires p^|Y| ≤ kMaxStateDim.
CodeIsometry encode_isometry(const GraphCode& g);

/// max |VᴴV − I| ≤ kIsometryTolerance.
CheckReport isometry_check(const CodeIsometry& iso);

/// λ with ‖wV − λV‖_max ≤ tol, if w maps the code space to itself by a scalar.
std::optional<Complex> weyl_eigenvalue(const CodeIsometry& iso, const SymplecticVector& label,
                                       double tol = kEigenTolerance);

/// Every generator of graph_to_stabilizer(g) acts on the code as a unit
/// scalar; generators of the form (Ak | k) act as τ(0 ⊕ 0 ⊕ k).
CheckReport stabilizer_eigencheck(const GraphCode& g, const CodeIsometry& iso);

/// Knill–Laflamme sweep: for every Weyl label of weight ≤ max_weight,
/// M = VᴴwV must be a multiple of the identity.
CheckReport kl_check(const CodeIsometry& iso, std::size_t max_weight);

/// Smallest weight at which kl_check fails. For one-dimensional codes (no
/// input vertices) every M is a scalar; there the smallest weight of a
/// nonidentity Weyl operator stabilizing the state is returned.
std::size_t distance_kl(const CodeIsometry& iso);

/// P = V Vᴴ
CplxMatrix code_projector(const CodeIsometry& iso);

/// First Weyl label (lexicographic in (ĝ | g)) with ‖w P1 wᴴ − P2‖_max ≤ 1e−8.
/// Requires p^(2n) ≤ 2^16.
std::optional<SymplecticVector> weyl_equivalent(const CplxMatrix& p1, const CplxMatrix& p2,
                                                std::size_t n, const Field& field);

/// Calls visit(label) for every Weyl label of exactly the given weight on n
/// sites: supports in lexicographic order, then nonzero (ĝ_y, g_y) pairs.
template <typename Visit>
void for_each_weyl_label(const Field& field, std::size_t n, std::size_t w, Visit&& visit);

}  // namespace graphstab

#include "graphstab/code_sim_inl.hpp"

#endif  // GRAPHSTAB_CODE_SIM_HPP_
