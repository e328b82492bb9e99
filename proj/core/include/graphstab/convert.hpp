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

#ifndef GRAPHSTAB_CONVERT_HPP_
#define GRAPHSTAB_CONVERT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "graphstab/graph_code.hpp"
#include "graphstab/matrix.hpp"
#include "graphstab/stabilizer.hpp"
#include "graphstab/subspace.hpp"

namespace graphstab {

/// A generator (Ak + t | k) of the stabilizer space of a graph code, keeping
/// the kernel vector k and the range-of-C part t separate. Exactly one of
/// k, t is nonzero for the generators produced by graph_generators().
struct GraphGenerator {
  Vector k;  // in ker(Bᵀ) ∩ ker(Cᵀ)
  Vector t;  // in ran(C)
  SymplecticVector label;
};

/// {(Ak | k) : k basis of ker(Bᵀ) ∩ ker(Cᵀ)} followed by {(t | 0) : t basis of ran(C)}.
std::vector<GraphGenerator> graph_generators(const GraphCode& g);

/// The isotropic space S = {(Ak + t, k) : k ∈ ker Bᵀ ∩ ker Cᵀ, t ∈ ran C}.
StabilizerSpace graph_to_stabilizer(const GraphCode& g);

/// Reduction of an isotropic S to its nondegenerate part.
///
/// All operators act on ambient F^n coordinates; G_nat, K and the quotient by
/// T are carried as subspaces of F^n rather than as abstract spaces.
struct ReductionData {
  Subspace degenerate;      // T = {t : (t|0) ∈ S}
  Subspace reduced_dual;    // G_nat = T^⊥
  Subspace shift_image;     // K, the shift parts of S
  Subspace reduced_space;   // S_nat = {(L k | k) : k ∈ K}, phases reduced mod T
  Matrix phase_lift;        // L: K → F^n with L k ≡ phase of S over k (mod T); L = L p
  Matrix symmetric;         // R = L p + pᵀ Lᵀ (1 − p), symmetric, R k = L k on K
  Matrix k_projection;      // p: projection onto K (pivot rule)
  Matrix dual_projection;   // q: projection onto G_nat along the T-pivot coordinates
};

/// Throws InternalError if {(qᵀ R k + t, k)} fails to reproduce S.
ReductionData reduce(const StabilizerSpace& s);

/// A graph code whose stabilizer space is exactly s.
///
/// |Y| = n, |X| = n − dim S, |J| = dim T; B = qᵀ·(representatives of K^⊥/T),
/// C = RREF basis of T, A = qᵀ R q.
GraphCode stabilizer_to_graph(const StabilizerSpace& s);
GraphCode stabilizer_to_graph(const StabilizerSpace& s, const ReductionData& reduction);

struct RoundtripStage {
  std::string name;  // e.g. "graph", "stabilizer", "graph->stabilizer"
  std::size_t n;
  std::size_t k;     // log_p of the logical dimension
};

struct RoundtripReport {
  bool pass = false;
  std::vector<RoundtripStage> stages;
  std::string message;
};

/// graph → stab → graph → stab; both stabilizer stages must coincide.
RoundtripReport roundtrip_check(const GraphCode& g);
/// stab → graph → stab; must reproduce the input.
RoundtripReport roundtrip_check(const StabilizerSpace& s);

}  // namespace graphstab

#endif  // GRAPHSTAB_CONVERT_HPP_
