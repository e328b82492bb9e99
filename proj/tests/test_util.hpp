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

#ifndef GRAPHSTAB_TESTS_TEST_UTIL_HPP_
#define GRAPHSTAB_TESTS_TEST_UTIL_HPP_

// Test-only fixtures and brute-force oracles. The oracles enumerate whole
// ambient spaces and never call into the enumeration paths they check.

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "graphstab/code_io.hpp"
#include "graphstab/graph_code.hpp"
#include "graphstab/matrix.hpp"
#include "graphstab/stabilizer.hpp"

namespace graphstab::testing {

inline std::string fixture(const std::string& name) {
  return std::string(GRAPHSTAB_FIXTURE_DIR) + "/" + name;
}

inline GraphCode fig1_graph() {
  return std::get<GraphCode>(load_code_file(fixture("fig1_graph.json")).payload);
}
inline GraphCode fig6_graph() {
  return std::get<GraphCode>(load_code_file(fixture("fig6_gamma.json")).payload);
}
inline StabilizerSpace self_dual_mm() {
  return std::get<StabilizerSpace>(load_code_file(fixture("self_dual_MM.json")).payload);
}
inline StabilizerSpace stab10() {
  return std::get<StabilizerSpace>(load_code_file(fixture("stab10_stabilizer.json")).payload);
}

/// Pentagon graph over an arbitrary prime (pentagon plus a central input).
inline GraphCode fig1_graph(const Field& f) {
  return GraphCode(f, 1, 0, 5,
                   Matrix::from_rows(f, 6,
                                     std::vector<std::vector<std::int64_t>>{
                                         {0, 1, 1, 1, 1, 1},
                                         {1, 0, 1, 0, 0, 1},
                                         {1, 1, 0, 1, 0, 0},
                                         {1, 0, 1, 0, 1, 0},
                                         {1, 0, 0, 1, 0, 1},
                                         {1, 1, 0, 0, 1, 0}}));
}

/// The explicit pentagon stabilizer element for k ∈ F^4:
/// (−k1−k3−k4, k1+k3, k2+k4, −k1−k2−k4, k1+k4 | k1, k2, k3, k4, −k1−k2−k3−k4).
inline Vector fig1_parameterized(const Field& f, std::int64_t k1, std::int64_t k2,
                                 std::int64_t k3, std::int64_t k4) {
  return {f.reduce(-k1 - k3 - k4), f.reduce(k1 + k3),      f.reduce(k2 + k4),
          f.reduce(-k1 - k2 - k4), f.reduce(k1 + k4),      f.reduce(k1),
          f.reduce(k2),            f.reduce(k3),           f.reduce(k4),
          f.reduce(-k1 - k2 - k3 - k4)};
}

/// Every vector of F^len in lexicographic order.
inline std::vector<Vector> all_vectors(const Field& f, std::size_t len) {
  std::vector<Vector> out;
  Vector v(len, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = len;
    while (i > 0 && ++v[i - 1] == f.p()) v[--i] = 0;
    if (i == 0) return out;
  }
}

/// Set of all elements of span(rows), by summing over all coefficient tuples.
inline std::set<Vector> span_elements(const Field& f, std::size_t len,
                                      const std::vector<Vector>& rows) {
  std::set<Vector> out;
  for (const auto& coeff : all_vectors(f, rows.size())) {
    Vector v(len, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < len; ++j) v[j] = f.add(v[j], f.mul(coeff[i], rows[i][j]));
    }
    out.insert(v);
  }
  return out;
}

inline std::vector<Vector> basis_rows(const Subspace& s) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s.basis_vector(i));
  return out;
}

/// Distance oracle: scans all of F^{2n}, keeps vectors symplectically
/// orthogonal to every generator and outside S.
inline std::size_t brute_force_distance(const StabilizerSpace& s) {
  const Field& f = s.field();
  const std::size_t n = s.n();
  const auto gens = basis_rows(s.space());
  const auto members = span_elements(f, 2 * n, gens);
  const bool state = s.dim() == n;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& v : all_vectors(f, 2 * n)) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) w += (v[i] != 0 || v[n + i] != 0) ? 1 : 0;
    if (w == 0 || w >= best) continue;
    if (state) {
      if (members.count(v)) best = w;
      continue;
    }
    bool commutes = true;
    for (const auto& g : gens) {
      std::int64_t form = 0;
      for (std::size_t i = 0; i < n; ++i) {
        form += std::int64_t{v[i]} * g[n + i] - std::int64_t{g[i]} * v[n + i];
      }
      if (f.reduce(form) != 0) {
        commutes = false;
        break;
      }
    }
    if (commutes && !members.count(v)) best = w;
  }
  return best;
}

}  // namespace graphstab::testing

#endif  // GRAPHSTAB_TESTS_TEST_UTIL_HPP_
