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

#include "graphstab/convert.hpp"

#include <utility>

#include "graphstab/errors.hpp"

namespace graphstab {
namespace {

Vector concat(const Vector& a, const Vector& b) {
  Vector out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<GraphGenerator> graph_generators(const GraphCode& g) {
  const std::size_t ny = g.outputs();
  const auto [a, b, c] = blocks(g);
  const Subspace kernel = kernel_basis(vstack(transpose(b), transpose(c)));
  const Subspace range_c = image_basis(c);

  std::vector<GraphGenerator> out;
  out.reserve(kernel.dim() + range_c.dim());
  for (std::size_t i = 0; i < kernel.dim(); ++i) {
    Vector k = kernel.basis_vector(i);
    out.push_back({k, Vector(ny, 0), {mat_vec(a, k), k}});
  }
  for (std::size_t i = 0; i < range_c.dim(); ++i) {
    Vector t = range_c.basis_vector(i);
    out.push_back({Vector(ny, 0), t, {t, Vector(ny, 0)}});
  }
  return out;
}

StabilizerSpace graph_to_stabilizer(const GraphCode& g) {
  std::vector<Vector> rows;
  for (const auto& gen : graph_generators(g)) rows.push_back(gen.label.concatenated());
  StabilizerSpace s(g.field(), g.outputs(), rows);
  if (s.dim() != g.outputs() - g.inputs()) {
    throw InternalError("graph_to_stabilizer: dim S = " + std::to_string(s.dim()) +
                        " but |Y| - |X| = " + std::to_string(g.outputs() - g.inputs()));
  }
  return s;
}

ReductionData reduce(const StabilizerSpace& s) {
  const Field& f = s.field();
  const std::size_t n = s.n();

  // Row reduce with the shift coordinates first: rows pivoting in the shift
  // block carry a K basis together with one phase lift each, the remaining
  // rows are phase-only and span T.
  Matrix swapped(f, s.dim(), 2 * n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const auto row = s.space().basis().row(r);
    for (std::size_t i = 0; i < n; ++i) {
      swapped.set(r, i, row[n + i]);
      swapped.set(r, n + i, row[i]);
    }
  }
  const auto [reduced, pivots] = rref(swapped);
  std::vector<Vector> shift_rows;
  std::vector<Vector> phase_rows;
  std::vector<Vector> degenerate_rows;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const auto row = reduced.row(r);
    Vector shift(row.begin(), row.begin() + n);
    Vector phase(row.begin() + n, row.end());
    if (pivots[r] < n) {
      shift_rows.push_back(std::move(shift));
      phase_rows.push_back(std::move(phase));
    } else {
      degenerate_rows.push_back(std::move(phase));
    }
  }

  Subspace degenerate = Subspace::span(f, n, degenerate_rows);
  if (degenerate != degenerate_part(s)) {
    throw InternalError("reduce: degenerate part disagrees with direct intersection");
  }
  Subspace shift_image = Subspace::span(f, n, shift_rows);
  if (shift_image.basis() != Matrix::from_rows(f, n, shift_rows)) {
    throw InternalError("reduce: shift rows are not in canonical form");
  }
  Subspace reduced_dual = ortho_complement(degenerate);
  if (!contains(reduced_dual, shift_image)) {
    throw InternalError("reduce: shift parts of S are not orthogonal to T");
  }

  // L = sum_i φ_i e_{pivot(k_i)}ᵀ, so L k_i = φ_i and L = L p.
  std::vector<Vector> reduced_rows;
  Matrix lift(f, n, n);
  for (std::size_t i = 0; i < shift_image.dim(); ++i) {
    const Vector phase = degenerate.reduce(phase_rows[i]);
    const auto col = shift_image.pivots()[i];
    for (std::size_t r = 0; r < n; ++r) lift.set(r, col, phase[r]);
    reduced_rows.push_back(concat(phase, shift_rows[i]));
  }
  Subspace reduced_space = Subspace::span(f, 2 * n, reduced_rows);

  Matrix k_projection = projection_onto(shift_image, reduced_dual);
  const Matrix identity = Matrix::identity(f, n);
  Matrix symmetric =
      add(multiply(lift, k_projection),
          multiply(multiply(transpose(k_projection), transpose(lift)),
                   subtract(identity, k_projection)));
  if (!is_symmetric(symmetric)) throw InternalError("reduce: R is not symmetric");

  Matrix dual_projection = projection_along(
      reduced_dual, coordinate_subspace(f, n, degenerate.pivots()));

  // S = {(qᵀ R k + t, k) : k ∈ K, t ∈ T}
  const Matrix lifted = multiply(transpose(dual_projection), symmetric);
  std::vector<Vector> rebuilt;
  for (std::size_t i = 0; i < shift_image.dim(); ++i) {
    const Vector k = shift_image.basis_vector(i);
    rebuilt.push_back(concat(mat_vec(lifted, k), k));
  }
  for (std::size_t i = 0; i < degenerate.dim(); ++i) {
    rebuilt.push_back(concat(degenerate.basis_vector(i), Vector(n, 0)));
  }
  if (Subspace::span(f, 2 * n, rebuilt) != s.space()) {
    throw InternalError("reduce: reconstruction from (q, R, K, T) does not reproduce S");
  }

  return {std::move(degenerate),    std::move(reduced_dual), std::move(shift_image),
          std::move(reduced_space), std::move(lift),         std::move(symmetric),
          std::move(k_projection),  std::move(dual_projection)};
}

GraphCode stabilizer_to_graph(const StabilizerSpace& s) { return stabilizer_to_graph(s, reduce(s)); }

GraphCode stabilizer_to_graph(const StabilizerSpace& s, const ReductionData& red) {
  const Subspace k_perp = ortho_complement(red.shift_image);
  if (!contains(k_perp, red.degenerate)) {
    throw InternalError("stabilizer_to_graph: T is not contained in K^perp");
  }
  const Matrix q_t = transpose(red.dual_projection);
  GammaBlocks parts{
      multiply(multiply(q_t, red.symmetric), red.dual_projection),
      multiply(q_t, quotient_representatives(k_perp, red.degenerate)),
      red.degenerate.basis_columns(),
  };
  if (parts.b.cols() != s.n() - s.dim()) {
    throw InternalError("stabilizer_to_graph: |X| != n - dim S");
  }
  GraphCode g = assemble(parts);
  if (graph_to_stabilizer(g) != s) {
    throw InternalError("stabilizer_to_graph: reconversion does not reproduce S");
  }
  return g;
}

RoundtripReport roundtrip_check(const GraphCode& g) {
  RoundtripReport report;
  report.stages.push_back({"graph", g.outputs(), g.inputs()});
  const StabilizerSpace s1 = graph_to_stabilizer(g);
  report.stages.push_back({"graph->stabilizer", s1.n(), s1.n() - s1.dim()});
  const GraphCode g2 = stabilizer_to_graph(s1);
  report.stages.push_back({"stabilizer->graph", g2.outputs(), g2.inputs()});
  const StabilizerSpace s2 = graph_to_stabilizer(g2);
  report.stages.push_back({"graph->stabilizer", s2.n(), s2.n() - s2.dim()});
  report.pass = s1 == s2;
  report.message = report.pass ? "stabilizer spaces agree" : "stabilizer spaces differ";
  return report;
}

RoundtripReport roundtrip_check(const StabilizerSpace& s) {
  RoundtripReport report;
  report.stages.push_back({"stabilizer", s.n(), s.n() - s.dim()});
  const GraphCode g = stabilizer_to_graph(s);
  report.stages.push_back({"stabilizer->graph", g.outputs(), g.inputs()});
  const StabilizerSpace back = graph_to_stabilizer(g);
  report.stages.push_back({"graph->stabilizer", back.n(), back.n() - back.dim()});
  report.pass = back == s;
  report.message = report.pass ? "reconverted space equals input" : "reconverted space differs";
  return report;
}

}  // namespace graphstab
