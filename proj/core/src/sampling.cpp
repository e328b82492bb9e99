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

#include "graphstab/sampling.hpp"

#include "graphstab/errors.hpp"

namespace graphstab {
namespace {

Elem draw(const Field& field, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Elem>(0, field.p() - 1)(rng);
}

}  // namespace

StabilizerSpace random_isotropic(const Field& field, std::size_t n, std::size_t dim,
                                 std::mt19937_64& rng) {
  if (dim > n) throw UsageError("an isotropic subspace of F^n + F^n has dimension at most n");
  StabilizerSpace current(Subspace(field, 2 * n));
  while (current.dim() < dim) {
    const Subspace room = centralizer(current);
    Vector v(2 * n, 0);
    for (std::size_t i = 0; i < room.dim(); ++i) {
      const Elem c = draw(field, rng);
      if (c == 0) continue;
      auto row = room.basis().row(i);
      for (std::size_t j = 0; j < 2 * n; ++j) v[j] = field.add(v[j], field.mul(c, row[j]));
    }
    if (current.space().contains(v)) continue;
    current = StabilizerSpace(sum(current.space(), Subspace::span(field, 2 * n, {v})));
  }
  return current;
}

GraphCode random_graph_code(const Field& field, std::size_t inputs, std::size_t aux,
                            std::size_t outputs, std::mt19937_64& rng, bool loop_free) {
  if (inputs + aux > outputs) throw UsageError("random_graph_code: need inputs + aux <= outputs");
  Matrix a(field, outputs, outputs);
  for (std::size_t i = 0; i < outputs; ++i) {
    for (std::size_t j = i; j < outputs; ++j) {
      if (i == j && loop_free) continue;
      const Elem e = draw(field, rng);
      a.set(i, j, e);
      a.set(j, i, e);
    }
  }
  while (true) {
    Matrix b(field, outputs, inputs);
    Matrix c(field, outputs, aux);
    for (std::size_t r = 0; r < outputs; ++r) {
      for (std::size_t x = 0; x < inputs; ++x) b.set(r, x, draw(field, rng));
      for (std::size_t j = 0; j < aux; ++j) c.set(r, j, draw(field, rng));
    }
    if (rank(hstack(b, c)) == inputs + aux) return assemble({a, b, c});
  }
}

}  // namespace graphstab
