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

#include "graphstab/stabilizer.hpp"

#include <limits>
#include <string>
#include <utility>

#include "graphstab/errors.hpp"

namespace graphstab {
namespace {

// Swaps the two halves: (ĝ | g) -> (g | -ĝ). Then ω(u, v) = u' · v with u' = J u.
Vector symplectic_dual(const Field& f, std::span<const Elem> v) {
  const std::size_t n = v.size() / 2;
  Vector out(v.size());
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = f.neg(v[n + i]);
    out[n + i] = v[i];
  }
  return out;
}

std::size_t weight_of(std::span<const Elem> v) {
  const std::size_t n = v.size() / 2;
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0 || v[n + i] != 0) ++w;
  }
  return w;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

// Visits every combination sum c_i b_i with coefficients in lexicographic
// order (last basis vector fastest), skipping the all-zero combination.
template <typename Visit>
void for_each_nonzero_combination(const Matrix& basis, Visit&& visit) {
  const Field& f = basis.field();
  const std::size_t k = basis.rows();
  const std::size_t len = basis.cols();
  Vector coeff(k, 0);
  Vector v(len, 0);
  while (true) {
    std::size_t i = k;
    // Odometer step: increment the last digit, carrying left.
    while (i > 0) {
      --i;
      auto row = basis.row(i);
      for (std::size_t c = 0; c < len; ++c) v[c] = f.add(v[c], row[c]);
      if (++coeff[i] < f.p()) break;
      coeff[i] = 0;  // p additions brought this digit back to zero
      if (i == 0) return;
    }
    if (k == 0) return;
    visit(std::as_const(v));
  }
}

}  // namespace

Vector SymplecticVector::concatenated() const {
  Vector out(phase);
  out.insert(out.end(), shift.begin(), shift.end());
  return out;
}

SymplecticVector SymplecticVector::split(std::span<const Elem> v) {
  if (v.size() % 2 != 0) throw UsageError("symplectic vector must have even length");
  const auto n = v.size() / 2;
  return {Vector(v.begin(), v.begin() + n), Vector(v.begin() + n, v.end())};
}

Elem symplectic_form(const Field& field, const SymplecticVector& u, const SymplecticVector& v) {
  if (u.phase.size() != u.shift.size() || v.phase.size() != v.shift.size() || u.n() != v.n()) {
    throw UsageError("symplectic vectors of mismatched length");
  }
  return field.sub(dot(field, u.phase, v.shift), dot(field, v.phase, u.shift));
}

std::size_t weight(const SymplecticVector& v) {
  if (v.phase.size() != v.shift.size()) throw UsageError("malformed symplectic vector");
  return weight_of(v.concatenated());
}

bool is_isotropic(const Subspace& s) {
  if (s.ambient_dim() % 2 != 0) return false;
  const auto& f = s.field();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vector dual = symplectic_dual(f, s.basis().row(i));
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      if (dot(f, dual, s.basis().row(j)) != 0) return false;
    }
  }
  return true;
}

StabilizerSpace::StabilizerSpace(Subspace generators)
    : n_(generators.ambient_dim() / 2), space_(std::move(generators)) {
  if (space_.ambient_dim() % 2 != 0) {
    throw ValidationError("stabilizer generators must have even length 2n");
  }
  if (!is_isotropic(space_)) throw ValidationError("generators do not span an isotropic subspace");
}

StabilizerSpace::StabilizerSpace(Field field, std::size_t n, const std::vector<Vector>& generators)
    : StabilizerSpace(Subspace::span(field, 2 * n, generators)) {}

Subspace degenerate_part(const StabilizerSpace& s) {
  const auto n = s.n();
  std::vector<std::size_t> phase_coords(n);
  for (std::size_t i = 0; i < n; ++i) phase_coords[i] = i;
  const Subspace phase_only =
      intersect(s.space(), coordinate_subspace(s.field(), 2 * n, phase_coords));
  return Subspace::span_of_rows(submatrix(phase_only.basis(), 0, 0, phase_only.dim(), n));
}

Subspace centralizer(const StabilizerSpace& s) {
  const auto& f = s.field();
  std::vector<Vector> duals;
  duals.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    duals.push_back(symplectic_dual(f, s.space().basis().row(i)));
  }
  return kernel_basis(Matrix::from_rows(f, 2 * s.n(), duals));
}

std::uint64_t logical_dim(const StabilizerSpace& s) {
  return checked_power(s.field().p(), s.n() - s.dim(), std::numeric_limits<std::uint64_t>::max());
}

std::size_t distance_algebraic(const StabilizerSpace& s) {
  const bool state = s.dim() == s.n();
  const Subspace search_space = state ? s.space() : centralizer(s);
  const auto count = checked_power(s.field().p(), search_space.dim(), kDistanceSearchLimit);
  if (count > kDistanceSearchLimit) {
    throw SizeLimitError("distance search needs p^" + std::to_string(search_space.dim()) +
                         " > 2^24 centralizer elements");
  }
  if (s.n() == 0) return 0;

  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_nonzero_combination(search_space.basis(), [&](const Vector& v) {
    const auto w = weight_of(v);
    if (w >= best) return;
    if (!state && s.space().contains(v)) return;
    best = w;
  });
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw InternalError("distance search found no candidate element");
  }
  return best;
}

}  // namespace graphstab
