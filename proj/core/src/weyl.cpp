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

#include "graphstab/weyl.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "graphstab/errors.hpp"

namespace graphstab {

std::uint64_t guarded_power(const Field& field, std::size_t n, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    out *= field.p();
    if (out > limit) {
      throw SizeLimitError("p^n = " + std::to_string(field.p()) + "^" + std::to_string(n) +
                           " exceeds the simulator limit of " + std::to_string(limit));
    }
  }
  return out;
}

Complex root_of_unity(const Field& field, Elem a) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(a % field.p()) /
                       static_cast<double>(field.p());
  return std::polar(1.0, angle);
}

std::size_t basis_index(const Field& field, std::span<const Elem> digits) {
  std::size_t index = 0;
  for (Elem d : digits) index = index * field.p() + d;
  return index;
}

Vector basis_digits(const Field& field, std::size_t n, std::size_t index) {
  Vector digits(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = static_cast<Elem>(index % field.p());
    index /= field.p();
  }
  return digits;
}

CplxMatrix apply_weyl(const WeylOperator& w, const CplxMatrix& m) {
  const Field& f = w.field;
  const std::size_t n = w.n();
  if (w.label.phase.size() != n) throw UsageError("malformed Weyl label");
  const auto dim = guarded_power(f, n, kMaxStateDim);
  if (static_cast<std::uint64_t>(m.rows()) != dim) {
    throw UsageError("apply_weyl: operand has " + std::to_string(m.rows()) + " rows, expected " +
                     std::to_string(dim));
  }
  CplxMatrix out(m.rows(), m.cols());
  Vector source(n);
  for (std::size_t row = 0; row < dim; ++row) {
    const Vector x = basis_digits(f, n, row);
    for (std::size_t i = 0; i < n; ++i) source[i] = f.sub(x[i], w.label.shift[i]);
    const Complex phase = root_of_unity(f, dot(f, w.label.phase, x));
    out.row(static_cast<Eigen::Index>(row)) =
        phase * m.row(static_cast<Eigen::Index>(basis_index(f, source)));
  }
  return out;
}

CplxMatrix weyl_matrix(const WeylOperator& w) {
  const auto dim = static_cast<Eigen::Index>(guarded_power(w.field, w.n(), kMaxStateDim));
  return apply_weyl(w, CplxMatrix::Identity(dim, dim));
}

WeylProduct weyl_compose(const Field& field, const SymplecticVector& u, const SymplecticVector& v) {
  if (u.n() != v.n() || u.phase.size() != u.n() || v.phase.size() != v.n()) {
    throw UsageError("weyl_compose: labels of different length");
  }
  SymplecticVector sum = SymplecticVector::zero(u.n());
  for (std::size_t i = 0; i < u.n(); ++i) {
    sum.phase[i] = field.add(u.phase[i], v.phase[i]);
    sum.shift[i] = field.add(u.shift[i], v.shift[i]);
  }
  const Elem exponent = field.neg(dot(field, v.phase, u.shift));
  return {exponent, root_of_unity(field, exponent), std::move(sum)};
}

Complex tau_character(const GraphCode& g, std::span<const Elem> v) {
  const Field& f = g.field();
  const Matrix& gamma = g.gamma();
  if (v.size() != g.vertex_count()) throw UsageError("tau_character: vector length mismatch");
  if (f.p() == 2) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      if (gamma(i, i) != 0) {
        throw UnsupportedCharacter("no canonical GF(2) character for a graph with a loop at " +
                                   g.vertex_name(i));
      }
    }
    unsigned parity = 0;
    for (std::size_t z = 0; z < v.size(); ++z) {
      if (v[z] == 0) continue;
      for (std::size_t z2 = z + 1; z2 < v.size(); ++z2) parity ^= gamma(z, z2) & v[z2];
    }
    return parity ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
  }
  const Elem quadratic = dot(f, mat_vec(gamma, v), v);
  return root_of_unity(f, f.mul(f.inv(2), quadratic));
}

CplxMatrix local_fourier(std::size_t vertex, std::size_t n, const Field& field) {
  if (vertex >= n) throw UsageError("local_fourier: vertex out of range");
  const auto dim = guarded_power(field, n, kMaxStateDim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(field.p()));
  CplxMatrix out = CplxMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    Vector x = basis_digits(field, n, col);
    const Elem b = x[vertex];
    for (Elem a = 0; a < field.p(); ++a) {
      x[vertex] = a;
      out(static_cast<Eigen::Index>(basis_index(field, x)), static_cast<Eigen::Index>(col)) =
          scale * root_of_unity(field, field.mul(a, b));
    }
  }
  return out;
}

double max_abs_diff(const CplxMatrix& a, const CplxMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace graphstab
