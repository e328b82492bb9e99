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

#ifndef GRAPHSTAB_WEYL_HPP_
#define GRAPHSTAB_WEYL_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "graphstab/field.hpp"
#include "graphstab/graph_code.hpp"
#include "graphstab/stabilizer.hpp"

namespace graphstab {

using Complex = std::complex<double>;
using CplxMatrix = Eigen::MatrixXcd;

/// Largest Hilbert-space dimension p^n the dense simulator materializes.
inline constexpr std::uint64_t kMaxStateDim = std::uint64_t{1} << 12;

/// p^n, or throws SizeLimitError when it exceeds `limit`.
std::uint64_t guarded_power(const Field& field, std::size_t n, std::uint64_t limit);

/// ε(a) = exp(2πi a / p).
Complex root_of_unity(const Field& field, Elem a);

/// Computational basis of L2(F^n): digit vectors in lexicographic order,
/// vertex 0 the most significant digit.
std::size_t basis_index(const Field& field, std::span<const Elem> digits);
Vector basis_digits(const Field& field, std::size_t n, std::size_t index);

/// (w(ĝ,g)ψ)(x) = ε(⟨ĝ,x⟩) ψ(x − g)
struct WeylOperator {
  Field field;
  SymplecticVector label;

  std::size_t n() const noexcept { return label.n(); }
};

/// Dense p^n × p^n matrix of w. Requires p^n ≤ kMaxStateDim.
CplxMatrix weyl_matrix(const WeylOperator& w);

/// w·m without materializing w; m has p^n rows.
CplxMatrix apply_weyl(const WeylOperator& w, const CplxMatrix& m);

struct WeylProduct {
  Elem phase_exponent;  // phase = ε(phase_exponent)
  Complex phase;
  SymplecticVector label;
};

/// w(u)·w(v) = ε(−⟨v̂, u_shift⟩) · w(u + v)
WeylProduct weyl_compose(const Field& field, const SymplecticVector& u, const SymplecticVector& v);

/// Canonical character on the graph's stabilizer: for odd p,
/// τ(v) = ε(2⁻¹⟨Γv, v⟩); for p = 2, τ(v) = (−1)^Q(v) with
/// Q(v) = Σ_{z<z'} Γ(z,z') v_z v_z'. Both satisfy
/// τ(v)τ(v') = ε(−⟨Γv', v⟩) τ(v + v').
///
/// Throws UnsupportedCharacter for p = 2 when Γ has a nonzero diagonal.
Complex tau_character(const GraphCode& g, std::span<const Elem> v);

/// Single-factor Fourier transform (F_p)_{ab} = p^(−1/2) ε(ab) on tensor
/// factor `vertex`, identity elsewhere.
CplxMatrix local_fourier(std::size_t vertex, std::size_t n, const Field& field);

/// max |a_ij − b_ij|
double max_abs_diff(const CplxMatrix& a, const CplxMatrix& b);

}  // namespace graphstab

#endif  // GRAPHSTAB_WEYL_HPP_
