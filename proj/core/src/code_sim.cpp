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

#include "graphstab/code_sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "graphstab/convert.hpp"
#include "graphstab/errors.hpp"

namespace graphstab {
namespace {

// Bound on the number of τ evaluations in encode_isometry.
constexpr std::uint64_t kMaxCharacterTerms = std::uint64_t{1} << 22;

nlohmann::json label_json(const SymplecticVector& v) {
  return {{"phase", v.phase}, {"shift", v.shift}};
}

struct WeightSweep {
  std::size_t operators = 0;
  std::size_t violations = 0;
  std::size_t stabilizing = 0;  // nonidentity labels acting as a unit scalar
  std::optional<SymplecticVector> first_violation;
  double worst_deviation = 0.0;
};

WeightSweep sweep_weight(const CodeIsometry& iso, std::size_t w) {
  const Field& f = iso.graph.field();
  const std::size_t n = iso.graph.outputs();
  const auto k = static_cast<double>(iso.matrix.cols());
  const CplxMatrix adjoint = iso.matrix.adjoint();
  const auto id = CplxMatrix::Identity(iso.matrix.cols(), iso.matrix.cols());
  WeightSweep out;
  for_each_weyl_label(f, n, w, [&](const SymplecticVector& label) {
    ++out.operators;
    const CplxMatrix m = adjoint * apply_weyl({f, label}, iso.matrix);
    const Complex scalar = m.trace() / k;
    const double deviation = max_abs_diff(m, scalar * id);
    if (deviation > out.worst_deviation) out.worst_deviation = deviation;
    if (deviation > kEigenTolerance) {
      ++out.violations;
      if (!out.first_violation) out.first_violation = label;
    } else if (w > 0 && std::abs(scalar) >= 1.0 - kEigenTolerance) {
      ++out.stabilizing;
    }
  });
  return out;
}

}  // namespace

CodeIsometry encode_isometry(const GraphCode& g) {
  const Field& f = g.field();
  const auto rows = guarded_power(f, g.outputs(), kMaxStateDim);
  const auto cols = guarded_power(f, g.inputs(), kMaxStateDim);
  const auto aux = guarded_power(f, g.aux(), kMaxCharacterTerms);
  if (rows * cols > kMaxCharacterTerms / aux) {
    throw SizeLimitError("encode_isometry needs more than 2^22 character evaluations");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(rows) * static_cast<double>(aux));
  CplxMatrix v = CplxMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  Vector vertex_values(g.vertex_count(), 0);
  for (std::size_t h = 0; h < cols; ++h) {
    const Vector hd = basis_digits(f, g.inputs(), h);
    std::copy(hd.begin(), hd.end(), vertex_values.begin());
    for (std::size_t row = 0; row < rows; ++row) {
      const Vector gd = basis_digits(f, g.outputs(), row);
      std::copy(gd.begin(), gd.end(), vertex_values.begin() + static_cast<std::ptrdiff_t>(g.inputs() + g.aux()));
      Complex acc = 0.0;
      for (std::size_t a = 0; a < aux; ++a) {
        const Vector fd = basis_digits(f, g.aux(), a);
        std::copy(fd.begin(), fd.end(), vertex_values.begin() + static_cast<std::ptrdiff_t>(g.inputs()));
        acc += tau_character(g, vertex_values);
      }
      v(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(h)) = scale * acc;
    }
  }
  return {g, std::move(v)};
}

CheckReport isometry_check(const CodeIsometry& iso) {
  const auto k = iso.matrix.cols();
  const double deviation =
      max_abs_diff(iso.matrix.adjoint() * iso.matrix, CplxMatrix::Identity(k, k));
  CheckReport report{"isometry", deviation <= kIsometryTolerance, nlohmann::json::object()};
  report.details["max_deviation"] = deviation;
  report.details["tolerance"] = kIsometryTolerance;
  report.details["rows"] = iso.matrix.rows();
  report.details["cols"] = k;
  return report;
}

std::optional<Complex> weyl_eigenvalue(const CodeIsometry& iso, const SymplecticVector& label,
                                       double tol) {
  const CplxMatrix image = apply_weyl({iso.graph.field(), label}, iso.matrix);
  const auto k = static_cast<double>(iso.matrix.cols());
  const Complex lambda = (iso.matrix.adjoint() * image).trace() / k;
  if (max_abs_diff(image, lambda * iso.matrix) > tol) return std::nullopt;
  return lambda;
}

CheckReport stabilizer_eigencheck(const GraphCode& g, const CodeIsometry& iso) {
  CheckReport report{"stabilizer_eigencheck", true, nlohmann::json::object()};
  nlohmann::json entries = nlohmann::json::array();
  const std::size_t offset = g.inputs() + g.aux();
  for (const auto& gen : graph_generators(g)) {
    nlohmann::json entry{{"label", label_json(gen.label)}};
    const auto lambda = weyl_eigenvalue(iso, gen.label);
    bool ok = lambda.has_value() && std::abs(std::abs(*lambda) - 1.0) <= kEigenTolerance;
    if (lambda) entry["lambda"] = {lambda->real(), lambda->imag()};
    const bool phase_only = std::all_of(gen.k.begin(), gen.k.end(), [](Elem e) { return e == 0; });
    if (lambda && phase_only) {
      ok = ok && std::abs(*lambda - Complex(1.0, 0.0)) <= kEigenTolerance;
    } else if (lambda) {
      Vector v(g.vertex_count(), 0);
      std::copy(gen.k.begin(), gen.k.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
      const Complex tau = tau_character(g, v);
      entry["tau"] = {tau.real(), tau.imag()};
      ok = ok && std::abs(*lambda - tau) <= kEigenTolerance;
    }
    entry["pass"] = ok;
    report.pass = report.pass && ok;
    entries.push_back(std::move(entry));
  }
  report.details["generators"] = std::move(entries);
  report.details["count"] = report.details["generators"].size();
  return report;
}

CheckReport kl_check(const CodeIsometry& iso, std::size_t max_weight) {
  CheckReport report{"kl_check", true, nlohmann::json::object()};
  nlohmann::json per_weight = nlohmann::json::array();
  std::size_t total_violations = 0;
  const std::size_t top = std::min(max_weight, iso.graph.outputs());
  for (std::size_t w = 0; w <= top; ++w) {
    const WeightSweep sweep = sweep_weight(iso, w);
    nlohmann::json entry{{"weight", w},
                         {"operators", sweep.operators},
                         {"violations", sweep.violations},
                         {"pass", sweep.violations == 0}};
    if (sweep.first_violation) entry["first_violation"] = label_json(*sweep.first_violation);
    total_violations += sweep.violations;
    per_weight.push_back(std::move(entry));
  }
  report.pass = total_violations == 0;
  report.details["max_weight"] = max_weight;
  report.details["tolerance"] = kEigenTolerance;
  report.details["violations"] = total_violations;
  report.details["weights"] = std::move(per_weight);
  return report;
}

std::size_t distance_kl(const CodeIsometry& iso) {
  const bool one_dimensional = iso.matrix.cols() == 1;
  for (std::size_t w = 1; w <= iso.graph.outputs(); ++w) {
    const WeightSweep sweep = sweep_weight(iso, w);
    if (!one_dimensional && sweep.violations > 0) return w;
    if (one_dimensional && sweep.stabilizing > 0) return w;
  }
  if (iso.graph.outputs() == 0) return 0;
  throw InternalError("distance_kl: no weight exhibits a logical or stabilizing operator");
}

CplxMatrix code_projector(const CodeIsometry& iso) { return iso.matrix * iso.matrix.adjoint(); }

std::optional<SymplecticVector> weyl_equivalent(const CplxMatrix& p1, const CplxMatrix& p2,
                                                std::size_t n, const Field& field) {
  const auto labels = guarded_power(field, 2 * n, std::uint64_t{1} << 16);
  const auto dim = static_cast<Eigen::Index>(guarded_power(field, n, kMaxStateDim));
  if (p1.rows() != dim || p1.cols() != dim || p2.rows() != dim || p2.cols() != dim) {
    throw UsageError("weyl_equivalent: projectors must be p^n x p^n");
  }
  if (std::abs(p1.trace() - p2.trace()) > kEquivalenceTolerance) return std::nullopt;
  for (std::uint64_t idx = 0; idx < labels; ++idx) {
    const auto label = SymplecticVector::split(basis_digits(field, 2 * n, idx));
    const WeylOperator w{field, label};
    const CplxMatrix left = apply_weyl(w, p1);
    const CplxMatrix conj = apply_weyl(w, left.adjoint()).adjoint();
    if (max_abs_diff(conj, p2) <= kEquivalenceTolerance) return label;
  }
  return std::nullopt;
}

}  // namespace graphstab
