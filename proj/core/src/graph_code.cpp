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

#include "graphstab/graph_code.hpp"

#include <sstream>
#include <utility>

#include "graphstab/errors.hpp"

namespace graphstab {
namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "invalid graph code:";
  for (const auto& v : violations) out += " [" + v.invariant + "] " + v.detail + ";";
  return out;
}

}  // namespace

std::vector<Violation> validate(const Field& field, std::size_t inputs, std::size_t aux,
                                std::size_t outputs, const Matrix& gamma) {
  std::vector<Violation> out;
  const std::size_t n = inputs + aux + outputs;
  if (gamma.field() != field) {
    out.push_back({"field", "gamma is over GF(" + std::to_string(gamma.field().p()) +
                                "), expected GF(" + std::to_string(field.p()) + ")"});
    return out;
  }
  if (gamma.rows() != n || gamma.cols() != n) {
    out.push_back({"shape", "gamma is " + std::to_string(gamma.rows()) + "x" +
                                std::to_string(gamma.cols()) + ", expected " +
                                std::to_string(n) + "x" + std::to_string(n)});
    return out;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      if (gamma(r, c) != gamma(c, r)) {
        out.push_back({"symmetric", "gamma(" + std::to_string(r) + "," + std::to_string(c) +
                                        ") != gamma(" + std::to_string(c) + "," +
                                        std::to_string(r) + ")"});
      }
    }
  }
  const std::size_t xj = inputs + aux;
  for (std::size_t r = 0; r < xj; ++r) {
    for (std::size_t c = 0; c < xj; ++c) {
      if (gamma(r, c) != 0) {
        out.push_back({"input-block-zero", "entry (" + std::to_string(r) + "," +
                                               std::to_string(c) +
                                               ") between input/auxiliary vertices is nonzero"});
      }
    }
  }
  const Matrix b = submatrix(gamma, xj, 0, outputs, inputs);
  const Matrix c = submatrix(gamma, xj, inputs, outputs, aux);
  const std::size_t rank_b = rank(b);
  const std::size_t rank_c = rank(c);
  if (rank_b != inputs) {
    out.push_back({"B-injective", "rank(B) = " + std::to_string(rank_b) + " < |X| = " +
                                      std::to_string(inputs)});
  }
  if (rank_c != aux) {
    out.push_back({"C-injective", "rank(C) = " + std::to_string(rank_c) + " < |J| = " +
                                      std::to_string(aux)});
  }
  if (rank_b == inputs && rank_c == aux && rank(hstack(b, c)) != inputs + aux) {
    out.push_back({"B-C-independent", "ran(B) and ran(C) intersect nontrivially"});
  }
  return out;
}

GraphCode::GraphCode(Field field, std::size_t inputs, std::size_t aux, std::size_t outputs,
                     Matrix gamma)
    : field_(field), inputs_(inputs), aux_(aux), outputs_(outputs), gamma_(std::move(gamma)) {
  auto violations = validate(field_, inputs_, aux_, outputs_, gamma_);
  if (!violations.empty()) throw ValidationError(join_violations(violations));
}

VertexKind GraphCode::kind(std::size_t vertex) const {
  if (vertex >= vertex_count()) throw UsageError("vertex index out of range");
  if (vertex < inputs_) return VertexKind::kInput;
  if (vertex < inputs_ + aux_) return VertexKind::kAuxiliary;
  return VertexKind::kOutput;
}

std::string GraphCode::vertex_name(std::size_t vertex) const {
  switch (kind(vertex)) {
    case VertexKind::kInput:
      return "x" + std::to_string(vertex);
    case VertexKind::kAuxiliary:
      return "j" + std::to_string(vertex - inputs_);
    case VertexKind::kOutput:
      break;
  }
  return "y" + std::to_string(vertex - inputs_ - aux_);
}

GammaBlocks blocks(const GraphCode& g) {
  const auto xj = g.inputs() + g.aux();
  return {submatrix(g.gamma(), xj, xj, g.outputs(), g.outputs()),
          submatrix(g.gamma(), xj, 0, g.outputs(), g.inputs()),
          submatrix(g.gamma(), xj, g.inputs(), g.outputs(), g.aux())};
}

GraphCode assemble(const GammaBlocks& blocks) {
  const Field& f = blocks.a.field();
  const std::size_t ny = blocks.a.rows();
  if (blocks.b.rows() != ny || blocks.c.rows() != ny || blocks.a.cols() != ny) {
    throw UsageError("block shapes do not agree on |Y|");
  }
  const std::size_t nx = blocks.b.cols();
  const std::size_t nj = blocks.c.cols();
  const std::size_t n = nx + nj + ny;
  Matrix gamma(f, n, n);
  for (std::size_t y = 0; y < ny; ++y) {
    const std::size_t row = nx + nj + y;
    for (std::size_t x = 0; x < nx; ++x) {
      gamma.set(row, x, blocks.b(y, x));
      gamma.set(x, row, blocks.b(y, x));
    }
    for (std::size_t j = 0; j < nj; ++j) {
      gamma.set(row, nx + j, blocks.c(y, j));
      gamma.set(nx + j, row, blocks.c(y, j));
    }
    for (std::size_t y2 = 0; y2 < ny; ++y2) gamma.set(row, nx + nj + y2, blocks.a(y, y2));
  }
  return GraphCode(f, nx, nj, ny, std::move(gamma));
}

std::vector<Edge> edge_list(const GraphCode& g) {
  std::vector<Edge> out;
  const auto n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      if (g.gamma()(u, v) != 0) out.push_back({u, v, g.gamma()(u, v)});
    }
  }
  return out;
}

GraphCode from_edge_list(Field field, std::size_t inputs, std::size_t aux, std::size_t outputs,
                         const std::vector<Edge>& edges) {
  const std::size_t n = inputs + aux + outputs;
  Matrix gamma(field, n, n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw ValidationError("edge endpoint out of range");
    gamma.set(e.u, e.v, e.weight);
    gamma.set(e.v, e.u, e.weight);
  }
  return GraphCode(field, inputs, aux, outputs, std::move(gamma));
}

std::string to_dot(const GraphCode& g) {
  std::ostringstream os;
  os << "graph graphcode {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto name = g.vertex_name(v);
    os << "  " << name << " [";
    switch (g.kind(v)) {
      case VertexKind::kInput:
        os << "shape=circle, label=\"\", xlabel=\"" << name << "\"";
        break;
      case VertexKind::kAuxiliary:
        os << "shape=circle, label=\"⊗\", xlabel=\"" << name << "\"";
        break;
      case VertexKind::kOutput:
        os << "shape=circle, style=filled, fillcolor=black, width=0.2, label=\"\", xlabel=\""
           << name << "\"";
        break;
    }
    os << "];\n";
  }
  for (const auto& e : edge_list(g)) {
    os << "  " << g.vertex_name(e.u) << " -- " << g.vertex_name(e.v);
    if (g.field().p() > 2) os << " [label=\"" << e.weight << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace graphstab
