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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "graphstab/code_sim.hpp"
#include "graphstab/convert.hpp"
#include "graphstab/sampling.hpp"
#include "test_util.hpp"

namespace graphstab {
namespace {

namespace fs = std::filesystem;
using testing::all_vectors;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      note = what;
    }
  }
};

const Field kF2(2);

Outcome criterion_pentagon_conversion() {
  Outcome o;
  const auto s = graph_to_stabilizer(testing::fig1_graph());
  o.require(s.dim() == 4, "dim S = " + std::to_string(s.dim()));
  const auto elements = s.space().elements();
  o.require(elements.size() == 16, "|S| = " + std::to_string(elements.size()));
  for (int i = 0; i < 4; ++i) {
    o.require(s.space().contains(testing::fig1_parameterized(kF2, i == 0, i == 1, i == 2, i == 3)),
              "k = e" + std::to_string(i + 1) + " element missing");
  }
  // every element is (k1..k4) ↦ parameterization, and vice versa
  std::set<Vector> expected;
  for (const auto& k : all_vectors(kF2, 4)) {
    expected.insert(testing::fig1_parameterized(kF2, k[0], k[1], k[2], k[3]));
  }
  o.require(std::set<Vector>(elements.begin(), elements.end()) == expected,
            "elements differ from the parameterization");
  o.note = o.pass ? "dim 4, 16 elements, parameterization matches" : o.note;
  return o;
}

Outcome criterion_pentagon_distances() {
  Outcome o;
  const auto g = testing::fig1_graph();
  const auto s = graph_to_stabilizer(g);
  const auto iso = encode_isometry(g);
  const auto da = distance_algebraic(s);
  const auto dk = distance_kl(iso);
  const auto brute = testing::brute_force_distance(s);
  o.require(da == 3 && dk == 3 && brute == 3,
            "algebraic " + std::to_string(da) + ", kl " + std::to_string(dk) + ", brute force " +
                std::to_string(brute));
  o.require(kl_check(iso, 2).pass, "kl_check fails at weight 2");
  o.require(!kl_check(iso, 3).pass, "kl_check passes at weight 3");
  if (o.pass) o.note = "d_alg = d_kl = brute force = 3; KL passes w=2, fails w=3";
  return o;
}

Outcome criterion_degenerate_six() {
  Outcome o;
  const auto s = testing::stab10();
  o.require(is_isotropic(s.space()), "not isotropic");
  o.require(s.n() == 6, "n = " + std::to_string(s.n()));
  o.require(s.dim() == 5 && logical_dim(s) == 2, "k != 1");
  const auto g = stabilizer_to_graph(s);
  o.require(graph_to_stabilizer(g) == s, "round trip changed the subspace");
  if (o.pass) {
    o.note = "isotropic, n=6, k=1; graph has |X|=" + std::to_string(g.inputs()) +
             " |J|=" + std::to_string(g.aux()) + ", round trip exact";
  }
  return o;
}

Outcome criterion_self_dual() {
  Outcome o;
  const auto s = testing::self_dual_mm();
  const auto red = reduce(s);
  const auto m = Subspace::span(kF2, 4, {{1, 1, 1, 1}});
  o.require(red.degenerate == m && red.shift_image == m, "T or K differs from M");
  o.require(red.symmetric.is_zero(), "R != 0");
  const auto g = stabilizer_to_graph(s);
  o.require(g == testing::fig6_graph(), "graph differs from the printed 7x7 matrix");
  o.require(logical_dim(s) == 4, "logical dim " + std::to_string(logical_dim(s)));
  const auto da = distance_algebraic(s);
  const auto dk = distance_kl(encode_isometry(g));
  o.require(da == 2 && dk == 2,
            "distances " + std::to_string(da) + " / " + std::to_string(dk));
  if (o.pass) o.note = "T = K = M, R = 0, printed matrix reproduced, logical dim 4, d = 2";
  return o;
}

Outcome criterion_roundtrip() {
  Outcome o;
  std::mt19937_64 rng(20261015);
  std::size_t count = 0;
  const auto sweep = [&](const Field& f, std::size_t max_n, int samples) {
    for (int i = 0; i < samples && o.pass; ++i) {
      const std::size_t n = 1 + static_cast<std::size_t>(i) % max_n;
      const std::size_t dim = std::uniform_int_distribution<std::size_t>(0, n)(rng);
      const auto s = random_isotropic(f, n, dim, rng);
      o.require(graph_to_stabilizer(stabilizer_to_graph(s)) == s,
                "p=" + std::to_string(f.p()) + " sample " + std::to_string(i) + " failed");
      ++count;
    }
  };
  sweep(kF2, 5, 200);
  sweep(Field(3), 4, 50);
  for (int i = 0; i < 100 && o.pass; ++i) {
    const Field f(i % 4 == 3 ? 3 : 2);
    const std::size_t ny = 1 + static_cast<std::size_t>(i) % 5;
    const std::size_t nx = std::uniform_int_distribution<std::size_t>(0, ny)(rng);
    const std::size_t nj = std::uniform_int_distribution<std::size_t>(0, ny - nx)(rng);
    const auto g = random_graph_code(f, nx, nj, ny, rng, f.p() == 2);
    const auto s = graph_to_stabilizer(g);
    o.require(is_isotropic(s.space()) && s.dim() == ny - nx,
              "graph sample " + std::to_string(i) + " gave a bad subspace");
    ++count;
  }
  if (o.pass) o.note = std::to_string(count) + " samples (200 GF(2), 50 GF(3), 100 graphs)";
  return o;
}

Outcome criterion_numerics() {
  Outcome o;
  std::size_t operators = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const Field f(p);
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto labels = all_vectors(f, 2 * n);
      for (const auto& a : labels) {
        const auto u = SymplecticVector::split(a);
        const CplxMatrix wu = weyl_matrix({f, u});
        ++operators;
        const auto id = CplxMatrix::Identity(wu.rows(), wu.cols());
        o.require(max_abs_diff(wu.adjoint() * wu, id) <= kUnitaryTolerance, "non-unitary Weyl operator");
        for (const auto& b : labels) {
          const auto v = SymplecticVector::split(b);
          const auto prod = weyl_compose(f, u, v);
          o.require(max_abs_diff(wu * weyl_matrix({f, v}), prod.phase * weyl_matrix({f, prod.label})) <=
                        kUnitaryTolerance,
                    "composition law violated");
        }
      }
    }
  }

  std::mt19937_64 rng(6);
  const GraphCode fixtures[] = {testing::fig1_graph(), testing::fig6_graph(),
                                stabilizer_to_graph(testing::stab10()),
                                testing::fig1_graph(Field(3)), testing::fig1_graph(Field(5))};
  for (const auto& g : fixtures) {
    const Field& f = g.field();
    const std::size_t m = g.vertex_count();
    std::uniform_int_distribution<Elem> digit(0, f.p() - 1);
    for (int i = 0; i < 500; ++i) {
      Vector v(m), w(m), vw(m);
      for (std::size_t z = 0; z < m; ++z) {
        v[z] = digit(rng);
        w[z] = digit(rng);
        vw[z] = f.add(v[z], w[z]);
      }
      const Complex expected = tau_character(g, v) * tau_character(g, w) *
                               root_of_unity(f, dot(f, mat_vec(g.gamma(), v), w));
      o.require(std::abs(tau_character(g, vw) - expected) <= kUnitaryTolerance, "cocycle identity fails");
    }
  }

  for (const auto& g : {testing::fig1_graph(), testing::fig6_graph()}) {
    const auto iso = encode_isometry(g);
    o.require(isometry_check(iso).pass, "isometry check fails");
    const auto eig = stabilizer_eigencheck(g, iso);
    o.require(eig.pass, "eigencheck fails: " + eig.to_json().dump());
  }
  if (o.pass) {
    o.note = std::to_string(operators) + " Weyl operators, 5x500 cocycle pairs, 2 isometries";
  }
  return o;
}

Outcome criterion_cross_distance() {
  Outcome o;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25 && o.pass; ++i) {
    const std::size_t ny = 2 + static_cast<std::size_t>(i) % 4;
    const std::size_t nx = 1 + std::uniform_int_distribution<std::size_t>(0, ny - 2)(rng);
    const std::size_t nj = std::uniform_int_distribution<std::size_t>(0, ny - nx)(rng);
    const auto g = random_graph_code(kF2, nx, nj, ny, rng);
    const auto da = distance_algebraic(graph_to_stabilizer(g));
    const auto dk = distance_kl(encode_isometry(g));
    o.require(da == dk, "sample " + std::to_string(i) + ": algebraic " + std::to_string(da) +
                            " != kl " + std::to_string(dk));
  }
  if (o.pass) o.note = "25 random GF(2) graph codes agree";
  return o;
}

#ifdef GRAPHSTAB_CLI_PATH
int run_cli(const std::string& args) {
  const std::string cmd = std::string(GRAPHSTAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
#endif

Outcome criterion_cli() {
  Outcome o;
#ifdef GRAPHSTAB_CLI_PATH
  const fs::path dir = fs::temp_directory_path() / "graphstab_acceptance";
  fs::create_directories(dir);
  const std::string fig1 = testing::fixture("fig1_graph.json");
  const auto a = dir / "a.json";
  const auto b = dir / "b.json";
  o.require(run_cli("convert " + fig1 + " --to stabilizer -o " + a.string()) == 0, "convert failed");
  o.require(run_cli("convert " + fig1 + " --to stabilizer -o " + b.string()) == 0, "convert failed");
  o.require(!slurp(a).empty() && slurp(a) == slurp(b), "outputs differ");
  const auto trivial = dir / "trivial.json";
  std::ofstream(trivial) << R"({"p": 2, "inputs": 1, "aux": 0, "outputs": 1, "gamma": [[0, 1], [1, 0]]})";
  const int c2 = run_cli("verify " + fig1 + " --max-weight 2");
  const int c3 = run_cli("verify " + fig1 + " --max-weight 3");
  const int ct = run_cli("verify " + trivial.string() + " --max-weight 1");
  o.require(c2 == 0 && c3 == 2 && ct == 2, "verify exit codes " + std::to_string(c2) + "/" +
                                               std::to_string(c3) + "/" + std::to_string(ct));
  fs::remove_all(dir);
  if (o.pass) o.note = "byte-identical conversions; verify exits 0/2/2";
#else
  o.require(false, "CLI not built");
#endif
  return o;
}

}  // namespace
}  // namespace graphstab

int main() {
  using graphstab::Outcome;
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"pentagon graph converts to the 16-element stabilizer space",
       graphstab::criterion_pentagon_conversion},
      {"pentagon distances agree (algebraic = KL = 3)", graphstab::criterion_pentagon_distances},
      {"six-qudit degenerate example is isotropic, k=1, round-trips",
       graphstab::criterion_degenerate_six},
      {"[[4,2,2]] self-dual example reproduces the printed graph",
       graphstab::criterion_self_dual},
      {"random round trips", graphstab::criterion_roundtrip},
      {"numerical oracle suite", graphstab::criterion_numerics},
      {"cross-oracle distance identity", graphstab::criterion_cross_distance},
      {"CLI determinism and verify exit codes", graphstab::criterion_cli},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << index << ". " << name << " — " << o.note
              << " (" << ms << " ms)\n";
    if (!o.pass) ++failed;
  }
  std::cout << (8 - failed) << "/8 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
