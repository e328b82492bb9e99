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

#include "graphstab/code_io.hpp"

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "graphstab/errors.hpp"
#include "test_util.hpp"

namespace graphstab {
namespace {

using nlohmann::json;

TEST(CodeIoTest, FixturesLoadWithExpectedKinds) {
  EXPECT_EQ(load_code_file(testing::fixture("fig1_graph.json")).kind(), CodeKind::kGraph);
  EXPECT_EQ(load_code_file(testing::fixture("fig6_gamma.json")).kind(), CodeKind::kGraph);
  EXPECT_EQ(load_code_file(testing::fixture("self_dual_MM.json")).kind(), CodeKind::kStabilizer);
  EXPECT_EQ(load_code_file(testing::fixture("stab10_stabilizer.json")).kind(),
            CodeKind::kStabilizer);
}

TEST(CodeIoTest, GraphRoundTripsThroughJson) {
  const auto g = testing::fig1_graph();
  const json doc = to_json(g);
  EXPECT_EQ(graph_from_json(doc), g);
  EXPECT_EQ(dump_json(doc), dump_json(to_json(graph_from_json(json::parse(dump_json(doc))))));
}

TEST(CodeIoTest, OutputIsSortedTwoSpaceJson) {
  const json doc = to_json(testing::self_dual_mm());
  const std::string text = dump_json(doc);
  EXPECT_EQ(text.substr(0, 18), "{\n  \"generators\": ");
  EXPECT_LT(text.find("\"n\""), text.find("\"p\""));
  EXPECT_EQ(text.back(), '\n');
}

TEST(CodeIoTest, StabilizerOutputIsCanonical) {
  // same space, different generating sets
  const json a = {{"p", 3}, {"n", 1}, {"generators", {{2, 0}}}};
  const json b = {{"p", 3}, {"n", 1}, {"generators", {{1, 0}, {2, 0}}}};
  EXPECT_EQ(dump_json(to_json(stabilizer_from_json(a))), dump_json(to_json(stabilizer_from_json(b))));
  EXPECT_EQ(to_json(stabilizer_from_json(a))["generators"], json({{1, 0}}));
}

TEST(CodeIoTest, EmptyGenerators) {
  const auto s = stabilizer_from_json({{"p", 2}, {"n", 3}, {"generators", json::array()}});
  EXPECT_EQ(s.dim(), 0u);
  EXPECT_EQ(s.n(), 3u);
}

TEST(CodeIoTest, RejectsMalformedInput) {
  EXPECT_THROW(code_from_json(json::array()), ValidationError);
  EXPECT_THROW(code_from_json({{"p", 2}}), ValidationError);
  EXPECT_THROW(code_from_json({{"p", 2}, {"n", 1}, {"gamma", json::array()},
                               {"generators", json::array()}}),
               ValidationError);
  // p not prime
  EXPECT_THROW(stabilizer_from_json({{"p", 4}, {"n", 1}, {"generators", json::array()}}),
               ValidationError);
  // entry out of range
  EXPECT_THROW(stabilizer_from_json({{"p", 2}, {"n", 1}, {"generators", {{2, 0}}}}),
               ValidationError);
  // wrong row length
  EXPECT_THROW(stabilizer_from_json({{"p", 2}, {"n", 2}, {"generators", {{1, 0}}}}),
               ValidationError);
  // not isotropic: (1|0) and (0|1)
  EXPECT_THROW(stabilizer_from_json({{"p", 2}, {"n", 1}, {"generators", {{1, 0}, {0, 1}}}}),
               ValidationError);
  // missing count
  EXPECT_THROW(graph_from_json({{"p", 2}, {"inputs", 0}, {"outputs", 1}, {"gamma", {{0}}}}),
               ValidationError);
  // asymmetric gamma
  EXPECT_THROW(graph_from_json({{"p", 2},
                                {"inputs", 0},
                                {"aux", 0},
                                {"outputs", 2},
                                {"gamma", {{0, 1}, {0, 0}}}}),
               ValidationError);
  // negative entry
  EXPECT_THROW(graph_from_json({{"p", 3}, {"inputs", 0}, {"aux", 0}, {"outputs", 1},
                                {"gamma", {{-1}}}}),
               ValidationError);
}

TEST(CodeIoTest, ValidationMessageNamesInvariant) {
  try {
    graph_from_json({{"p", 2}, {"inputs", 1}, {"aux", 0}, {"outputs", 1}, {"gamma", {{0, 0}, {0, 0}}}});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("B-injective"), std::string::npos) << e.what();
  }
}

TEST(CodeIoTest, MissingFileAndBadJson) {
  EXPECT_THROW(load_code_file("/nonexistent/code.json"), ValidationError);
  const auto path = std::filesystem::temp_directory_path() / "graphstab_bad.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  EXPECT_THROW(load_code_file(path), ValidationError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace graphstab
