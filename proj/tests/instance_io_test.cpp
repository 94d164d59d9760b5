// Copyright 2026 The Authors.
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

#include "spantree/instance_io.hpp"

#include <cstdio>
#include <filesystem>

#include "gtest/gtest.h"
#include "spantree/error.hpp"
#include "spantree/instances.hpp"

namespace spantree {
namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(InstanceIoTest, ParsesIndexedFile) {
  const ParsedInstance p = parse_instance_text(
      "# meta label=tiny eps=0.25 seed=9\n"
      "nstm 1 3 2 1 1\n"
      "e 0 1 1\n"
      "e 1 2 2.5\n"
      "\n"
      "# a comment\n"
      "c 0 2 0.5\n");
  EXPECT_TRUE(p.labels.empty());
  EXPECT_EQ(p.spec.label, "tiny");
  EXPECT_EQ(p.spec.eps, 0.25);
  EXPECT_EQ(p.spec.seed, 9u);
  EXPECT_EQ(p.spec.k, 1);
  EXPECT_EQ(p.spec.base, build_graph(3, {{0, 1, 1}, {1, 2, 2.5}}));
  EXPECT_EQ(p.spec.candidates, CandidateSet({{0, 2, 0.5}}));
}

TEST(InstanceIoTest, ParsesLabelsInOrderOfAppearance) {
  const ParsedInstance p = parse_instance_text(
      "nstm 1 4 2 1 1\n"
      "e paris lyon 1\n"
      "e lyon nice 1\n"
      "c paris nice 2\n");
  EXPECT_EQ(p.labels, (std::vector<std::string>{"paris", "lyon", "nice", "v3"}));
  EXPECT_EQ(p.spec.candidates[0], (Edge{0, 2, 2.0}));
}

TEST(InstanceIoTest, VerticesLineFixesLabelOrder) {
  const ParsedInstance p = parse_instance_text(
      "nstm 1 3 1 1 1\n"
      "# vertices hub x y\n"
      "e y hub 1\n"
      "c x y 1\n");
  EXPECT_EQ(p.labels, (std::vector<std::string>{"hub", "x", "y"}));
  EXPECT_EQ(p.spec.base, build_graph(3, {{2, 0, 1}}));
  EXPECT_EQ(parse_error_line("# vertices a b\nnstm 1 2 1 1 1\ne a b 1\nc a b 1\n"), 1);
  EXPECT_EQ(parse_error_line("nstm 1 2 1 1 1\n# vertices a a\ne a b 1\nc a b 1\n"), 2);
  EXPECT_EQ(parse_error_line("nstm 1 2 1 1 1\n# vertices a b c\ne a b 1\nc a b 1\n"), 2);
}

TEST(InstanceIoTest, ClampsBudgetToCandidates) {
  const ParsedInstance p = parse_instance_text("nstm 1 2 1 1 5\ne 0 1 1\nc 0 1 1\n");
  EXPECT_EQ(p.spec.k, 1);
  EXPECT_TRUE(p.spec.k_clamped);
}

TEST(InstanceIoTest, ReportsLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("graph 1 2 1 1 1\n"), 1);
  EXPECT_EQ(parse_error_line("nstm 2 2 1 1 1\n"), 1);
  EXPECT_EQ(parse_error_line("nstm 1 2 1 1\n"), 1);
  EXPECT_EQ(parse_error_line("nstm 1 2 1 1 0\n"), 1);
  EXPECT_EQ(parse_error_line("nstm 1 2 1 1 1\ne 0 1 1\n"), 3);
  EXPECT_EQ(parse_error_line("nstm 1 3 1 1 1\ne 0 1 1\nx 0 2 1\n"), 3);
  EXPECT_EQ(parse_error_line("nstm 1 3 1 1 1\nc 0 2 1\ne 0 1 1\n"), 3);
  EXPECT_EQ(parse_error_line("nstm 1 3 1 1 1\ne 0 3 1\nc 0 2 1\n"), 2);
  EXPECT_EQ(parse_error_line("nstm 1 3 1 1 1\ne 1 1 1\nc 0 2 1\n"), 2);
  EXPECT_EQ(parse_error_line("nstm 1 3 1 1 1\ne 0 1 -1\nc 0 2 1\n"), 2);
  EXPECT_EQ(parse_error_line("nstm 1 3 1 1 1\ne 0 1 abc\nc 0 2 1\n"), 2);
  EXPECT_EQ(parse_error_line("nstm 1 3 1 1 1\ne 0 1 1\nc 0 b 1\n"), 3);
  EXPECT_EQ(parse_error_line("nstm 1 2 2 1 1\ne a b 1\ne b c 1\nc a b 1\n"), 3);
  EXPECT_EQ(parse_error_line("nstm 1 2 1 1 1\ne 0 1 1\ne 0 1 1\nc 0 1 1\n"), 3);
  EXPECT_EQ(parse_error_line("# meta eps=zero\nnstm 1 2 1 1 1\n"), 1);
  try {
    parse_instance_text("nstm 1 3 1 1 1\ne 0 7 1\nc 0 2 1\n");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
}

TEST(InstanceIoTest, RoundTripsGeneratedInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomInstanceParams params;
    params.n = 3 + static_cast<int>(seed);
    params.m_extra = 4;
    params.q = 5;
    params.k = 3;
    params.weight_lo = 0.1;
    params.weight_hi = 7.3;
    params.integer_weights = seed % 2 == 0;
    params.seed = seed;
    InstanceSpec spec = gen_random(params);
    spec.eps = 0.125;
    const std::string text = serialize_instance(spec);
    const ParsedInstance back = parse_instance_text(text);
    EXPECT_EQ(back.spec, spec);
    EXPECT_EQ(serialize_instance(back.spec), text);
  }
}

TEST(InstanceIoTest, RoundTripsLabelsAndClampFlag) {
  const VertexPair matching[] = {{0, 1}, {2, 3}};
  const InstanceSpec spec = gen_star_plus(4, matching);
  ASSERT_TRUE(spec.k_clamped);
  const std::vector<std::string> labels = {"a", "b", "c", "d", "hub"};
  const ParsedInstance back = parse_instance_text(serialize_instance(spec, labels));
  EXPECT_EQ(back.spec, spec);
  EXPECT_EQ(back.labels, labels);
}

TEST(InstanceIoTest, SerializeRejectsBadLabels) {
  const InstanceSpec spec = gen_star_plus(2, std::vector<VertexPair>{{0, 1}});
  EXPECT_THROW(serialize_instance(spec, {"a", "b"}), DomainError);
  EXPECT_THROW(serialize_instance(spec, {"a", "b c", "d"}), DomainError);
  EXPECT_THROW(serialize_instance(spec, {"a", "7", "d"}), DomainError);
  InstanceSpec spaced = spec;
  spaced.label = "two words";
  EXPECT_THROW(serialize_instance(spaced), DomainError);
}

TEST(InstanceIoTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "spantree_io_test.txt";
  const InstanceSpec spec = gen_star_plus(3, std::vector<VertexPair>{{0, 1}, {1, 2}});
  write_instance(path, spec);
  EXPECT_EQ(read_instance(path).spec, spec);
  std::filesystem::remove(path);
  EXPECT_THROW(read_instance(path), ParseError);
}

TEST(InstanceIoTest, FormatRealIsShortestRoundTrip) {
  EXPECT_EQ(format_real(1.0), "1");
  EXPECT_EQ(format_real(0.1), "0.1");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_real(x)), x);
}

}  // namespace
}  // namespace spantree
