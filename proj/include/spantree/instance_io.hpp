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

#ifndef SPANTREE_INSTANCE_IO_HPP_
#define SPANTREE_INSTANCE_IO_HPP_

// Text instance format:
//
//   # meta label=<token> eps=<real> seed=<u64> [k_clamped=1]
//   nstm 1 <n> <m> <q> <k>
//   e <u> <v> <w>      (m lines, base edges)
//   c <u> <v> <w>      (q lines, candidates)
//
// Lines starting with '#' are comments; the meta comment is optional. Vertex
// tokens are either all integers in [0, n) or all free-form labels, in which
// case labels are numbered by first appearance unless a comment line
// "# vertices <label>..." directly after the header fixes their order.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "spantree/instances.hpp"

namespace spantree {

inline constexpr int kInstanceFormatVersion = 1;

struct ParsedInstance {
  InstanceSpec spec;
  std::vector<std::string> labels;  // empty when the file used integer indices
};

// Throws ParseError carrying the 1-based line number.
ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_text(const std::string& text);
ParsedInstance read_instance(const std::filesystem::path& path);

// Weights are written in shortest round-trip form, so parsing the output
// reproduces `spec` exactly. Non-empty `labels` must cover every vertex.
std::string serialize_instance(const InstanceSpec& spec,
                               const std::vector<std::string>& labels = {});
void write_instance(const std::filesystem::path& path, const InstanceSpec& spec,
                    const std::vector<std::string>& labels = {});

// Shortest decimal string that parses back to the same double.
std::string format_real(double x);

}  // namespace spantree

#endif  // SPANTREE_INSTANCE_IO_HPP_
