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

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "spantree/error.hpp"

namespace spantree {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view token) {
  T value{};
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

bool is_integer_token(std::string_view token) {
  if (token.empty()) return false;
  std::size_t start = token[0] == '-' ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  }
  return true;
}

class Parser {
 public:
  ParsedInstance run(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto tokens = split_ws(line);
      if (tokens.empty()) continue;
      if (tokens[0].front() == '#') {
        if (tokens[0] == "#" && tokens.size() > 1 && tokens[1] == "meta") read_meta(tokens);
        if (tokens[0] == "#" && tokens.size() > 1 && tokens[1] == "vertices") read_vertices(tokens);
        continue;
      }
      if (!header_) {
        read_header(tokens);
      } else {
        read_record(tokens);
      }
    }
    if (!header_) fail(line_no_ + 1, "missing 'nstm' header");
    if (base_.size() != m_ || cands_.size() != q_) {
      fail(line_no_ + 1, "expected " + std::to_string(m_) + " 'e' and " + std::to_string(q_) +
                             " 'c' records, found " + std::to_string(base_.size()) + " and " +
                             std::to_string(cands_.size()));
    }
    ParsedInstance out;
    out.spec.base = Graph(n_, std::move(base_));
    out.spec.candidates = CandidateSet(std::move(cands_));
    out.spec.k = k_;
    if (out.spec.k > static_cast<int>(q_)) {
      out.spec.k = static_cast<int>(q_);
      out.spec.k_clamped = true;
    }
    if (meta_clamped_) out.spec.k_clamped = true;
    out.spec.eps = eps_;
    out.spec.seed = seed_;
    out.spec.label = label_;
    if (mode_ == Mode::kLabels) {
      if (static_cast<int>(labels_.size()) < n_) {
        // Vertices never mentioned by an edge keep synthetic names.
        for (int v = static_cast<int>(labels_.size()); v < n_; ++v) {
          labels_.push_back("v" + std::to_string(v));
        }
      }
      out.labels = std::move(labels_);
    }
    return out;
  }

 private:
  enum class Mode { kUnset, kIndices, kLabels };

  [[noreturn]] static void fail(int line, const std::string& what) {
    throw ParseError(line, what);
  }
  [[noreturn]] void fail(const std::string& what) const { fail(line_no_, what); }

  void read_meta(const std::vector<std::string_view>& tokens) {
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const auto eq = tokens[i].find('=');
      if (eq == std::string_view::npos) fail("malformed meta field '" + std::string(tokens[i]) + "'");
      const std::string_view key = tokens[i].substr(0, eq);
      const std::string_view value = tokens[i].substr(eq + 1);
      if (key == "label") {
        label_ = std::string(value);
      } else if (key == "eps") {
        const auto eps = parse_number<double>(value);
        if (!eps || !(*eps > 0.0) || !std::isfinite(*eps)) fail("bad eps in meta");
        eps_ = *eps;
      } else if (key == "seed") {
        const auto seed = parse_number<std::uint64_t>(value);
        if (!seed) fail("bad seed in meta");
        seed_ = *seed;
      } else if (key == "k_clamped") {
        meta_clamped_ = value == "1";
      }
    }
  }

  // Fixes the label numbering before any record is read.
  void read_vertices(const std::vector<std::string_view>& tokens) {
    if (!header_ || !base_.empty() || !cands_.empty() || !labels_.empty()) {
      fail("'# vertices' must directly follow the header");
    }
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      if (is_integer_token(tokens[i])) fail("'# vertices' lists labels, not indices");
      const std::size_t before = labels_.size();
      vertex(tokens[i]);
      if (labels_.size() == before) fail("duplicate label '" + std::string(tokens[i]) + "'");
    }
  }

  void read_header(const std::vector<std::string_view>& tokens) {
    if (tokens[0] != "nstm") fail("expected 'nstm' header, got '" + std::string(tokens[0]) + "'");
    if (tokens.size() != 6) fail("header needs: nstm <version> <n> <m> <q> <k>");
    const auto version = parse_number<int>(tokens[1]);
    if (!version || *version != kInstanceFormatVersion) {
      fail("unsupported format version '" + std::string(tokens[1]) + "'");
    }
    const auto n = parse_number<int>(tokens[2]);
    const auto m = parse_number<std::size_t>(tokens[3]);
    const auto q = parse_number<std::size_t>(tokens[4]);
    const auto k = parse_number<int>(tokens[5]);
    if (!n || *n < 1) fail("vertex count must be a positive integer");
    if (!m) fail("bad edge count");
    if (!q) fail("bad candidate count");
    if (!k || *k < 1) fail("budget k must be an integer >= 1");
    n_ = *n;
    m_ = *m;
    q_ = *q;
    k_ = *k;
    header_ = true;
  }

  Vertex vertex(std::string_view token) {
    const Mode mode = is_integer_token(token) ? Mode::kIndices : Mode::kLabels;
    if (mode_ == Mode::kUnset) mode_ = mode;
    if (mode != mode_) fail("mixes integer vertices with labels at '" + std::string(token) + "'");
    if (mode_ == Mode::kIndices) {
      const auto v = parse_number<int>(token);
      if (!v || *v < 0 || *v >= n_) {
        fail("vertex " + std::string(token) + " out of range [0, " + std::to_string(n_) + ")");
      }
      return *v;
    }
    const auto [it, inserted] = label_index_.try_emplace(std::string(token), 0);
    if (inserted) {
      if (static_cast<int>(labels_.size()) == n_) {
        fail("more than " + std::to_string(n_) + " distinct vertex labels");
      }
      it->second = static_cast<Vertex>(labels_.size());
      labels_.emplace_back(token);
    }
    return it->second;
  }

  void read_record(const std::vector<std::string_view>& tokens) {
    const std::string_view tag = tokens[0];
    if (tag != "e" && tag != "c") fail("unknown record '" + std::string(tag) + "'");
    if (tokens.size() != 4) fail("record needs: " + std::string(tag) + " <u> <v> <w>");
    if (tag == "e" && !cands_.empty()) fail("'e' record after 'c' records");
    const Vertex u = vertex(tokens[1]);
    const Vertex v = vertex(tokens[2]);
    if (u == v) fail("self-loop on vertex " + std::string(tokens[1]));
    const auto w = parse_number<double>(tokens[3]);
    if (!w || !std::isfinite(*w) || !(*w > 0.0)) {
      fail("weight must be a positive real, got '" + std::string(tokens[3]) + "'");
    }
    auto& target = tag == "e" ? base_ : cands_;
    const std::size_t limit = tag == "e" ? m_ : q_;
    if (target.size() == limit) fail("too many '" + std::string(tag) + "' records");
    target.push_back({u, v, *w});
  }

  int line_no_ = 0;
  bool header_ = false;
  int n_ = 0;
  std::size_t m_ = 0;
  std::size_t q_ = 0;
  int k_ = 1;
  double eps_ = 0.1;
  std::uint64_t seed_ = 0;
  std::string label_;
  bool meta_clamped_ = false;
  Mode mode_ = Mode::kUnset;
  std::unordered_map<std::string, Vertex> label_index_;
  std::vector<std::string> labels_;
  std::vector<Edge> base_;
  std::vector<Edge> cands_;
};

bool valid_label(const std::string& label) {
  if (label.empty() || label.front() == '#' || is_integer_token(label)) return false;
  for (char ch : label) {
    if (std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw DomainError("format_real: conversion failed");
  return std::string(buf, ptr);
}

ParsedInstance parse_instance(std::istream& in) { return Parser().run(in); }

ParsedInstance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

ParsedInstance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return parse_instance(in);
}

std::string serialize_instance(const InstanceSpec& spec, const std::vector<std::string>& labels) {
  const int n = spec.base.num_vertices();
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n) {
      throw DomainError("serialize_instance: need one label per vertex");
    }
    for (const auto& label : labels) {
      if (!valid_label(label)) throw DomainError("serialize_instance: bad label '" + label + "'");
    }
  }
  for (char ch : spec.label) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      throw DomainError("serialize_instance: instance label contains whitespace");
    }
  }
  const auto name = [&](Vertex v) { return labels.empty() ? std::to_string(v) : labels[v]; };
  std::ostringstream out;
  out << "# meta";
  if (!spec.label.empty()) out << " label=" << spec.label;
  out << " eps=" << format_real(spec.eps) << " seed=" << spec.seed;
  if (spec.k_clamped) out << " k_clamped=1";
  out << '\n';
  out << "nstm " << kInstanceFormatVersion << ' ' << n << ' ' << spec.base.num_edges() << ' '
      << spec.candidates.size() << ' ' << spec.k << '\n';
  if (!labels.empty()) {
    out << "# vertices";
    for (const auto& label : labels) out << ' ' << label;
    out << '\n';
  }
  for (const Edge& e : spec.base.edges()) {
    out << "e " << name(e.u) << ' ' << name(e.v) << ' ' << format_real(e.weight) << '\n';
  }
  for (const Edge& e : spec.candidates.pairs()) {
    out << "c " << name(e.u) << ' ' << name(e.v) << ' ' << format_real(e.weight) << '\n';
  }
  return out.str();
}

void write_instance(const std::filesystem::path& path, const InstanceSpec& spec,
                    const std::vector<std::string>& labels) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << serialize_instance(spec, labels);
}

}  // namespace spantree
