// Copyright 2026 The Whiteboard Authors. All Rights Reserved.
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


#include <charconv>
#include <fstream>
#include <sstream>

#include "whiteboard/errors.hpp"
#include "whiteboard/graph.hpp"

namespace whiteboard {

namespace {

constexpr std::string_view kHeader = "# whiteboard-graph v1";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string to_graph_file(const LabeledGraph& g) {
  std::ostringstream out;
  out << kHeader << "\n" << "n=" << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

LabeledGraph parse_graph_file(std::string_view text) {
  std::optional<LabeledGraph> graph;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line_no == 1) {
      if (line != kHeader) throw ParseError("missing '# whiteboard-graph v1' header");
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    if (!graph) {
      if (!line.starts_with("n=")) {
        throw ParseError("line " + std::to_string(line_no) + ": expected n=<N>");
      }
      const int n = parse_int(line.substr(2), line_no);
      if (n < 1) throw ParseError("node count must be positive");
      graph.emplace(n);
      continue;
    }
    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v>'");
    }
    const int u = parse_int(trim(line.substr(0, space)), line_no);
    const int v = parse_int(trim(line.substr(space + 1)), line_no);
    try {
      graph->add_edge(u, v);
    } catch (const InvalidGraph& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (line_no == 0) throw ParseError("empty graph file");
  if (!graph) throw ParseError("missing n=<N> line");
  return *graph;
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_file(buffer.str());
}

void write_graph_file(const std::string& path, const LabeledGraph& g) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path);
  out << to_graph_file(g);
  if (!out) throw ParseError("write failed for " + path);
}

}  // namespace whiteboard
