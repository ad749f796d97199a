#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gwp/graph.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(GWP_FIXTURE_DIR) + "/" + name; }

inline std::string read(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline gwp::Graph load(const std::string& name) { return gwp::parse_graph(read(path(name + ".graph"))); }

inline const std::vector<std::string>& all() {
  static const std::vector<std::string> names{"bouquet3",    "c3",       "one_loop",        "parallel_edges",
                                              "single_edge", "two_step", "two_vertex_loops"};
  return names;
}

inline gwp::PathWord word(const gwp::Graph& g, const std::string& text) { return gwp::parse_path(g, text); }

}  // namespace fixtures
