#pragma once

#include <string>

#include "plumb/plumb.hpp"

namespace plumb::testing {

inline std::string data_path(const std::string& name) {
  return std::string(PLUMB_DATA_DIR) + "/" + name;
}

// Edge ids: a-b 0,1; b-c 2,3,4; a-d 5; d-c 6.
inline SignedMultigraph knot_7_5_graph() {
  return parse_graph(
      "vertex a\nvertex b\nvertex c\nvertex d\ncomponents 1\n"
      "edge a b +\nedge a b +\n"
      "edge b c +\nedge b c +\nedge b c +\n"
      "edge a d -\nedge d c -\n");
}

// Edge ids: v-v1 0, v-v2 1, v-v3 2, v-v4 3, v2-v5 4, v2-v6 5, v3-v6 6,
// v4-v6 7, v5-v7 8, v6-v7 9.
inline SignedMultigraph eight_vertex_graph() {
  return parse_graph(
      "vertex v\nvertex v1\nvertex v2\nvertex v3\nvertex v4\nvertex v5\nvertex v6\n"
      "vertex v7\n"
      "edge v v1 +\nedge v v2 +\nedge v v3 +\nedge v v4 +\n"
      "edge v2 v5 -\nedge v2 v6 -\nedge v3 v6 +\nedge v4 v6 +\n"
      "edge v5 v7 -\nedge v6 v7 -\n");
}

inline BraidWord figure8_word() { return BraidWord{3, {1, 2, 1, 2}}; }
inline BraidWord b4_word() {
  return BraidWord{4, {1, 2, 3, -1, 2, 1, 1, -2, 3, 2, 2, -3, 2, 3, 3}};
}
inline BraidWord knot_7_5_word() { return BraidWord{3, {1, 2, -1, 2, 2, 1, 1, 1}}; }

}  // namespace plumb::testing
