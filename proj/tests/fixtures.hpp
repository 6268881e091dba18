#pragma once

#include "edgepow/canonical.hpp"
#include "edgepow/graph.hpp"

namespace fixtures {

using edgepow::Graph;

// Triangle 1,2,3 with the pendant 3-4.
inline Graph triangle_pendant() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

// Triangle 1,2,3 joined to 6 through the path 2-4-6 and 3-5-6.
inline Graph intro_graph() { return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 6}}); }

// Bowtie on 1..5 (triangles 1,2,3 and 3,4,5) with pendants 6..9 on 1,2,4,5.
inline Graph bowtie_pendants() {
  return Graph(9, {{1, 2}, {1, 3}, {2, 3}, {1, 6}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {4, 8}, {5, 9}});
}

inline Graph triangle() { return edgepow::cycle_graph(3); }

inline Graph bowtie() { return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }

inline Graph two_triangles() { return edgepow::disjoint_union(triangle(), triangle()); }

// Triangles 1,2,3 and 4,5,6 joined by the edge 3-4.
inline Graph two_triangles_bridge() {
  return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {3, 4}});
}

// The above plus the path 2-7-6.
inline Graph two_triangles_bridge_ear() {
  return Graph(7, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {3, 4}, {2, 7}, {7, 6}});
}

// Triangles 1,2,3 and 5,6,7 joined by 3-4-5.
inline Graph two_triangles_path() {
  return Graph(7, {{1, 2}, {1, 3}, {2, 3}, {5, 6}, {5, 7}, {6, 7}, {3, 4}, {4, 5}});
}

// Triangles 1,2,3 and 5,6,7 joined by 3-4-5, plus the path 2-8-9-6.
inline Graph two_triangles_double_path() {
  return Graph(9, {{1, 2}, {1, 3}, {2, 3}, {5, 6}, {5, 7}, {6, 7}, {3, 4}, {4, 5}, {2, 8}, {8, 9}, {9, 6}});
}

}  // namespace fixtures
