#pragma once

#include <vector>

namespace endtangle {

// Result of a unit-vertex-capacity max-flow / min-cut computation on a
// finite graph, expressed in node indices of that graph.
struct NodeCutResult {
  bool infinite = false;  // some uncuttable source reaches the sink through
                          // uncuttable vertices only
  int value = 0;
  std::vector<int> cut_nodes;               // sorted
  std::vector<std::vector<int>> paths;      // node sequences source..sink
};

// Maximum number of vertex-disjoint paths from `sources` to `sink` in an
// undirected graph, vertices having unit capacity via node splitting.
// Vertices in `uncuttable` (and the sink) get infinite capacity; source
// vertices are themselves cuttable unless listed there. Deterministic:
// augmenting order follows node index order.
NodeCutResult min_vertex_cut(int n, const std::vector<std::vector<int>>& adj,
                             const std::vector<int>& sources, int sink,
                             const std::vector<int>& uncuttable);

}  // namespace endtangle
