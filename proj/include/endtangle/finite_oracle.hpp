#pragma once

#include <string>
#include <utility>
#include <vector>

#include "endtangle/flow.hpp"
#include "endtangle/separation.hpp"

namespace endtangle {

// Brute-force substrate: a small simple undirected graph on 0..n-1.
struct FiniteGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, no loops

  std::vector<std::vector<int>> adjacency() const;
  bool has_edge(int u, int v) const;
};

// An oriented separation of a finite graph, stored extensionally.
struct FiniteSeparation {
  std::vector<int> a;  // sorted
  std::vector<int> b;  // sorted

  int order() const;
  Membership side_of(int v) const;
  std::string text() const;

  friend bool operator==(const FiniteSeparation& l, const FiniteSeparation& r) {
    return l.a == r.a && l.b == r.b;
  }
  friend bool operator<(const FiniteSeparation& l, const FiniteSeparation& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  }
};

// Every oriented separation (A,B) with order < k, generated from separator
// subsets plus component side assignments and cross-checked against direct
// enumeration of all side assignments.
std::vector<FiniteSeparation> all_separations(const FiniteGraph& g, int k,
                                              int cap = 10);

struct BruteCut {
  bool infinite = false;  // no allowed subset separates X from t
  int value = 0;
  std::vector<int> cut;
};

// Minimum vertex subset disjoint from `forbidden` whose removal leaves no
// path from X to t. Exhaustive over subsets; n <= 14.
BruteCut brute_min_vertex_cut(const FiniteGraph& g, const std::vector<int>& X,
                              int t, const std::vector<int>& forbidden);

// The flow engine on the same instance, for oracle comparison.
NodeCutResult flow_min_cut(const FiniteGraph& g, const std::vector<int>& X,
                           int t, const std::vector<int>& forbidden);

struct AxiomCheck {
  bool ok = false;
  std::vector<int> violating_triple;  // indices into the orientation
};

// No three small sides (with repetition) may cover all vertices and edges.
// Throws NotAnOrientation if the set orients some separation twice.
AxiomCheck check_tangle_axioms(const FiniteGraph& g,
                               const std::vector<FiniteSeparation>& orientation);

}  // namespace endtangle
