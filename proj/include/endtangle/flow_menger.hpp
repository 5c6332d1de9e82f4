#pragma once

#include <memory>
#include <string>
#include <vector>

#include "endtangle/budgets.hpp"
#include "endtangle/flow.hpp"
#include "endtangle/truncation.hpp"

namespace endtangle {

// Max-flow/min-cut duality at unit vertex capacities on a truncation:
// |path_system| == value == |cut_vertices| whenever no source is uncuttable.
struct CutResult {
  bool infinite = false;
  int value = 0;
  VertexList cut_vertices;              // sorted
  std::vector<VertexList> path_system;  // source ... frontier vertex; the
                                        // terminal hop is implicit
};

// Maximum number of vertex-disjoint X-to-terminal paths. Vertices listed in
// `forbidden_sources` get infinite capacity (they cannot be cut); vertices
// in `excluded` are removed from the graph entirely.
CutResult min_cut_to_terminal(const std::shared_ptr<const Truncation>& t,
                              const VertexList& X,
                              const VertexList& forbidden_sources = {},
                              const VertexList& excluded = {});

struct EndSeparatorResult {
  bool infinite = false;  // unbounded cut (a dominated direction)
  int value = 0;
  VertexList separator;
  bool stabilized = false;  // value constant for `patience` levels
  bool exact = false;       // the cut clears the window by the margin
  std::vector<int> values_per_level;  // c_L series, non-increasing
  int final_level = 0;
};

// Smallest X-to-end separator, estimated by running min_cut_to_terminal on
// growing truncations until the value stabilizes. With `forbid_sources` the
// separator is constrained to avoid X (domination-style queries).
EndSeparatorResult min_end_separator(const FamilyPtr& g, const VertexList& X,
                                     int L_max, int patience,
                                     const Budgets& budgets = {},
                                     bool forbid_sources = false,
                                     const VertexList& excluded = {});

struct SeparatorSequence {
  std::vector<VertexList> sets;  // T_0, T_1, ...
  std::vector<int> levels;       // max level per set
};

// T_0 separates X from the end; each T_n is a minimum separator of T_{n-1}
// with T_{n-1} uncuttable, so consecutive sets are disjoint.
SeparatorSequence separator_sequence(const FamilyPtr& g, const VertexList& X,
                                     int steps, int L,
                                     const Budgets& budgets = {});

struct RaySystem {
  std::vector<VertexList> prefixes;  // pairwise disjoint, start in X
  std::vector<std::string> tail_rules;
};

// `count` vertex-disjoint paths from distinct vertices of X to the frontier
// at level L, each extendable to a ray by the family's tail rule.
RaySystem disjoint_rays(const FamilyPtr& g, const VertexList& X, int count,
                        int L, const Budgets& budgets = {},
                        const VertexList& excluded = {});

}  // namespace endtangle
