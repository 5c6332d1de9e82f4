#pragma once

#include <string>
#include <utility>
#include <vector>

#include "endtangle/budgets.hpp"
#include "endtangle/flow_menger.hpp"
#include "endtangle/graph_family.hpp"

namespace endtangle {

enum class Verdict { kTrue, kFalse, kInconclusive };
enum class BoundKind { kExact, kLowerBound, kInfinite };

// Domination check for a single vertex. A `false` verdict carries a finite
// separator certificate strictly inside the window; a `true` verdict is
// backed either by frontier adjacency at every probed level or by a cut
// value that keeps growing past the threshold.
struct DominationCheck {
  Verdict verdict = Verdict::kInconclusive;
  std::string certificate_kind;  // "frontier-at-every-level",
                                 // "growing-cut", "finite-separator"
  VertexList separator;          // false certificate only
  std::vector<int> cut_values;
};

DominationCheck dominates(const FamilyPtr& g, Vertex v, int L_max,
                          int threshold, const Budgets& budgets = {});

struct DominationCount {
  BoundKind kind = BoundKind::kLowerBound;
  int value = 0;
  VertexList witnesses;  // sorted
  std::vector<std::pair<Vertex, DominationCheck>> evidence;  // all probed
};

DominationCount domination_count(const FamilyPtr& g, int search_level,
                                 int L_max, int threshold,
                                 const Budgets& budgets = {});

struct DegreeEstimate {
  BoundKind kind = BoundKind::kLowerBound;
  int value = 0;
  std::vector<int> series;  // s_d for d = 0..d_max, non-decreasing
  std::string certificate;
};

// Degree of the end computed on the graph minus the dominating vertices D:
// min ball-to-end separator sizes for growing balls.
DegreeEstimate degree_estimate(const FamilyPtr& g, int d_max, int L_max,
                               int patience, const VertexList& D,
                               const Budgets& budgets = {});

enum class CohesionCategory { kBounded, kUnbounded, kInfinite, kInconclusive };

struct CohesionReport {
  DominationCount domination;
  DegreeEstimate degree;
  bool degree_computed = false;
  CohesionCategory category = CohesionCategory::kInconclusive;
  int bounded_value = 0;      // k with cohesion == k, when bounded
  int lower_bound_value = 0;  // "at least Bounded(lb)" when inconclusive
};

CohesionReport cohesion(const FamilyPtr& g, const Budgets& budgets = {});

// Decisive comparisons of deg + dom against k; kInconclusive when the
// report's bounds cannot settle the question.
Verdict deg_plus_dom_at_least(const CohesionReport& r, int k);

}  // namespace endtangle
