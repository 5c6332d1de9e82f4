#include "endtangle/closure.hpp"

#include <algorithm>

#include "endtangle/end_invariants.hpp"
#include "endtangle/errors.hpp"
#include "endtangle/flow_menger.hpp"

namespace endtangle {

namespace {

VertexList ball(const GraphFamily& g, int level) {
  VertexList out;
  for (int l = 0; l <= level; ++l) {
    VertexList layer = g.vertices_at_level(l);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrientedSeparation witness_with_dominators(const FamilyPtr& g, int k,
                                           const VertexList& Z,
                                           const VertexList& D,
                                           const Budgets& budgets) {
  VertexList X;
  for (Vertex z : Z) {
    if (!std::binary_search(D.begin(), D.end(), z)) X.push_back(z);
  }
  std::sort(X.begin(), X.end());

  VertexList T;
  if (!X.empty()) {
    EndSeparatorResult sep =
        min_end_separator(g, X, budgets.window, budgets.patience, budgets,
                          /*forbid_sources=*/true, D);
    if (sep.infinite || !(sep.stabilized && sep.exact)) {
      throw BudgetExceeded("limit_point_witness: separator did not stabilize");
    }
    T = sep.separator;
  }
  for (Vertex d : D) T.push_back(d);
  std::sort(T.begin(), T.end());
  T.erase(std::unique(T.begin(), T.end()), T.end());
  if (static_cast<int>(T.size()) >= k) {
    throw BudgetExceeded("limit_point_witness: separator order reached k");
  }
  int L = std::max(budgets.window, max_level(*g, T) + budgets.margin + 1);
  return orient_toward_end(g, T, all_to_a, L, budgets);
}

}  // namespace

OrientedSeparation limit_point_witness(const FamilyPtr& g, int k,
                                       const VertexList& Z,
                                       const Budgets& budgets) {
  CohesionReport report = cohesion(g, budgets);
  Verdict at_least = deg_plus_dom_at_least(report, k);
  if (at_least == Verdict::kTrue) {
    throw CohesionTooHigh("deg + dom >= k: the tangle slice is closed");
  }
  if (at_least == Verdict::kInconclusive) {
    throw Inconclusive("cohesion bounds cannot settle deg + dom < k");
  }
  return witness_with_dominators(g, k, Z, report.domination.witnesses, budgets);
}

ClosureVerdict closure_check(const FamilyPtr& g, int k,
                             const Budgets& budgets) {
  if (k < 1) throw InvalidParam("closure_check: k must be >= 1");
  CohesionReport report = cohesion(g, budgets);
  Verdict at_least = deg_plus_dom_at_least(report, k);
  if (at_least == Verdict::kInconclusive) {
    throw Inconclusive("cohesion bounds not decisive at this budget");
  }

  ClosureVerdict verdict;
  verdict.k = k;
  if (at_least == Verdict::kTrue) {
    verdict.closed = true;
    verdict.route = ClosureRoute::kDecider;
    verdict.decider = find_relative_decider(g, k, budgets);
    return verdict;
  }

  verdict.closed = false;
  verdict.route = ClosureRoute::kLimitPoint;
  LimitPointEvidence evidence;
  evidence.D = report.domination.witnesses;
  int L = std::max(budgets.window, max_level(*g, evidence.D) +
                                       budgets.margin + 1 + budgets.z_samples);
  evidence.target = limit_shape(g, evidence.D, L, budgets);
  for (int i = 1; i <= budgets.z_samples; ++i) {
    LimitPointEvidence::Sample sample;
    sample.Z = ball(*g, i);
    sample.agreeing =
        witness_with_dominators(g, k, sample.Z, evidence.D, budgets);
    sample.restrict_ok = sample.agreeing.order() < k &&
                         sample.agreeing.in_tau() &&
                         agree_on(sample.agreeing, evidence.target, sample.Z);
    evidence.samples.push_back(std::move(sample));
  }
  verdict.evidence = std::move(evidence);
  return verdict;
}

}  // namespace endtangle
