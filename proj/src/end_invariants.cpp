#include "endtangle/end_invariants.hpp"

#include <algorithm>

#include "endtangle/errors.hpp"

namespace endtangle {

DominationCheck dominates(const FamilyPtr& g, Vertex v, int L_max,
                          int threshold, const Budgets& budgets) {
  if (threshold < 1) throw InvalidParam("dominates: threshold must be >= 1");
  DominationCheck check;
  if (g->has_neighbor_beyond(v, L_max)) {
    // Infinite-depth adjacency forces domination in a one-ended family.
    check.verdict = Verdict::kTrue;
    check.certificate_kind = "frontier-at-every-level";
    return check;
  }
  EndSeparatorResult sep = min_end_separator(g, {v}, L_max, budgets.patience,
                                             budgets, /*forbid_sources=*/true);
  check.cut_values = sep.values_per_level;
  if (sep.infinite) {
    check.verdict = Verdict::kTrue;
    check.certificate_kind = "growing-cut";
    return check;
  }
  if (sep.stabilized && sep.exact) {
    check.verdict = Verdict::kFalse;
    check.certificate_kind = "finite-separator";
    check.separator = sep.separator;
    return check;
  }
  const auto& vals = sep.values_per_level;
  bool all_above = !vals.empty();
  for (int c : vals) all_above = all_above && c > threshold;
  bool growing = vals.size() >= 2 && vals.back() > vals.front();
  if (all_above && growing) {
    check.verdict = Verdict::kTrue;
    check.certificate_kind = "growing-cut";
    return check;
  }
  check.verdict = Verdict::kInconclusive;
  return check;
}

DominationCount domination_count(const FamilyPtr& g, int search_level,
                                 int L_max, int threshold,
                                 const Budgets& budgets) {
  DominationCount count;
  // Probe enough levels that an infinite-stream family can reach the
  // witness threshold.
  search_level = std::max(search_level, threshold);
  VertexList probe;
  for (int l = 0; l <= search_level; ++l) {
    VertexList layer = g->vertices_at_level(l);
    probe.insert(probe.end(), layer.begin(), layer.end());
  }
  std::sort(probe.begin(), probe.end());
  bool all_settled = true;
  for (Vertex v : probe) {
    DominationCheck check = dominates(g, v, L_max, threshold, budgets);
    if (check.verdict == Verdict::kTrue) {
      count.witnesses.push_back(v);
    } else if (check.verdict != Verdict::kFalse) {
      all_settled = false;
    }
    count.evidence.emplace_back(v, std::move(check));
  }
  count.value = static_cast<int>(count.witnesses.size());
  if (count.value >= threshold && g->infinite_dominating_stream()) {
    count.kind = BoundKind::kInfinite;
  } else if (all_settled && g->locally_finite_beyond(search_level)) {
    // No vertex beyond the searched levels can dominate: domination needs
    // infinite degree in a locally finite tail of the family.
    count.kind = BoundKind::kExact;
  } else {
    count.kind = BoundKind::kLowerBound;
  }
  return count;
}

DegreeEstimate degree_estimate(const FamilyPtr& g, int d_max, int L_max,
                               int patience, const VertexList& D,
                               const Budgets& budgets) {
  DegreeEstimate est;
  bool every_level_stabilized = true;
  VertexList ball;
  for (int d = 0; d <= d_max; ++d) {
    VertexList layer = g->vertices_at_level(d);
    for (Vertex v : layer) {
      if (!std::binary_search(D.begin(), D.end(), v)) ball.push_back(v);
    }
    if (ball.empty()) continue;
    EndSeparatorResult sep =
        min_end_separator(g, ball, L_max, patience, budgets,
                          /*forbid_sources=*/false, D);
    if (sep.infinite) {
      throw DominatedEnd("degree_estimate: unbounded cut with D removed");
    }
    if (!est.series.empty() && sep.value < est.series.back()) {
      throw Error("degree_estimate: s_d decreased with d");
    }
    every_level_stabilized = every_level_stabilized && sep.stabilized;
    est.series.push_back(sep.value);
    est.value = sep.value;
  }
  if (est.series.empty()) {
    throw BudgetExceeded("degree_estimate: no levels probed");
  }

  int plateau = 1;
  for (std::size_t i = est.series.size(); i-- > 1;) {
    if (est.series[i] == est.series[i - 1]) {
      ++plateau;
    } else {
      break;
    }
  }
  bool strictly_rising = est.series.size() > static_cast<std::size_t>(patience);
  if (strictly_rising) {
    for (std::size_t i = est.series.size() - patience; i < est.series.size();
         ++i) {
      strictly_rising = strictly_rising && est.series[i] > est.series[i - 1];
    }
  }

  std::optional<int> width = g->degree_width_bound();
  if (every_level_stabilized && plateau >= patience && width &&
      est.value == *width) {
    est.kind = BoundKind::kExact;
    est.certificate = "plateau matches declared width bound " +
                      std::to_string(*width);
  } else if (est.value > budgets.divergence_bound && strictly_rising) {
    est.kind = BoundKind::kInfinite;
    est.certificate = "series exceeds divergence bound with strict growth";
  } else {
    est.kind = BoundKind::kLowerBound;
    est.certificate = "plateau not certified";
  }
  return est;
}

CohesionReport cohesion(const FamilyPtr& g, const Budgets& budgets) {
  CohesionReport report;
  report.domination = domination_count(g, budgets.search_level, budgets.window,
                                       budgets.threshold, budgets);
  const DominationCount& dom = report.domination;
  if (dom.kind == BoundKind::kInfinite) {
    report.category = CohesionCategory::kInfinite;
    return report;
  }
  if (dom.kind != BoundKind::kExact) {
    report.category = CohesionCategory::kInconclusive;
    report.lower_bound_value = dom.value + 1;
    return report;
  }
  report.degree = degree_estimate(g, budgets.d_max, budgets.window,
                                  budgets.patience, dom.witnesses, budgets);
  report.degree_computed = true;
  switch (report.degree.kind) {
    case BoundKind::kInfinite:
      report.category = CohesionCategory::kUnbounded;
      break;
    case BoundKind::kExact:
      report.category = CohesionCategory::kBounded;
      report.bounded_value = report.degree.value + dom.value + 1;
      break;
    case BoundKind::kLowerBound:
      report.category = CohesionCategory::kInconclusive;
      report.lower_bound_value = report.degree.value + dom.value + 1;
      break;
  }
  return report;
}

Verdict deg_plus_dom_at_least(const CohesionReport& r, int k) {
  const DominationCount& dom = r.domination;
  if (dom.kind == BoundKind::kInfinite) return Verdict::kTrue;
  if (dom.value >= k) return Verdict::kTrue;  // witnesses are a lower bound
  if (r.degree_computed) {
    if (r.degree.kind == BoundKind::kInfinite) return Verdict::kTrue;
    if (r.degree.value + dom.value >= k) return Verdict::kTrue;
    if (r.degree.kind == BoundKind::kExact && dom.kind == BoundKind::kExact) {
      return Verdict::kFalse;  // exact sum below k
    }
  }
  return Verdict::kInconclusive;
}

}  // namespace endtangle
