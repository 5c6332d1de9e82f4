#include "endtangle/flow_menger.hpp"

#include <algorithm>

#include "endtangle/errors.hpp"

namespace endtangle {

namespace {

std::vector<int> to_indices(const Truncation& t, const VertexList& vs,
                            const char* what) {
  std::vector<int> out;
  for (Vertex v : vs) {
    int idx = t.index_of(v);
    if (idx < 0) {
      throw HorizonTooSmall(std::string(what) + " vertex outside truncation");
    }
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CutResult min_cut_to_terminal(const std::shared_ptr<const Truncation>& t,
                              const VertexList& X,
                              const VertexList& forbidden_sources,
                              const VertexList& excluded) {
  if (X.empty()) throw EmptySource("min_cut_to_terminal: empty source set");
  const int n = t->size() + 1;  // + terminal
  std::vector<char> out_of_graph(n, 0);
  for (int idx : to_indices(*t, excluded, "excluded")) out_of_graph[idx] = 1;

  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < t->size(); ++v) {
    if (out_of_graph[v]) continue;
    for (int u : t->neighbors(v)) {
      if (u != t->terminal() && out_of_graph[u]) continue;
      adj[v].push_back(u);
      if (u == t->terminal()) adj[u].push_back(v);
    }
  }
  for (auto& l : adj) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }

  std::vector<int> sources;
  for (int idx : to_indices(*t, X, "source")) {
    if (!out_of_graph[idx]) sources.push_back(idx);
  }
  if (sources.empty()) throw EmptySource("all sources excluded");
  std::vector<int> uncuttable = to_indices(*t, forbidden_sources, "forbidden");

  NodeCutResult raw = min_vertex_cut(n, adj, sources, t->terminal(), uncuttable);

  CutResult res;
  res.infinite = raw.infinite;
  if (res.infinite) return res;
  res.value = raw.value;
  for (int idx : raw.cut_nodes) res.cut_vertices.push_back(t->vertex(idx));
  std::sort(res.cut_vertices.begin(), res.cut_vertices.end());
  for (const auto& p : raw.paths) {
    VertexList path;
    for (int idx : p) {
      if (idx != t->terminal()) path.push_back(t->vertex(idx));
    }
    res.path_system.push_back(std::move(path));
  }
  std::sort(res.path_system.begin(), res.path_system.end(),
            [](const VertexList& a, const VertexList& b) {
              return a.front() < b.front();
            });
  return res;
}

EndSeparatorResult min_end_separator(const FamilyPtr& g, const VertexList& X,
                                     int L_max, int patience,
                                     const Budgets& budgets,
                                     bool forbid_sources,
                                     const VertexList& excluded) {
  const int x_level = max_level(*g, X);
  if (L_max <= x_level + patience) {
    throw InvalidParam("min_end_separator: L_max too small for patience");
  }
  EndSeparatorResult res;
  int plateau = 0;
  for (int L = x_level + 1; L <= L_max; ++L) {
    auto t = std::make_shared<Truncation>(truncate(g, L, budgets.budget));
    CutResult cut = min_cut_to_terminal(t, X, forbid_sources ? X : VertexList{},
                                        excluded);
    if (cut.infinite) {
      res.infinite = true;
      res.final_level = L;
      return res;
    }
    if (!res.values_per_level.empty() && cut.value > res.values_per_level.back()) {
      throw Error("min_end_separator: c_L increased with L");
    }
    plateau = (!res.values_per_level.empty() &&
               cut.value == res.values_per_level.back())
                  ? plateau + 1
                  : 1;
    res.values_per_level.push_back(cut.value);
    res.value = cut.value;
    res.separator = cut.cut_vertices;
    res.final_level = L;
    res.stabilized = plateau >= patience;
    res.exact = res.stabilized &&
                max_level(*g, res.separator) < L - budgets.margin;
    if (res.exact) break;
  }
  return res;
}

SeparatorSequence separator_sequence(const FamilyPtr& g, const VertexList& X,
                                     int steps, int L,
                                     const Budgets& budgets) {
  SeparatorSequence seq;
  EndSeparatorResult first =
      min_end_separator(g, X, L, budgets.patience, budgets);
  if (first.infinite) {
    throw DominatedEnd("separator_sequence: unbounded cut from X");
  }
  seq.sets.push_back(first.separator);
  seq.levels.push_back(max_level(*g, first.separator));

  auto t = std::make_shared<Truncation>(truncate(g, L, budgets.budget));
  for (int n = 1; n < steps; ++n) {
    const VertexList& prev = seq.sets.back();
    CutResult cut = min_cut_to_terminal(t, prev, prev, {});
    if (cut.infinite) {
      throw DominatedEnd("separator_sequence: unbounded cut encountered");
    }
    if (max_level(*g, cut.cut_vertices) >= L - budgets.margin) {
      throw BudgetExceeded("separator_sequence: window too small for steps");
    }
    seq.sets.push_back(cut.cut_vertices);
    seq.levels.push_back(max_level(*g, cut.cut_vertices));
  }
  return seq;
}

RaySystem disjoint_rays(const FamilyPtr& g, const VertexList& X, int count,
                        int L, const Budgets& budgets,
                        const VertexList& excluded) {
  auto t = std::make_shared<Truncation>(truncate(g, L, budgets.budget));
  CutResult cut = min_cut_to_terminal(t, X, {}, excluded);
  if (cut.infinite || cut.value < count) {
    throw CountTooLarge("disjoint_rays: fewer than `count` disjoint paths");
  }
  RaySystem rays;
  for (int i = 0; i < count; ++i) {
    const VertexList& p = cut.path_system[i];
    if (g->tail_from(p.back(), 1).empty()) {
      throw Error("disjoint_rays: no tail rule for frontier vertex " +
                  g->label(p.back()));
    }
    rays.prefixes.push_back(p);
    rays.tail_rules.push_back(g->tail_rule_name(p.back()));
  }
  return rays;
}

}  // namespace endtangle
