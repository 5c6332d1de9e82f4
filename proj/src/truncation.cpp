#include "endtangle/truncation.hpp"

#include <algorithm>

#include "endtangle/errors.hpp"

namespace endtangle {

int Truncation::index_of(Vertex v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

VertexList Truncation::frontier() const {
  VertexList out;
  for (int i = 0; i < size(); ++i) {
    if (frontier_[i]) out.push_back(verts_[i]);
  }
  return out;
}

Truncation truncate(const FamilyPtr& g, int L, long vertex_cap) {
  if (L < 0) throw InvalidParam("truncation level must be >= 0");
  Truncation t;
  t.family_ = g;
  t.L_ = L;
  for (int l = 0; l <= L; ++l) {
    VertexList layer = g->vertices_at_level(l);
    t.verts_.insert(t.verts_.end(), layer.begin(), layer.end());
    if (static_cast<long>(t.verts_.size()) > vertex_cap) {
      throw ResourceBudgetExceeded("truncation exceeds vertex cap");
    }
  }
  std::sort(t.verts_.begin(), t.verts_.end());
  for (int i = 0; i < t.size(); ++i) t.index_[t.verts_[i]] = i;

  t.adj_.assign(t.size() + 1, {});
  t.frontier_.assign(t.size(), 0);
  for (int i = 0; i < t.size(); ++i) {
    for (Vertex u : g->neighbors_up_to(t.verts_[i], L)) {
      int j = t.index_of(u);
      if (j >= 0) t.adj_[i].push_back(j);
    }
    std::sort(t.adj_[i].begin(), t.adj_[i].end());
    if (g->has_neighbor_beyond(t.verts_[i], L)) {
      t.frontier_[i] = 1;
      t.adj_[i].push_back(t.terminal());
      t.adj_[t.terminal()].push_back(i);
    }
  }
  return t;
}

int max_level(const GraphFamily& g, const VertexList& X) {
  int m = -1;
  for (Vertex v : X) m = std::max(m, g.level(v));
  return m;
}

ComponentsResult components_without(const std::shared_ptr<const Truncation>& t,
                                    const VertexList& X) {
  const GraphFamily& g = t->family();
  const int x_level = max_level(g, X);
  if (t->level_bound() <= x_level) {
    throw HorizonTooSmall("truncation level must exceed max level of X");
  }
  ComponentsResult res;
  res.truncation = t;
  res.removed = X;
  std::sort(res.removed.begin(), res.removed.end());
  res.component_of.assign(t->size(), -2);
  for (Vertex x : X) {
    int idx = t->index_of(x);
    if (idx < 0) throw HorizonTooSmall("removed vertex outside truncation");
    res.component_of[idx] = -1;
  }

  for (int start = 0; start < t->size(); ++start) {
    if (res.component_of[start] != -2) continue;
    const int comp_id = static_cast<int>(res.components.size());
    Component comp;
    bool touches_frontier = false;
    bool has_deep = false;
    std::vector<int> stack{start};
    res.component_of[start] = comp_id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.members.push_back(v);
      if (t->is_frontier(v)) touches_frontier = true;
      if (g.level(t->vertex(v)) > x_level) has_deep = true;
      for (int u : t->neighbors(v)) {
        if (u == t->terminal() || res.component_of[u] != -2) continue;
        res.component_of[u] = comp_id;
        stack.push_back(u);
      }
    }
    std::sort(comp.members.begin(), comp.members.end());
    comp.representative = t->vertex(comp.members.front());
    if (touches_frontier && has_deep) {
      comp.label = ComponentLabel::kContainsEnd;
    } else if (!touches_frontier) {
      comp.label = ComponentLabel::kFinite;
    } else {
      comp.label = ComponentLabel::kUndetermined;
    }
    if (comp.label == ComponentLabel::kContainsEnd) {
      if (res.end_component >= 0) {
        throw HorizonTooSmall("multiple end-labeled components");
      }
      res.end_component = comp_id;
    }
    res.components.push_back(std::move(comp));
  }
  return res;
}

ComponentsResult components_without(const FamilyPtr& g, const VertexList& X,
                                    int L, long vertex_cap) {
  auto t = std::make_shared<Truncation>(truncate(g, L, vertex_cap));
  return components_without(t, X);
}

}  // namespace endtangle
