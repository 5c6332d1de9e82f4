#include "endtangle/finite_oracle.hpp"

#include <algorithm>
#include <set>

#include "endtangle/errors.hpp"

namespace endtangle {

std::vector<std::vector<int>> FiniteGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

bool FiniteGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) !=
         edges.end();
}

int FiniteSeparation::order() const {
  std::vector<int> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  return static_cast<int>(inter.size());
}

Membership FiniteSeparation::side_of(int v) const {
  bool in_a = std::binary_search(a.begin(), a.end(), v);
  bool in_b = std::binary_search(b.begin(), b.end(), v);
  if (in_a && in_b) return Membership::kBoth;
  if (in_a) return Membership::kAOnly;
  if (in_b) return Membership::kBOnly;
  throw Error("vertex on neither side of a separation");
}

std::string FiniteSeparation::text() const {
  std::string out = "A=[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  out += "];B=[";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(b[i]);
  }
  return out + "]";
}

namespace {

// Connected components of g minus `removed`; returns component id per
// vertex, -1 for removed vertices.
std::vector<int> components(const FiniteGraph& g,
                            const std::vector<char>& removed, int* count) {
  auto adj = g.adjacency();
  std::vector<int> comp(g.n, -1);
  int c = 0;
  for (int s = 0; s < g.n; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (!removed[u] && comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
      }
    }
    ++c;
  }
  *count = c;
  return comp;
}

std::vector<FiniteSeparation> direct_enumeration(const FiniteGraph& g, int k) {
  // Every vertex goes to A only, B only, or both; keep pairs with no edge
  // between A-only and B-only and fewer than k shared vertices.
  std::vector<FiniteSeparation> out;
  std::vector<int> assign(g.n, 0);
  long total = 1;
  for (int i = 0; i < g.n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    int shared = 0;
    for (int v = 0; v < g.n; ++v) {
      assign[v] = static_cast<int>(c % 3);  // 0=A, 1=B, 2=both
      c /= 3;
      if (assign[v] == 2) ++shared;
    }
    if (shared >= k) continue;
    bool crossing = false;
    for (auto [u, v] : g.edges) {
      if ((assign[u] == 0 && assign[v] == 1) ||
          (assign[u] == 1 && assign[v] == 0)) {
        crossing = true;
        break;
      }
    }
    if (crossing) continue;
    FiniteSeparation s;
    for (int v = 0; v < g.n; ++v) {
      if (assign[v] != 1) s.a.push_back(v);
      if (assign[v] != 0) s.b.push_back(v);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteSeparation> separator_generation(const FiniteGraph& g,
                                                   int k) {
  std::vector<FiniteSeparation> out;
  for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
    if (__builtin_popcount(mask) >= k) continue;
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; ++v) removed[v] = (mask >> v) & 1;
    int comp_count = 0;
    std::vector<int> comp = components(g, removed, &comp_count);
    for (unsigned sides = 0; sides < (1u << comp_count); ++sides) {
      FiniteSeparation s;
      for (int v = 0; v < g.n; ++v) {
        bool to_a = removed[v] || !((sides >> comp[v]) & 1);
        bool to_b = removed[v] || ((sides >> comp[v]) & 1);
        if (to_a) s.a.push_back(v);
        if (to_b) s.b.push_back(v);
      }
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<FiniteSeparation> all_separations(const FiniteGraph& g, int k,
                                              int cap) {
  if (g.n > cap) throw CapExceeded("all_separations: graph too large");
  std::vector<FiniteSeparation> by_separator = separator_generation(g, k);
  std::vector<FiniteSeparation> direct = direct_enumeration(g, k);
  if (by_separator != direct) {
    throw Error("separator generation disagrees with direct enumeration");
  }
  return by_separator;
}

BruteCut brute_min_vertex_cut(const FiniteGraph& g, const std::vector<int>& X,
                              int t, const std::vector<int>& forbidden) {
  if (g.n > 14) throw CapExceeded("brute_min_vertex_cut: n > 14");
  auto adj = g.adjacency();
  std::vector<char> is_forbidden(g.n, 0);
  for (int v : forbidden) is_forbidden[v] = 1;
  std::vector<int> allowed;
  for (int v = 0; v < g.n; ++v) {
    if (!is_forbidden[v] && v != t) allowed.push_back(v);
  }

  auto separates = [&](const std::vector<char>& removed) {
    if (removed[t]) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int x : X) {
      if (!removed[x] && !seen[x]) {
        seen[x] = 1;
        stack.push_back(x);
      }
    }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == t) return false;
      for (int u : adj[v]) {
        if (!removed[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    return true;
  };

  BruteCut best;
  const int m = static_cast<int>(allowed.size());
  for (int size = 0; size <= m; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    bool more = size <= m;
    while (more) {
      std::vector<char> removed(g.n, 0);
      for (int i : idx) removed[allowed[i]] = 1;
      if (separates(removed)) {
        best.value = size;
        for (int i : idx) best.cut.push_back(allowed[i]);
        return best;
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) {
        more = false;
      } else {
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  best.infinite = true;
  return best;
}

NodeCutResult flow_min_cut(const FiniteGraph& g, const std::vector<int>& X,
                           int t, const std::vector<int>& forbidden) {
  return min_vertex_cut(g.n, g.adjacency(), X, t, forbidden);
}

AxiomCheck check_tangle_axioms(
    const FiniteGraph& g, const std::vector<FiniteSeparation>& orientation) {
  std::set<std::string> seen;
  for (const FiniteSeparation& s : orientation) {
    if (!seen.insert(s.text()).second) {
      throw NotAnOrientation("duplicate oriented separation");
    }
  }
  for (const FiniteSeparation& s : orientation) {
    FiniteSeparation rev{s.b, s.a};
    if (seen.count(rev.text()) && !(rev == s)) {
      throw NotAnOrientation("both orientations of one separation present");
    }
  }

  const int n = static_cast<int>(orientation.size());
  AxiomCheck res;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int l = j; l < n; ++l) {
        std::vector<char> covered(g.n, 0);
        for (const FiniteSeparation* s :
             {&orientation[i], &orientation[j], &orientation[l]}) {
          for (int v : s->a) covered[v] = 1;
        }
        bool all_vertices = std::find(covered.begin(), covered.end(), 0) ==
                            covered.end();
        if (!all_vertices) continue;
        bool all_edges = true;
        for (auto [u, v] : g.edges) {
          bool edge_covered = false;
          for (const FiniteSeparation* s :
               {&orientation[i], &orientation[j], &orientation[l]}) {
            if (std::binary_search(s->a.begin(), s->a.end(), u) &&
                std::binary_search(s->a.begin(), s->a.end(), v)) {
              edge_covered = true;
              break;
            }
          }
          if (!edge_covered) {
            all_edges = false;
            break;
          }
        }
        if (all_edges) {
          res.violating_triple = {i, j, l};
          return res;
        }
      }
    }
  }
  res.ok = true;
  return res;
}

}  // namespace endtangle
