#include "endtangle/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "endtangle/errors.hpp"

namespace endtangle {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct Dinic {
  struct Arc {
    int to;
    long long cap;
    int rev;
    bool orig;  // original arc, as opposed to its residual reverse
  };

  explicit Dinic(int n) : graph(n), level(n), iter(n) {}

  void add_arc(int from, int to, long long cap) {
    graph[from].push_back(
        {to, cap, static_cast<int>(graph[to].size()), true});
    graph[to].push_back(
        {from, 0, static_cast<int>(graph[from].size()) - 1, false});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : graph[v]) {
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < static_cast<int>(graph[v].size()); ++i) {
      Arc& a = graph[v][i];
      if (a.cap > 0 && level[v] < level[a.to]) {
        long long d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          graph[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      long long f;
      while ((f = dfs(s, t, kInf)) > 0) flow += f;
    }
    return flow;
  }

  std::vector<std::vector<Arc>> graph;
  std::vector<int> level;
  std::vector<int> iter;
};

}  // namespace

NodeCutResult min_vertex_cut(int n, const std::vector<std::vector<int>>& adj,
                             const std::vector<int>& sources, int sink,
                             const std::vector<int>& uncuttable) {
  if (sources.empty()) throw EmptySource("min_vertex_cut requires a source");
  std::vector<char> is_uncuttable(n, 0);
  for (int v : uncuttable) is_uncuttable[v] = 1;
  is_uncuttable[sink] = 1;
  std::vector<char> is_source(n, 0);
  for (int v : sources) is_source[v] = 1;

  NodeCutResult res;

  // An all-infinite-capacity augmenting path exists iff the sink is
  // reachable from an uncuttable source through uncuttable vertices.
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int v : sources) {
      if (is_uncuttable[v] && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == sink) {
        res.infinite = true;
        return res;
      }
      for (int u : adj[v]) {
        if (is_uncuttable[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }

  // Node splitting: v_in = 2v, v_out = 2v + 1; super source is 2n.
  const int super = 2 * n;
  const int target = 2 * sink;  // reaching sink_in completes a path
  Dinic dinic(2 * n + 1);
  for (int v = 0; v < n; ++v) {
    dinic.add_arc(2 * v, 2 * v + 1, is_uncuttable[v] ? kInf : 1);
  }
  for (int v = 0; v < n; ++v) {
    for (int u : adj[v]) {
      dinic.add_arc(2 * v + 1, 2 * u, kInf);
    }
  }
  for (int v : sources) dinic.add_arc(super, 2 * v, kInf);

  res.value = static_cast<int>(dinic.max_flow(super, target));

  // Dual certificate: vertices whose internal arc crosses the residual cut.
  {
    std::vector<char> reach(2 * n + 1, 0);
    std::vector<int> stack{super};
    reach[super] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Dinic::Arc& a : dinic.graph[v]) {
        if (a.cap > 0 && !reach[a.to]) {
          reach[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (reach[2 * v] && !reach[2 * v + 1]) res.cut_nodes.push_back(v);
    }
  }

  // Path decomposition of the flow. Per-arc remaining flow equals the
  // reverse arc's residual capacity.
  {
    std::vector<std::vector<long long>> used(2 * n + 1);
    for (int v = 0; v <= 2 * n; ++v) {
      used[v].assign(dinic.graph[v].size(), 0);
    }
    auto flow_on = [&](int v, int i) -> long long {
      const Dinic::Arc& a = dinic.graph[v][i];
      if (!a.orig) return 0;  // only original arcs carry flow
      return dinic.graph[a.to][a.rev].cap - used[v][i];
    };
    for (int p = 0; p < res.value; ++p) {
      std::vector<int> path;
      int v = super;
      int steps = 0;
      while (v != target && ++steps <= 10 * n + 10) {
        int next = -1, arc = -1;
        for (int i = 0; i < static_cast<int>(dinic.graph[v].size()); ++i) {
          const Dinic::Arc& a = dinic.graph[v][i];
          // choose the lexicographically smallest continuation with flow
          if (flow_on(v, i) > 0 && (next == -1 || a.to < next)) {
            next = a.to;
            arc = i;
          }
        }
        if (next == -1) break;
        used[v][arc] += 1;
        v = next;
        if (v % 2 == 0 && v < 2 * n && v != target) path.push_back(v / 2);
      }
      if (v == target) {
        path.push_back(sink);
        res.paths.push_back(std::move(path));
      }
    }
  }
  std::sort(res.cut_nodes.begin(), res.cut_nodes.end());
  return res;
}

}  // namespace endtangle
