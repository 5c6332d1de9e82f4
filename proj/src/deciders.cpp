#include "endtangle/deciders.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "endtangle/errors.hpp"
#include "endtangle/flow.hpp"
#include "endtangle/flow_menger.hpp"

namespace endtangle {

namespace {

VertexList vertices_up_to(const GraphFamily& g, int level) {
  VertexList out;
  for (int l = 0; l <= level; ++l) {
    VertexList layer = g.vertices_at_level(l);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Enumerates size-`size` index combinations in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int size, Fn fn) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  if (size > n) return;
  while (true) {
    fn(idx);
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double subset_count_below(int n, int k) {
  double total = 0;
  double c = 1;  // C(n, 0)
  for (int i = 0; i < k; ++i) {
    total += c;
    c = c * (n - i) / (i + 1);
    if (total > 1e18) break;
  }
  return total;
}

// Breadth-first search for a shortest path between two element vertex sets,
// avoiding `blocked` vertices except at admissible endpoints. Deterministic:
// seeds and neighbor scans follow index order.
std::vector<int> link_path_bfs(const Truncation& t,
                               const std::vector<int>& from,
                               const std::vector<int>& to,
                               const std::vector<char>& blocked_internal,
                               const std::vector<char>& usable_endpoint) {
  std::vector<int> parent(t.size() + 1, -2);
  std::vector<int> queue;
  std::vector<char> is_target(t.size() + 1, 0);
  for (int v : to) {
    if (usable_endpoint[v]) is_target[v] = 1;
  }
  for (int v : from) {
    if (!usable_endpoint[v]) continue;
    parent[v] = -1;
    queue.push_back(v);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int u : t.neighbors(v)) {
      if (u == t.terminal() || parent[u] != -2) continue;
      if (is_target[u]) {
        std::vector<int> path{u, v};
        while (parent[v] != -1) {
          v = parent[v];
          path.push_back(v);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (blocked_internal[u]) continue;
      parent[u] = v;
      queue.push_back(u);
    }
  }
  return {};
}

struct CertificateBuilder {
  const FamilyPtr& g;
  int k;
  const VertexList& D;
  const Budgets& budgets;

  DeciderCertificate build(int W) {
    DeciderCertificate cert;
    cert.k = k;
    cert.D = D;
    cert.window = W;
    const int ray_count = k - static_cast<int>(D.size());

    RaySystem rays;
    if (ray_count > 0) {
      rays = find_rays(ray_count, W);
    }
    cert.full_rays = rays.prefixes;
    cert.tail_rules = rays.tail_rules;

    auto t = std::make_shared<Truncation>(truncate(g, W, budgets.budget));

    // Element vertex sets: D vertices first, then ray prefixes.
    std::vector<std::vector<int>> elems;
    std::vector<char> is_dominator(t->size() + 1, 0);
    for (Vertex v : D) {
      int idx = t->index_of(v);
      if (idx < 0) throw BudgetExceeded("dominator outside window");
      elems.push_back({idx});
      is_dominator[idx] = 1;
    }
    for (const VertexList& p : rays.prefixes) {
      std::vector<int> set;
      for (Vertex v : p) set.push_back(t->index_of(v));
      elems.push_back(set);
    }
    const int ne = static_cast<int>(elems.size());

    // Pairwise linking paths, nearest element pairs first; paths stay
    // pairwise disjoint except for shared endpoints in D.
    std::vector<char> used(t->size() + 1, 0);
    std::vector<std::pair<int, int>> pairs;
    for (int d = 1; d < ne; ++d) {
      for (int i = 0; i + d < ne; ++i) pairs.emplace_back(i, i + d);
    }
    for (auto [i, j] : pairs) {
      std::vector<char> blocked(t->size() + 1, 0);
      std::vector<char> endpoint_ok(t->size() + 1, 1);
      for (int v = 0; v < t->size(); ++v) {
        if (used[v] || is_dominator[v]) blocked[v] = 1;
        if (used[v]) endpoint_ok[v] = 0;
      }
      for (int e : {i, j}) {
        for (int v : elems[e]) blocked[v] = 1;
      }
      for (int v : elems[i]) {
        if (is_dominator[v]) endpoint_ok[v] = 1;  // D endpoints shareable
      }
      for (int v : elems[j]) {
        if (is_dominator[v]) endpoint_ok[v] = 1;
      }
      std::vector<int> path =
          link_path_bfs(*t, elems[i], elems[j], blocked, endpoint_ok);
      if (path.empty()) {
        throw BudgetExceeded("linking path not found at this window");
      }
      VertexList vpath;
      for (int v : path) {
        vpath.push_back(t->vertex(v));
        if (!is_dominator[v]) used[v] = 1;
      }
      cert.linking_paths.push_back(std::move(vpath));
      cert.linked_elements.emplace_back(i, j);
    }

    // Advance each ray to the tail after its last linking-path hit.
    for (const VertexList& prefix : rays.prefixes) {
      std::size_t start = 0;
      for (std::size_t idx = 0; idx < prefix.size(); ++idx) {
        int ti = t->index_of(prefix[idx]);
        bool on_path = false;
        for (const VertexList& p : cert.linking_paths) {
          if (std::find(p.begin(), p.end(), prefix[idx]) != p.end()) {
            on_path = true;
          }
        }
        (void)ti;
        if (on_path) start = idx + 1;
      }
      if (start >= prefix.size()) {
        throw BudgetExceeded("no tail left beyond the linking paths");
      }
      cert.rays.emplace_back(prefix.begin() + start, prefix.end());
    }

    cert.X = D;
    for (const VertexList& tail : cert.rays) cert.X.push_back(tail.front());
    std::sort(cert.X.begin(), cert.X.end());
    if (static_cast<int>(cert.X.size()) != k) {
      throw Error("certificate size mismatch");
    }
    return cert;
  }

  RaySystem find_rays(int count, int W) {
    auto t = std::make_shared<const Truncation>(truncate(g, W, budgets.budget));
    VertexList ball;
    for (int d = 0; d <= budgets.d_max + k; ++d) {
      for (Vertex v : g->vertices_at_level(d)) {
        if (!std::binary_search(D.begin(), D.end(), v)) ball.push_back(v);
      }
      if (static_cast<int>(ball.size()) < count) continue;
      CutResult cut = min_cut_to_terminal(t, ball, {}, D);
      if (!cut.infinite && cut.value >= count) {
        return disjoint_rays(g, ball, count, W, budgets, D);
      }
    }
    throw BudgetExceeded("could not find enough disjoint rays");
  }
};

}  // namespace

DeciderCertificate find_relative_decider(const FamilyPtr& g, int k,
                                         const Budgets& budgets) {
  if (k < 1) throw InvalidParam("decider size k must be >= 1");
  CohesionReport report = cohesion(g, budgets);
  Verdict at_least = deg_plus_dom_at_least(report, k);
  if (at_least == Verdict::kFalse) {
    throw InsufficientCohesion("deg + dom < k: no size-k decider exists");
  }
  if (at_least == Verdict::kInconclusive) {
    throw Inconclusive("cohesion bounds cannot certify deg + dom >= k");
  }
  const VertexList& witnesses = report.domination.witnesses;
  VertexList D(witnesses.begin(),
               witnesses.begin() +
                   std::min<std::size_t>(witnesses.size(), k));

  CertificateBuilder builder{g, k, D, budgets};
  for (int W = budgets.window; W <= budgets.window + 30; W += 5) {
    try {
      return builder.build(W);
    } catch (const BudgetExceeded&) {
      // retry with a deeper window
    }
  }
  throw BudgetExceeded("find_relative_decider: window retries exhausted");
}

std::vector<OrientedSeparation> enumerate_end_separations(
    const FamilyPtr& g, int k, int inner_level, int L, const Budgets& budgets) {
  if (L < inner_level + budgets.margin + 1) {
    throw HorizonTooSmall("enumeration window too small for inner level");
  }
  auto t = std::make_shared<Truncation>(truncate(g, L, budgets.budget));
  VertexList cand = vertices_up_to(*g, inner_level);
  const int n = static_cast<int>(cand.size());

  std::map<std::string, OrientedSeparation> dedup;
  long produced = 0;
  for (int size = 0; size < k; ++size) {
    for_each_combination(n, size, [&](const std::vector<int>& idx) {
      VertexList sep;
      for (int i : idx) sep.push_back(cand[i]);
      auto layout = std::make_shared<const ComponentsResult>(
          components_without(t, sep));
      int n_fin = 0;
      for (int ci = 0; ci < static_cast<int>(layout->components.size()); ++ci) {
        if (ci != layout->end_component) ++n_fin;
      }
      if (n_fin > 20) throw BudgetExceeded("too many finite components");
      for (unsigned mask = 0; mask < (1u << n_fin); ++mask) {
        unsigned bit = 0;
        std::map<Vertex, Side> side_by_rep;
        for (int ci = 0; ci < static_cast<int>(layout->components.size());
             ++ci) {
          if (ci == layout->end_component) continue;
          side_by_rep[layout->components[ci].representative] =
              (mask >> bit) & 1 ? Side::kA : Side::kB;
          ++bit;
        }
        SideChooser choose = [&](const Component& c) {
          return side_by_rep.at(c.representative);
        };
        OrientedSeparation s = orient_from_layout(g, layout, choose);
        if (++produced > budgets.budget) {
          throw BudgetExceeded("separation enumeration cap reached");
        }
        dedup.emplace(s.canonical_text(), std::move(s));
      }
    });
  }
  std::vector<OrientedSeparation> out;
  out.reserve(dedup.size());
  for (auto& [key, s] : dedup) out.push_back(std::move(s));
  return out;
}

OrientedSeparation reverse_orientation(const OrientedSeparation& s) {
  OrientedSeparation r = s;
  r.end_side = s.end_side == Side::kA ? Side::kB : Side::kA;
  for (SideAssignment& a : r.finite_components) {
    a.side = a.side == Side::kA ? Side::kB : Side::kA;
  }
  return r;
}

VerifyResult verify_decider(const FamilyPtr& g, const VertexList& X, int k,
                            int inner_level, int L, const Budgets& budgets) {
  VerifyResult res;
  int effective = inner_level;
  while (effective > 0) {
    int n = static_cast<int>(vertices_up_to(*g, effective).size());
    if (subset_count_below(n, k) <= static_cast<double>(budgets.budget)) break;
    --effective;
  }
  res.effective_inner_level = effective;
  VertexList sorted_x = X;
  std::sort(sorted_x.begin(), sorted_x.end());
  for (const OrientedSeparation& s :
       enumerate_end_separations(g, k, effective, L, budgets)) {
    VoteCounts votes =
        majority_counts(sorted_x, [&](Vertex v) { return s.side_of(v); });
    ++res.separations_checked;
    if (!(votes.a < votes.b)) {
      res.violations.push_back(s.canonical_text());
    }
  }
  res.ok = res.violations.empty();
  return res;
}

VertexList absolute_decider_window(const FamilyPtr& g, int inner_level,
                                   const Budgets& budgets) {
  VertexList out;
  for (Vertex v : vertices_up_to(*g, inner_level)) {
    DominationCheck check =
        dominates(g, v, budgets.window, budgets.threshold, budgets);
    if (check.verdict == Verdict::kTrue) out.push_back(v);
  }
  return out;
}

LinkCheck disjoint_link_paths(const DeciderCertificate& cert,
                              const VertexList& A, const VertexList& B) {
  LinkCheck res;
  const int need = static_cast<int>(std::min(A.size(), B.size()));
  if (need == 0) {
    res.ok = true;
    return res;
  }

  // Map an X vertex to its element index (D vertex or ray tail start).
  auto element_of = [&](Vertex x) -> int {
    auto dit = std::lower_bound(cert.D.begin(), cert.D.end(), x);
    if (dit != cert.D.end() && *dit == x) {
      return static_cast<int>(dit - cert.D.begin());
    }
    for (std::size_t i = 0; i < cert.rays.size(); ++i) {
      if (cert.rays[i].front() == x) {
        return static_cast<int>(cert.D.size() + i);
      }
    }
    return -1;
  };

  // Extends the stored linking path for the element pair along the rays up
  // to the tail-start vertices.
  auto extended_path = [&](Vertex a, Vertex b) -> VertexList {
    int ea = element_of(a), eb = element_of(b);
    if (ea < 0 || eb < 0) return {};
    int lo = std::min(ea, eb), hi = std::max(ea, eb);
    for (std::size_t p = 0; p < cert.linked_elements.size(); ++p) {
      if (cert.linked_elements[p] != std::make_pair(lo, hi)) continue;
      VertexList path = cert.linking_paths[p];
      auto attach_segment = [&](Vertex x, int elem, Vertex attach) {
        // Ray segment from the attach vertex to the tail start.
        VertexList seg;
        if (elem < static_cast<int>(cert.D.size())) return seg;
        const VertexList& full =
            cert.full_rays[elem - static_cast<int>(cert.D.size())];
        auto ia = std::find(full.begin(), full.end(), attach);
        auto ix = std::find(full.begin(), full.end(), x);
        if (ia == full.end() || ix == full.end()) return seg;
        if (ia <= ix) {
          seg.assign(ia, ix + 1);
        } else {
          seg.assign(ix, ia + 1);
          std::reverse(seg.begin(), seg.end());
        }
        std::reverse(seg.begin(), seg.end());  // x ... attach
        return seg;
      };
      // Orient the stored path from ea's side to eb's side.
      auto on_element = [&](Vertex v, int elem) {
        if (elem < static_cast<int>(cert.D.size())) return cert.D[elem] == v;
        const VertexList& full =
            cert.full_rays[elem - static_cast<int>(cert.D.size())];
        return std::find(full.begin(), full.end(), v) != full.end();
      };
      if (!on_element(path.front(), ea)) std::reverse(path.begin(), path.end());
      if (!on_element(path.front(), ea) || !on_element(path.back(), eb)) {
        return {};
      }
      VertexList out = attach_segment(a, ea, path.front());
      if (out.empty()) out.push_back(a);
      out.insert(out.end(), path.begin() + (out.back() == path.front() ? 1 : 0),
                 path.end());
      VertexList segb = attach_segment(b, eb, path.back());
      if (!segb.empty()) {
        std::reverse(segb.begin(), segb.end());  // attach ... b
        out.insert(out.end(), segb.begin() + 1, segb.end());
      }
      return out;
    }
    return {};
  };

  // Union graph of all extended A-B paths.
  std::map<Vertex, int> index;
  std::vector<Vertex> nodes;
  std::vector<std::pair<int, int>> edges;
  auto node_id = [&](Vertex v) {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    index[v] = id;
    nodes.push_back(v);
    return id;
  };
  for (Vertex a : A) {
    for (Vertex b : B) {
      if (a == b) continue;
      VertexList path = extended_path(a, b);
      if (path.empty()) {
        res.failure = "no linking path for a sampled pair";
        return res;
      }
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        edges.emplace_back(node_id(path[i]), node_id(path[i + 1]));
      }
    }
  }
  const int n = static_cast<int>(nodes.size());
  const int sink = n;
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> sources;
  for (Vertex a : A) sources.push_back(index.at(a));
  for (Vertex b : B) {
    adj[index.at(b)].push_back(sink);
    adj[sink].push_back(index.at(b));
  }
  for (auto& l : adj) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  NodeCutResult cut = min_vertex_cut(n + 1, adj, sources, sink, {});
  if (cut.value < need) {
    res.failure = "fewer disjoint paths than min(|A|,|B|)";
    return res;
  }

  std::unordered_set<std::string> forbidden_internal;
  auto key = [](Vertex v) {
    return std::to_string(v.a) + ":" + std::to_string(v.b);
  };
  for (Vertex x : cert.X) forbidden_internal.insert(key(x));
  for (const VertexList& tail : cert.rays) {
    for (Vertex v : tail) forbidden_internal.insert(key(v));
  }
  for (int p = 0; p < need; ++p) {
    VertexList path;
    for (int idx : cut.paths[p]) {
      if (idx != sink) path.push_back(nodes[idx]);
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (forbidden_internal.count(key(path[i]))) {
        res.failure = "internal vertex hits X or a ray tail";
        return res;
      }
    }
    res.paths.push_back(std::move(path));
  }
  res.ok = true;
  return res;
}

}  // namespace endtangle
