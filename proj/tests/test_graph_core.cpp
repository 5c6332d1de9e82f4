#include <algorithm>
#include <random>

#include "doctest.h"

#include "endtangle/errors.hpp"
#include "endtangle/graph_family.hpp"
#include "endtangle/truncation.hpp"

using namespace endtangle;

namespace {

bool adjacent(const GraphFamily& g, Vertex u, Vertex v) {
  VertexList nb = g.neighbors_up_to(u, std::max(g.level(u), g.level(v)) + 1);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<FamilyPtr> all_families() {
  return {make_family("ray"),
          make_family("ladder", {{"m", 3}}),
          make_family("grid"),
          make_family("clique_ray"),
          make_family("dominated_ray", {{"m", 2}}),
          make_family("complete")};
}

}  // namespace

TEST_CASE("ray adjacency matches the single-ray picture") {
  FamilyPtr g = make_family("ray");
  CHECK(g->neighbors_up_to({3, 0}, 10) == VertexList{{2, 0}, {4, 0}});
  CHECK(g->level({7, 0}) == 7);
  CHECK(g->contains({0, 0}));
  CHECK_FALSE(g->contains({-1, 0}));
}

TEST_CASE("one-row ladder behaves like the ray") {
  FamilyPtr g = make_family("ladder", {{"m", 1}});
  for (int c = 1; c < 10; ++c) {
    VertexList nb = g->neighbors_up_to({c, 0}, 20);
    CHECK(nb == VertexList{{c - 1, 0}, {c + 1, 0}});
  }
  CHECK(g->vertices_at_level(4).size() == 1);
}

TEST_CASE("clique_ray blocks: n vertices, adjacent to blocks n-1, n, n+1") {
  FamilyPtr g = make_family("clique_ray");
  for (int n = 1; n <= 5; ++n) {
    CHECK(g->vertices_at_level(n - 1).size() == static_cast<std::size_t>(n));
  }
  Vertex v{3, 1};  // in block K^3
  VertexList nb = g->neighbors_up_to(v, 10);
  // everything in blocks 2, 3 (minus itself), 4
  CHECK(nb.size() == 2 + 2 + 4);
  for (Vertex u : nb) CHECK(u.a >= 2);
  for (Vertex u : nb) CHECK(u.a <= 4);
  CHECK(std::find(nb.begin(), nb.end(), v) == nb.end());
}

TEST_CASE("family construction errors") {
  CHECK_THROWS_AS(make_family("moebius"), UnknownFamily);
  CHECK_THROWS_AS(make_family("ladder", {{"m", 0}}), InvalidParam);
  CHECK_THROWS_AS(make_family("dominated_ray", {{"m", -1}}), InvalidParam);
  CHECK_THROWS_AS(make_family("ladder"), InvalidParam);
}

TEST_CASE("family spec text format") {
  FamilyPtr g = parse_family_spec("# fixture\nfamily=ladder\nparam.m=3\n");
  CHECK(g->name() == "ladder");
  CHECK(g->params().at("m") == 3);
  CHECK_THROWS_AS(parse_family_spec("param.m=3\n"), InvalidParam);
  CHECK_THROWS_AS(parse_family_spec("family=ray\nbogus line\n"), InvalidParam);
  CHECK_THROWS_AS(parse_family_spec("family=ray\nparam.m=two\n"), InvalidParam);
}

TEST_CASE("truncation of the ray at level 5") {
  Truncation t = truncate(make_family("ray"), 5);
  CHECK(t.size() == 6);
  CHECK(t.frontier() == VertexList{{5, 0}});
  // terminal adjacency: frontier only
  int terminal_degree = static_cast<int>(t.neighbors(t.terminal()).size());
  CHECK(terminal_degree == 1);
}

TEST_CASE("truncation of dominated_ray(2) at level 4: apexes stay frontier") {
  Truncation t = truncate(make_family("dominated_ray", {{"m", 2}}), 4);
  // apexes are adjacent to r_5 and beyond
  CHECK(t.frontier() == VertexList{{0, 4}, {1, 0}, {1, 1}});
}

TEST_CASE("truncation of the grid at level 2") {
  Truncation t = truncate(make_family("grid"), 2);
  CHECK(t.size() == 9);
  VertexList expected_frontier{{0, 2}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
  CHECK(t.frontier() == expected_frontier);
}

TEST_CASE("truncation vertex cap") {
  CHECK_THROWS_AS(truncate(make_family("grid"), 100, 50),
                  ResourceBudgetExceeded);
}

TEST_CASE("truncations are monotone in L") {
  for (const FamilyPtr& g : all_families()) {
    Truncation small = truncate(g, 4);
    Truncation big = truncate(g, 5);
    for (int i = 0; i < small.size(); ++i) {
      int j = big.index_of(small.vertex(i));
      REQUIRE(j >= 0);
      // induced adjacency agrees, terminal aside
      VertexList a, b;
      for (int u : small.neighbors(i)) {
        if (u != small.terminal()) a.push_back(small.vertex(u));
      }
      for (int u : big.neighbors(j)) {
        if (u != big.terminal() && g->level(big.vertex(u)) <= 4) {
          b.push_back(big.vertex(u));
        }
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("components of the ray minus v_3") {
  ComponentsResult r = components_without(make_family("ray"), {{3, 0}}, 8);
  REQUIRE(r.components.size() == 2);
  REQUIRE(r.end_component >= 0);
  const Component& end = r.components[r.end_component];
  const Component& fin = r.components[1 - r.end_component];
  CHECK(end.label == ComponentLabel::kContainsEnd);
  CHECK(fin.label == ComponentLabel::kFinite);
  CHECK(fin.representative == Vertex{0, 0});
  CHECK(fin.members.size() == 3);   // v_0, v_1, v_2
  CHECK(end.members.size() == 5);   // v_4 .. v_8
}

TEST_CASE("empty separator leaves one contains-end component") {
  ComponentsResult r = components_without(make_family("ray"), {}, 8);
  REQUIRE(r.components.size() == 1);
  CHECK(r.end_component == 0);
  CHECK(r.components[0].label == ComponentLabel::kContainsEnd);
}

TEST_CASE("grid corner cut isolates the origin") {
  ComponentsResult r = components_without(
      make_family("grid"), {{0, 1}, {1, 1}, {1, 0}}, 6);
  REQUIRE(r.components.size() == 2);
  const Component& fin = r.components[1 - r.end_component];
  CHECK(fin.label == ComponentLabel::kFinite);
  CHECK(fin.members.size() == 1);
  CHECK(fin.representative == Vertex{0, 0});
}

TEST_CASE("components_without rejects too-small horizons") {
  CHECK_THROWS_AS(components_without(make_family("ray"), {{3, 0}}, 3),
                  HorizonTooSmall);
}

TEST_CASE("canonical ray: unbounded levels, consecutive adjacency") {
  for (const FamilyPtr& g : all_families()) {
    int limit = g->name() == "complete" ? 500 : 10000;
    int prev_level = -1;
    for (int i = 0; i < limit; ++i) {
      Vertex v = g->canonical_ray(i);
      REQUIRE(g->contains(v));
      if (i > 0) {
        CHECK(adjacent(*g, g->canonical_ray(i - 1), v));
      }
      prev_level = std::max(prev_level, g->level(v));
    }
    CHECK(prev_level >= (g->name() == "complete" ? 499 : 9999));
  }
}

TEST_CASE("neighbor oracle is symmetric and sorted on samples") {
  std::mt19937 rng(7);
  for (const FamilyPtr& g : all_families()) {
    VertexList pool;
    for (int l = 0; l <= 6; ++l) {
      VertexList layer = g->vertices_at_level(l);
      pool.insert(pool.end(), layer.begin(), layer.end());
    }
    for (int trial = 0; trial < 50; ++trial) {
      Vertex v = pool[rng() % pool.size()];
      VertexList nb = g->neighbors_up_to(v, 8);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex u : nb) {
        REQUIRE(g->contains(u));
        CHECK(g->level(u) <= 8);
        VertexList back = g->neighbors_up_to(u, 8);
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
      }
    }
  }
}

TEST_CASE("escape property sampling: deep vertices reach the frontier") {
  std::mt19937 rng(11);
  for (const FamilyPtr& g : all_families()) {
    VertexList pool;
    for (int l = 0; l <= 6; ++l) {
      VertexList layer = g->vertices_at_level(l);
      pool.insert(pool.end(), layer.begin(), layer.end());
    }
    int samples = 0;
    while (samples < 100) {
      VertexList X;
      for (Vertex v : pool) {
        if (rng() % pool.size() < 3) X.push_back(v);
      }
      std::sort(X.begin(), X.end());
      int xl = max_level(*g, X);
      Vertex u = g->canonical_ray(xl + 1);  // one level past X
      if (std::binary_search(X.begin(), X.end(), u)) continue;
      ++samples;
      for (int L = xl + 2; L <= xl + 6; ++L) {
        auto t = std::make_shared<const Truncation>(truncate(g, L));
        ComponentsResult r = components_without(t, X);
        int idx = t->index_of(u);
        REQUIRE(idx >= 0);
        int comp = r.component_of[idx];
        REQUIRE(comp >= 0);
        bool touches_frontier = false;
        for (int member : r.components[comp].members) {
          touches_frontier = touches_frontier || t->is_frontier(member);
        }
        CHECK(touches_frontier);
      }
    }
  }
}

TEST_CASE("component labels are stable under window growth") {
  for (const FamilyPtr& g : all_families()) {
    VertexList X;
    for (Vertex v : g->vertices_at_level(2)) X.push_back(v);
    std::sort(X.begin(), X.end());
    ComponentsResult small = components_without(g, X, 6);
    ComponentsResult big = components_without(g, X, 9);
    for (std::size_t i = 0; i < small.components.size(); ++i) {
      const Component& c = small.components[i];
      if (c.label != ComponentLabel::kFinite) continue;
      // same representative still labels a finite component
      bool found = false;
      for (const Component& d : big.components) {
        if (d.representative == c.representative) {
          CHECK(d.label == ComponentLabel::kFinite);
          CHECK(d.members.size() == c.members.size());
          found = true;
        }
      }
      CHECK(found);
    }
    REQUIRE(small.end_component >= 0);
    REQUIRE(big.end_component >= 0);
    CHECK(small.components[small.end_component].representative ==
          big.components[big.end_component].representative);
  }
}
