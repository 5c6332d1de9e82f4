#include <algorithm>

#include "doctest.h"

#include "endtangle/end_invariants.hpp"
#include "endtangle/errors.hpp"
#include "endtangle/truncation.hpp"

using namespace endtangle;

TEST_CASE("apex of dominated_ray dominates via frontier adjacency") {
  FamilyPtr g = make_family("dominated_ray", {{"m", 2}});
  DominationCheck c = dominates(g, {1, 0}, 12, 8);
  CHECK(c.verdict == Verdict::kTrue);
  CHECK(c.certificate_kind == "frontier-at-every-level");
}

TEST_CASE("ray vertices do not dominate; certificate is checkable") {
  FamilyPtr g = make_family("ray");
  DominationCheck c = dominates(g, {0, 0}, 12, 8);
  CHECK(c.verdict == Verdict::kFalse);
  CHECK(c.certificate_kind == "finite-separator");
  CHECK(c.separator == VertexList{{1, 0}});
  // independent check: the separator puts v_0 in a finite component
  ComponentsResult r = components_without(g, c.separator, 10);
  int idx = r.truncation->index_of({0, 0});
  const Component& comp = r.components[r.component_of[idx]];
  CHECK(comp.label == ComponentLabel::kFinite);
}

TEST_CASE("every vertex of the complete graph dominates") {
  FamilyPtr g = make_family("complete");
  DominationCheck c = dominates(g, {5, 0}, 12, 8);
  CHECK(c.verdict == Verdict::kTrue);
}

TEST_CASE("non-dominating certificates verify across families") {
  for (const char* name : {"ladder", "grid"}) {
    FamilyPtr g = name == std::string("ladder")
                      ? make_family("ladder", {{"m", 3}})
                      : make_family(name);
    for (Vertex v : g->vertices_at_level(1)) {
      DominationCheck c = dominates(g, v, 14, 8);
      REQUIRE(c.verdict == Verdict::kFalse);
      ComponentsResult r =
          components_without(g, c.separator, max_level(*g, c.separator) + 4);
      int idx = r.truncation->index_of(v);
      CHECK(r.components[r.component_of[idx]].label == ComponentLabel::kFinite);
    }
  }
}

TEST_CASE("domination counts") {
  SUBCASE("ray: exact zero") {
    DominationCount c = domination_count(make_family("ray"), 6, 12, 8);
    CHECK(c.kind == BoundKind::kExact);
    CHECK(c.value == 0);
  }
  SUBCASE("dominated_ray(3): exactly the three apexes") {
    FamilyPtr g = make_family("dominated_ray", {{"m", 3}});
    DominationCount c = domination_count(g, 6, 12, 8);
    CHECK(c.kind == BoundKind::kExact);
    CHECK(c.value == 3);
    CHECK(c.witnesses == VertexList{{1, 0}, {1, 1}, {1, 2}});
  }
  SUBCASE("complete: infinite flag with at least 8 witnesses") {
    DominationCount c = domination_count(make_family("complete"), 6, 12, 8);
    CHECK(c.kind == BoundKind::kInfinite);
    CHECK(c.value >= 8);
  }
}

TEST_CASE("degree estimates") {
  SUBCASE("ray: exact 1") {
    DegreeEstimate e = degree_estimate(make_family("ray"), 8, 16, 3, {});
    CHECK(e.kind == BoundKind::kExact);
    CHECK(e.value == 1);
  }
  SUBCASE("ladder(4): exact 4 with a width certificate") {
    FamilyPtr g = make_family("ladder", {{"m", 4}});
    DegreeEstimate e = degree_estimate(g, 8, 16, 3, {});
    CHECK(e.kind == BoundKind::kExact);
    CHECK(e.value == 4);
    CHECK(e.certificate.find("width bound 4") != std::string::npos);
  }
  SUBCASE("grid: infinite flag, s_d = 2d+1") {
    DegreeEstimate e = degree_estimate(make_family("grid"), 8, 16, 3, {});
    CHECK(e.kind == BoundKind::kInfinite);
    REQUIRE(e.series.size() == 9);
    for (int d = 0; d <= 8; ++d) CHECK(e.series[d] == 2 * d + 1);
  }
  SUBCASE("s_d is non-decreasing on every run") {
    for (const char* name : {"ray", "grid", "clique_ray"}) {
      DegreeEstimate e = degree_estimate(make_family(name), 6, 14, 3, {});
      for (std::size_t i = 1; i < e.series.size(); ++i) {
        CHECK(e.series[i] >= e.series[i - 1]);
      }
    }
  }
}

TEST_CASE("cohesion categories across the built-in families") {
  CHECK(cohesion(make_family("ray")).category == CohesionCategory::kBounded);
  CHECK(cohesion(make_family("ray")).bounded_value == 2);
  CHECK(cohesion(make_family("grid")).category ==
        CohesionCategory::kUnbounded);
  CHECK(cohesion(make_family("clique_ray")).category ==
        CohesionCategory::kUnbounded);
  CHECK(cohesion(make_family("complete")).category ==
        CohesionCategory::kInfinite);
  CohesionReport dr = cohesion(make_family("dominated_ray", {{"m", 2}}));
  CHECK(dr.category == CohesionCategory::kBounded);
  CHECK(dr.bounded_value == 4);
  for (int m = 2; m <= 4; ++m) {
    CohesionReport lr = cohesion(make_family("ladder", {{"m", m}}));
    CHECK(lr.category == CohesionCategory::kBounded);
    CHECK(lr.bounded_value == m + 1);
  }
}

TEST_CASE("reports agree with the declared family annotations") {
  std::vector<FamilyPtr> families{
      make_family("ray"),           make_family("ladder", {{"m", 2}}),
      make_family("ladder", {{"m", 5}}), make_family("grid"),
      make_family("clique_ray"),    make_family("dominated_ray", {{"m", 1}}),
      make_family("dominated_ray", {{"m", 3}}), make_family("complete")};
  for (const FamilyPtr& g : families) {
    CAPTURE(g->name());
    const FamilyAnnotations& truth = g->annotations();
    CohesionReport r = cohesion(g);
    if (truth.domination_infinite) {
      CHECK(r.domination.kind == BoundKind::kInfinite);
      continue;
    }
    REQUIRE(r.domination.kind == BoundKind::kExact);
    CHECK(r.domination.value == *truth.domination);
    if (truth.degree_infinite) {
      CHECK(r.degree.kind == BoundKind::kInfinite);
    } else {
      REQUIRE(r.degree.kind == BoundKind::kExact);
      CHECK(r.degree.value == *truth.degree);
    }
  }
}

TEST_CASE("deg + dom comparisons") {
  CohesionReport ray = cohesion(make_family("ray"));
  CHECK(deg_plus_dom_at_least(ray, 1) == Verdict::kTrue);
  CHECK(deg_plus_dom_at_least(ray, 2) == Verdict::kFalse);
  CohesionReport grid = cohesion(make_family("grid"));
  for (int k = 1; k <= 20; ++k) {
    CHECK(deg_plus_dom_at_least(grid, k) == Verdict::kTrue);
  }
  CohesionReport dr = cohesion(make_family("dominated_ray", {{"m", 2}}));
  CHECK(deg_plus_dom_at_least(dr, 3) == Verdict::kTrue);
  CHECK(deg_plus_dom_at_least(dr, 4) == Verdict::kFalse);
}
