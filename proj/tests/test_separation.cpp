#include <random>

#include "doctest.h"

#include "endtangle/deciders.hpp"
#include "endtangle/errors.hpp"
#include "endtangle/separation.hpp"

using namespace endtangle;

namespace {

// ({v_0..v_n}, {v_n, v_{n+1}, ...}) on the ray.
OrientedSeparation ray_prefix_sep(const FamilyPtr& ray, int n, int L = 12) {
  return orient_toward_end(ray, {{n, 0}}, all_to_a, L);
}

}  // namespace

TEST_CASE("orienting the ray at v_3 with the left part on A") {
  FamilyPtr ray = make_family("ray");
  OrientedSeparation s = ray_prefix_sep(ray, 3, 8);
  CHECK(s.order() == 1);
  CHECK(s.in_tau());
  CHECK(s.side_of({0, 0}) == Membership::kAOnly);
  CHECK(s.side_of({3, 0}) == Membership::kBoth);
  CHECK(s.side_of({5, 0}) == Membership::kBOnly);
  CHECK(s.side_of({100, 0}) == Membership::kBOnly);  // beyond the window
  CHECK(s.canonical_text() == "sep=[v3];A=[v0];end=B");
}

TEST_CASE("the empty separator gives (emptyset, V)") {
  FamilyPtr ray = make_family("ray");
  OrientedSeparation s = orient_toward_end(ray, {}, all_to_a, 8);
  CHECK(s.order() == 0);
  CHECK(s.in_tau());
  CHECK(s.side_of({0, 0}) == Membership::kBOnly);
  CHECK(s.canonical_text() == "sep=[];A=[];end=B");
}

TEST_CASE("left component may go to B: ({v_2}, V)") {
  FamilyPtr ray = make_family("ray");
  OrientedSeparation s = orient_toward_end(ray, {{2, 0}}, all_to_b, 8);
  CHECK(s.side_of({0, 0}) == Membership::kBOnly);
  CHECK(s.side_of({2, 0}) == Membership::kBoth);
  CHECK(s.side_of({4, 0}) == Membership::kBOnly);
}

TEST_CASE("orientation build honors the window margin") {
  FamilyPtr ray = make_family("ray");
  CHECK_THROWS_AS(orient_toward_end(ray, {{6, 0}}, all_to_a, 7), HorizonTooSmall);
}

TEST_CASE("restriction to finite Z") {
  FamilyPtr ray = make_family("ray");
  OrientedSeparation s = ray_prefix_sep(ray, 3, 8);
  SUBCASE("plain membership") {
    RestrictionOnZ r = restrict_to(s, {{1, 0}, {5, 0}});
    CHECK(r.a_part == VertexList{{1, 0}});
    CHECK(r.b_part == VertexList{{5, 0}});
  }
  SUBCASE("separator vertex lands on both sides") {
    RestrictionOnZ r = restrict_to(s, {{3, 0}});
    CHECK(r.a_part == VertexList{{3, 0}});
    CHECK(r.b_part == VertexList{{3, 0}});
  }
  SUBCASE("empty A part for (emptyset, V)") {
    OrientedSeparation e = orient_toward_end(ray, {}, all_to_a, 8);
    RestrictionOnZ r = restrict_to(e, {{0, 0}, {1, 0}});
    CHECK(r.a_part.empty());
    CHECK(r.b_part == VertexList{{0, 0}, {1, 0}});
  }
  SUBCASE("Z beyond the window is rejected") {
    CHECK_THROWS_AS(restrict_to(s, {{9, 0}}), WindowTooSmall);
  }
}

TEST_CASE("agreement on Z") {
  FamilyPtr ray = make_family("ray");
  OrientedSeparation all_a = limit_shape(ray, {}, 8);  // (V, emptyset) shape
  OrientedSeparation s = ray_prefix_sep(ray, 3, 8);
  CHECK(agree_on(all_a, s, {{0, 0}, {1, 0}, {2, 0}}));
  CHECK_FALSE(agree_on(all_a, s, {{0, 0}, {3, 0}}));
  CHECK(agree_on(s, s, {{0, 0}, {4, 0}, {7, 0}}));
}

TEST_CASE("basis property: agreement on a union of Z's") {
  FamilyPtr ray = make_family("ray");
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    OrientedSeparation s = ray_prefix_sep(ray, 1 + static_cast<int>(rng() % 5));
    OrientedSeparation t = ray_prefix_sep(ray, 1 + static_cast<int>(rng() % 5));
    VertexList z1, z2;
    for (int i = 0; i < 8; ++i) {
      if (rng() % 2) z1.push_back({i, 0});
      if (rng() % 2) z2.push_back({i, 0});
    }
    VertexList both = z1;
    both.insert(both.end(), z2.begin(), z2.end());
    bool separately = agree_on(s, t, z1) && agree_on(s, t, z2);
    CHECK(separately == agree_on(s, t, both));
  }
}

TEST_CASE("expansion preserves the separation") {
  FamilyPtr ray = make_family("ray");
  OrientedSeparation s = ray_prefix_sep(ray, 3, 8);
  OrientedSeparation big = s.expand(14);
  CHECK(big.window == 14);
  CHECK(same_separation(s, big));
  CHECK(big.side_of({10, 0}) == Membership::kBOnly);
  CHECK(big.side_of({0, 0}) == Membership::kAOnly);
  CHECK_THROWS_AS(s.expand(6), WindowTooSmall);
}

TEST_CASE("corner of nested ray separations is the larger one") {
  FamilyPtr ray = make_family("ray");
  OrientedSeparation s3 = ray_prefix_sep(ray, 3);
  OrientedSeparation s5 = ray_prefix_sep(ray, 5);
  OrientedSeparation c = corner(s3, s5);
  CHECK(same_separation(c, s5));
}

TEST_CASE("corner with a B-heavy separation") {
  FamilyPtr ray = make_family("ray");
  OrientedSeparation s2 = orient_toward_end(ray, {{2, 0}}, all_to_b, 12);
  OrientedSeparation s3 = ray_prefix_sep(ray, 3);
  OrientedSeparation c = corner(s2, s3);
  CHECK(same_separation(c, s3));
}

TEST_CASE("(emptyset, V) is neutral for corner") {
  FamilyPtr ray = make_family("ray");
  OrientedSeparation s = ray_prefix_sep(ray, 4);
  OrientedSeparation e = orient_toward_end(ray, {}, all_to_a, 12);
  CHECK(same_separation(corner(s, e), s));
  CHECK(same_separation(corner(e, s), s));
}

TEST_CASE("corner order bound and orientation on random pairs") {
  std::mt19937 rng(5);
  for (const char* name : {"ladder", "grid"}) {
    FamilyPtr g = name == std::string("ladder")
                      ? make_family("ladder", {{"m", 3}})
                      : make_family(name);
    auto seps = enumerate_end_separations(g, 3, 2, 10);
    for (int trial = 0; trial < 30; ++trial) {
      const OrientedSeparation& s1 = seps[rng() % seps.size()];
      const OrientedSeparation& s2 = seps[rng() % seps.size()];
      OrientedSeparation c = corner(s1, s2);
      CHECK(c.in_tau());
      CHECK(c.order() <= s1.order() + s2.order());
    }
  }
}

TEST_CASE("orientation totality: exactly one direction points to the end") {
  FamilyPtr g = make_family("ladder", {{"m", 2}});
  for (const OrientedSeparation& s : enumerate_end_separations(g, 3, 2, 10)) {
    CHECK(s.in_tau());
    CHECK_FALSE(reverse_orientation(s).in_tau());
  }
}

TEST_CASE("no (V, B)-form separation passes in_tau") {
  FamilyPtr ray = make_family("ray");
  OrientedSeparation shape = limit_shape(ray, {{3, 0}}, 10);
  CHECK_FALSE(shape.in_tau());
  CHECK(shape.side_of({8, 0}) == Membership::kAOnly);  // end on the A side
}

TEST_CASE("triple witness beyond the separators") {
  FamilyPtr ray = make_family("ray");
  SUBCASE("separators within v_0..v_5") {
    OrientedSeparation s1 = ray_prefix_sep(ray, 2);
    OrientedSeparation s2 = ray_prefix_sep(ray, 5);
    OrientedSeparation s3 = ray_prefix_sep(ray, 4);
    TripleWitness w = tangle_triple_witness(ray, s1, s2, s3);
    CHECK(w.u == Vertex{6, 0});
    CHECK(w.v == Vertex{7, 0});
    CHECK(w.endpoints_in_big_sides);
  }
  SUBCASE("all-empty separations witness at the ray start") {
    OrientedSeparation e = orient_toward_end(ray, {}, all_to_a, 8);
    TripleWitness w = tangle_triple_witness(ray, e, e, e);
    CHECK(w.u == Vertex{0, 0});
    CHECK(w.v == Vertex{1, 0});
    CHECK(w.endpoints_in_big_sides);
  }
  SUBCASE("grid witness lies beyond level 3") {
    FamilyPtr grid = make_family("grid");
    OrientedSeparation s =
        orient_toward_end(grid, {{0, 1}, {1, 1}, {1, 0}}, all_to_a, 10);
    OrientedSeparation s2 =
        orient_toward_end(grid, {{3, 3}, {3, 2}}, all_to_a, 10);
    TripleWitness w = tangle_triple_witness(grid, s, s2, s2);
    CHECK(grid->level(w.u) >= 4);
    CHECK(w.endpoints_in_big_sides);
  }
}
