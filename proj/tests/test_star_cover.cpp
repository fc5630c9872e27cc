#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "generators.hpp"
#include "reduction.hpp"
#include "star_cover.hpp"
#include "test_util.hpp"

using namespace loadcol;

TEST_CASE("initial cover of a single edge") {
  Graph g = gen_matching(1);
  StarCover s = initial_cover(g);
  REQUIRE(s.stars.size() == 1);
  CHECK(s.stars.count(0));
  CHECK(s.stars.at(0) == std::vector<int>{1});
  CHECK(check_cover(g, s));
}

TEST_CASE("initial cover of a path") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  StarCover s = initial_cover(g);
  std::string why;
  CHECK_MESSAGE(check_cover(g, s, &why), why);
}

TEST_CASE("initial cover of a star is the star itself") {
  Graph g = gen_star_forest({5});
  StarCover s = initial_cover(g);
  REQUIRE(s.stars.size() == 1);
  CHECK(s.stars.at(0).size() == 5);
  CHECK(s.max_star_size() == 5);
  auto profile = s.degree_profile();
  CHECK(profile.at(5) == 1);
}

TEST_CASE("initial cover rejects isolated vertices") {
  CHECK_THROWS(initial_cover(Graph(2, {{0, 1}}).disjoint_union(Graph(1, {}))));
}

TEST_CASE("cover checker catches malformed covers") {
  Graph g = gen_matching(2);
  StarCover bad;
  bad.stars[0] = {1};
  CHECK(!check_cover(g, bad));  // vertices 2,3 uncovered
  StarCover fake;
  fake.stars[0] = {1};
  fake.stars[2] = {3};
  CHECK(check_cover(g, fake));
  StarCover nonedge;
  nonedge.stars[0] = {3};
  nonedge.stars[1] = {2};
  CHECK(!check_cover(g, nonedge));  // 0-3 is not an edge
  StarCover wrong_center;
  wrong_center.stars[1] = {0};
  wrong_center.stars[2] = {3};
  CHECK(!check_cover(g, wrong_center));  // two-vertex star must center the lower id
}

TEST_CASE("a lone big star becomes a witness") {
  Graph g = gen_star_forest({5});
  RefineResult r = refine_cover(g, initial_cover(g), 3, 1);
  REQUIRE(r.kind == RefineResult::Kind::Witness);
  CHECK(r.witness.centers == std::vector<int>{0});
  CHECK(check_obstacle(g, r.witness, 3));
}

TEST_CASE("small stars already form a cover") {
  Graph g = gen_matching(2);
  RefineResult r = refine_cover(g, initial_cover(g), 2, 2);
  REQUIRE(r.kind == RefineResult::Kind::Cover);
  CHECK(r.cover.max_star_size() <= 3);
}

TEST_CASE("double star refines to a valid outcome") {
  // centers 0 and 5 adjacent, 0 with 4 leaves, 5 with 1 leaf
  Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {5, 6}});
  // reduced for c=1 at k=4? it has obstacles; use as precondition-satisfying
  // input only at (k=4, c=1) after reduce confirms no rule with i < 1 fires.
  auto [red, trace] = reduce({g, 1, 4});
  REQUIRE(red.graph == g);
  RefineResult r = refine_cover(g, initial_cover(g), 4, 1);
  if (r.kind == RefineResult::Kind::Cover) {
    CHECK(r.cover.max_star_size() <= 4);
    CHECK(check_cover(g, r.cover));
  } else {
    CHECK(static_cast<int>(r.witness.centers.size()) >= 1);
    CHECK(check_obstacle(g, r.witness, 4));
  }
}

TEST_CASE("refinement on reduced random graphs") {
  std::mt19937_64 rng(41);
  int covers = 0, witnesses = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int c;
    int k = 2 + static_cast<int>(rng() % 3);
    Graph g0;
    if (trial % 3 == 0) {
      // star forests at c = 1 exercise the witness exit
      std::vector<int> sizes;
      for (int s = 0; s < 1 + static_cast<int>(rng() % 3); ++s)
        sizes.push_back(2 + static_cast<int>(rng() % (2 * k)));
      g0 = gen_star_forest(sizes);
      c = 1;
    } else {
      g0 = testutil::random_graph(rng, 6 + static_cast<int>(rng() % 9), 0.25);
      c = 2 + static_cast<int>(rng() % 2);
    }
    auto [red, trace] = reduce({g0, c, k});
    const Graph& g = red.graph;
    if (g.num_vertices() == 0) continue;
    RefineResult r = refine_cover(g, initial_cover(g), red.k, red.colors);
    long long cap = static_cast<long long>(g.num_vertices()) * std::max(1, g.max_degree());
    CHECK(r.moves <= cap);
    if (r.kind == RefineResult::Kind::Cover) {
      ++covers;
      std::string why;
      CHECK_MESSAGE(check_cover(g, r.cover, &why), why);
      CHECK(r.cover.max_star_size() <= std::max(3, red.k));
    } else {
      ++witnesses;
      CHECK(static_cast<int>(r.witness.centers.size()) >= red.colors);
      std::string why;
      CHECK_MESSAGE(check_obstacle(g, r.witness, red.k, &why), why);
      for (const auto& [u, vu] : r.witness.assignment)
        CHECK(static_cast<int>(vu.size()) >= red.k);
    }
  }
  // both exits must actually be exercised by the sweep
  CHECK(covers > 0);
  CHECK(witnesses > 0);
}

TEST_CASE("witness stars reach the size floor") {
  // K_{1,6} with c=1: dominated by one center of degree 6 >= k
  Graph g = gen_star_forest({6});
  RefineResult r = refine_cover(g, initial_cover(g), 4, 1);
  REQUIRE(r.kind == RefineResult::Kind::Witness);
  CHECK(r.witness.assignment.at(0).size() >= 4);
}

TEST_CASE("unreduced input raises the dedicated error") {
  // K_{1,5} at c=2, k=2 is not reduced (the star is an O_{1,2} obstacle), so
  // refinement can only surface an undersized witness.
  Graph g = gen_star_forest({5});
  CHECK_THROWS_AS(refine_cover(g, initial_cover(g), 2, 2), NotReducedError);
  try {
    refine_cover(g, initial_cover(g), 2, 2);
  } catch (const NotReducedError& e) {
    CHECK(check_obstacle(g, e.obstacle, 2));
  }
}
