#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bounds.hpp"
#include "exact.hpp"
#include "generators.hpp"
#include "pipeline.hpp"
#include "test_util.hpp"

using namespace loadcol;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("zero threshold is always yes") {
  Outcome out = kernelize({gen_clique(3), 4, 0});
  CHECK(out.verdict == Verdict::Yes);
  CHECK(verify_coloring({gen_clique(3), 4, 0}, out.coloring).valid);
}

TEST_CASE("threshold one reduces to matching") {
  Outcome yes = kernelize({gen_matching(3), 3, 1});
  CHECK(yes.verdict == Verdict::Yes);
  CHECK(verify_coloring({gen_matching(3), 3, 1}, yes.coloring).valid);

  Outcome no = kernelize({gen_star_forest({6}), 2, 1});
  CHECK(no.verdict == Verdict::No);
}

TEST_CASE("a perfect matching of 2ck vertices is yes via the cover stage") {
  Graph g = gen_matching(4);  // n = 8 = 2ck for c=2, k=2
  Outcome out = kernelize({g, 2, 2});
  CHECK(out.verdict == Verdict::Yes);
  CHECK(verify_coloring({g, 2, 2}, out.coloring).valid);
}

TEST_CASE("two stars reduce and resolve at one color") {
  Graph g = gen_star_forest({3, 3});
  Instance inst{g, 2, 3};
  Outcome out = kernelize(inst);
  CHECK(out.verdict == Verdict::Yes);
  CHECK(verify_coloring(inst, out.coloring).valid);
  CHECK(out.trace.steps.size() >= 1);
}

TEST_CASE("the 4-cycle survives as a kernel") {
  Outcome out = kernelize({cycle(4), 2, 2});
  REQUIRE(out.verdict == Verdict::Kernel);
  CHECK(out.kernel.graph == cycle(4));
  CHECK(out.kernel.colors == 2);
  CHECK(out.kernel.graph.num_vertices() < 2 * out.kernel.colors * out.kernel.k);
  CHECK(out.kernel.graph.num_edges() < 8u * out.kernel.k);
  CHECK(out.trace.steps.empty());
}

TEST_CASE("decide settles the 4-cycle both ways") {
  CHECK(decide({cycle(4), 2, 2}).verdict == Verdict::No);
  Outcome yes = decide({cycle(4), 2, 1});
  CHECK(yes.verdict == Verdict::Yes);
  CHECK(verify_coloring({cycle(4), 2, 1}, yes.coloring).valid);
  CHECK(decide({cycle(4), 5, 0}).verdict == Verdict::Yes);
}

TEST_CASE("decide propagates budget exhaustion") {
  Graph g = cycle(5);
  Outcome out = decide({g, 2, 2}, 1);
  CHECK(out.verdict == Verdict::Budget);
}

TEST_CASE("kernel size bounds over random instances") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    int c = 2 + static_cast<int>(rng() % 2);
    int k = 2 + static_cast<int>(rng() % 3);
    int n = 6 + static_cast<int>(rng() % 20);
    Graph g = testutil::random_graph(rng, n, 0.05 + 0.3 * (rng() % 4));
    Instance inst{g, c, k};
    Outcome out = kernelize(inst);
    if (out.verdict == Verdict::Yes) {
      CHECK(verify_coloring(inst, out.coloring).valid);
    } else {
      REQUIRE(out.verdict == Verdict::Kernel);
      const Instance& ker = out.kernel;
      CHECK(ker.graph.num_vertices() < 2 * ker.colors * ker.k);
      if (ker.colors == 2) CHECK(ker.graph.num_edges() < 8u * ker.k);
      CHECK(static_cast<long long>(ker.graph.num_edges()) <
            f_bound(next_pow2(ker.colors), ker.k, ker.graph.num_vertices()));
      CHECK(replay_trace(g, out.trace) == ker.graph);
    }
  }
}

TEST_CASE("decide agrees with the oracle on all small graphs") {
  for (const Graph& g : testutil::all_graphs_up_to(5)) {
    for (int c = 2; c <= 3; ++c) {
      for (int k = 0; k <= 3; ++k) {
        Instance inst{g, c, k};
        Outcome got = decide(inst);
        auto want = decide_exact(inst);
        REQUIRE(want.status != ExactStatus::BudgetExceeded);
        REQUIRE(got.verdict != Verdict::Budget);
        CHECK((got.verdict == Verdict::Yes) == (want.status == ExactStatus::Yes));
        if (got.verdict == Verdict::Yes)
          CHECK(verify_coloring(inst, got.coloring).valid);
      }
    }
  }
}

TEST_CASE("single color approximation is exact") {
  Graph g = gen_clique(5);
  ApproxResult r = approx_general(g, 1);
  CHECK(!r.budget_exceeded);
  CHECK(r.k == 10);
  CHECK(r.exact);
  CHECK(verify_coloring({g, 1, 10}, r.coloring).valid);
}

TEST_CASE("sparse instances fall through to the exact base case") {
  Graph g = gen_matching(40);  // m = 40 < 52 = K(2)
  ApproxResult r = approx_general(g, 2);
  REQUIRE(!r.budget_exceeded);
  CHECK(r.k == 20);
  CHECK(r.exact);
  CHECK(verify_coloring({g, 2, 20}, r.coloring).valid);
}

TEST_CASE("general approximation returns verified certificates") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 8 + static_cast<int>(rng() % 20);
    Graph g = testutil::random_graph(rng, n, 0.2 + 0.2 * (rng() % 4));
    for (int c = 2; c <= 3; ++c) {
      ApproxResult r = approx_general(g, c);
      if (r.budget_exceeded) continue;
      CHECK(verify_coloring({g, c, static_cast<int>(r.k)}, r.coloring).valid);
    }
  }
}

TEST_CASE("general approximation respects its guarantee at desk scale") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testutil::random_graph(rng, 9, 0.4);
    ApproxResult r = approx_general(g, 2);
    REQUIRE(!r.budget_exceeded);
    auto opt = max_k_exact(g, 2);
    REQUIRE(!opt.budget_exceeded);
    CHECK(opt.k_opt <= approx_guarantee(2) * std::max<long long>(r.k, opt.k_opt > 0 ? 1 : 0));
    if (opt.k_opt > 0) CHECK(r.k >= 1);
    if (r.exact) CHECK(r.k == opt.k_opt);
  }
}

TEST_CASE("two-color approximation solves small inputs exactly") {
  // epsilon = 1 -> p0 = 3; anything with m <= 23 is exact
  Graph g = gen_gnp(9, 0.4, 5);
  REQUIRE(g.num_edges() <= 23);
  ApproxResult r = approx_two(g, 1.0);
  REQUIRE(!r.budget_exceeded);
  CHECK(r.exact);
  auto opt = max_k_exact(g, 2);
  CHECK(r.k == opt.k_opt);
  CHECK(verify_coloring({g, 2, static_cast<int>(r.k)}, r.coloring).valid);
}

TEST_CASE("two-color approximation emits m/8 on dense reduced inputs") {
  Graph g = gen_gnp(40, 0.15, 9);
  ApproxResult r = approx_two(g, 1.0);
  REQUIRE(!r.budget_exceeded);
  CHECK(verify_coloring({g, 2, static_cast<int>(r.k)}, r.coloring).valid);
  if (!r.exact) CHECK(r.k == static_cast<long long>(g.num_edges()) / 8);
}

TEST_CASE("two-color approximation detects a dominant star exactly") {
  // K_{1,40} plus two disjoint edges: after reduction only 2 edges remain,
  // which equals the optimum.
  Graph g = gen_star_forest({40}).disjoint_union(gen_matching(2));
  ApproxResult r = approx_two(g, 1.0);
  REQUIRE(!r.budget_exceeded);
  CHECK(r.k == 2);
  CHECK(r.exact);
  CHECK(verify_coloring({g, 2, 2}, r.coloring).valid);
  // the raw oracle cannot enumerate a 41-vertex star; the kernelization
  // pipeline settles both thresholds in polynomial time instead
  CHECK(decide({g, 2, 2}).verdict == Verdict::Yes);
  CHECK(decide({g, 2, 3}).verdict == Verdict::No);
}

TEST_CASE("two-color approximation ratio on connected small graphs") {
  std::mt19937_64 rng(74);
  int tested = 0;
  while (tested < 60) {
    Graph g = testutil::random_graph(rng, 9, 0.45);
    if (!testutil::is_connected(g)) continue;
    ApproxResult r = approx_two(g, 1.0);
    REQUIRE(!r.budget_exceeded);
    auto opt = max_k_exact(g, 2);
    REQUIRE(!opt.budget_exceeded);
    CHECK(verify_coloring({g, 2, static_cast<int>(r.k)}, r.coloring).valid);
    CHECK(opt.k_opt <= 5 * std::max<long long>(r.k, 1));
    if (r.exact) CHECK(r.k == opt.k_opt);
    ++tested;
  }
}

TEST_CASE("isolated vertices do not disturb the approximations") {
  Graph g = gen_clique(6).disjoint_union(Graph(4, {}));
  ApproxResult r = approx_two(g, 1.0);
  REQUIRE(!r.budget_exceeded);
  CHECK(verify_coloring({g, 2, static_cast<int>(r.k)}, r.coloring).valid);
  ApproxResult r3 = approx_general(g, 3);
  REQUIRE(!r3.budget_exceeded);
  CHECK(verify_coloring({g, 3, static_cast<int>(r3.k)}, r3.coloring).valid);
}
