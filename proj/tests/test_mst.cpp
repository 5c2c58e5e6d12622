#include "doctest.h"
#include "semitsp/generators.hpp"
#include "semitsp/mst.hpp"
#include "semitsp/oracle.hpp"
#include "support.hpp"

using namespace semitsp;
using testsupport::errc_of;

namespace {

// The six-vertex tree 1-2, 2-3, 3-4, 3-5, 5-6 with labels shifted down by one.
SpanningTree example_tree() {
  static const auto g = gen_random(6, 0, 1, 1);
  std::vector<VertexPair> edges{{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}};
  return SpanningTree::from_edges(g, edges);
}

}  // namespace

TEST_CASE("MST of the star family is the star") {
  for (int n : {4, 6, 11}) {
    auto g = gen_star_family(n, 3);
    auto t = minimum_spanning_tree(g);
    CHECK(t.weight() == n - 1);
    for (const auto& e : t.edges()) CHECK(e.u == 0);
  }
}

TEST_CASE("MST tie-break on uniform K4") {
  auto t = minimum_spanning_tree(gen_random(4, 0, 1, 1));
  CHECK(t.weight() == 3);
  REQUIRE(t.edges().size() == 3);
  CHECK(t.edges()[0] == TreeEdge{0, 1, 1});
  CHECK(t.edges()[1] == TreeEdge{0, 2, 1});
  CHECK(t.edges()[2] == TreeEdge{0, 3, 1});
}

TEST_CASE("Prim agrees with Kruskal") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gen_random(8 + static_cast<int>(seed % 5), seed, 1, 10);
    CHECK(testsupport::rel_close(minimum_spanning_tree(g).weight(), testsupport::kruskal_weight(g), 1e-12));
  }
}

TEST_CASE("tree traversal under both child orders") {
  auto t = example_tree();
  CHECK(tree_traversal(t, 0, ChildOrder::descending).vertices == std::vector<Vertex>{0, 1, 2, 4, 5, 4, 2, 3, 2, 1, 0});
  CHECK(tree_traversal(t, 0, ChildOrder::ascending).vertices == std::vector<Vertex>{0, 1, 2, 3, 2, 4, 5, 4, 2, 1, 0});
  CHECK(errc_of([&] { tree_traversal(t, 6); }) == Errc::root_not_in_tree);
  CHECK(errc_of([&] { tree_traversal(t, -1); }) == Errc::root_not_in_tree);

  auto one = CompleteWeightedGraph::from_rows({{0}});
  auto w = tree_traversal(minimum_spanning_tree(one), 0);
  CHECK(w.vertices == std::vector<Vertex>{0});
  CHECK(shortcut(w) == std::vector<Vertex>{0});
}

TEST_CASE("shortcut keeps first appearances") {
  CHECK(shortcut(Walk{{0, 1, 2, 4, 5, 4, 2, 3, 2, 1, 0}, {}}) == std::vector<Vertex>{0, 1, 2, 4, 5, 3});
  CHECK(shortcut(Walk{{0, 1, 2, 3, 2, 4, 5, 4, 2, 1, 0}, {}}) == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(shortcut(Walk{{7, 8, 9, 8, 7}, {}}) == std::vector<Vertex>{7, 8, 9});

  CHECK(errc_of([] { shortcut(Walk{{0, 1, 2, 0}, {}}); }) == Errc::not_a_traversal);
  CHECK(errc_of([] { shortcut(Walk{{0, 1, 2, 1}, {}}); }) == Errc::not_a_traversal);
  CHECK(errc_of([] { shortcut(Walk{{0, 1, 0, 1, 0}, {}}); }) == Errc::not_a_traversal);
  CHECK(errc_of([] { shortcut(Walk{}); }) == Errc::not_a_traversal);
}

TEST_CASE("MST method on the star family") {
  for (double gamma : {1.0, 2.0, 3.0}) {
    for (int n : {4, 6, 50}) {
      auto r = solve_mst2(gen_star_family(n, gamma));
      CHECK(r.tour.weight == 2 * (1 + gamma * (n - 2)));
      CHECK(r.lower_bound == n - 1);
    }
  }
  auto r = solve_mst2(gen_star_family(50, 3));
  CHECK(r.achieved_ratio == doctest::Approx(2.0 * (1 + 3 * 48) / 49).epsilon(1e-12));
}

TEST_CASE("MST method on small instances") {
  CHECK(solve_mst2(gen_random(5, 0, 1, 1)).tour.weight == 5);
  auto g = gen_random(10, 77, 1, 10);
  auto r = solve_mst2(g);
  auto opt = exact_tsp_held_karp(g);
  CHECK(r.tour.weight <= 2 * r.gamma * opt.weight * (1 + 1e-9));
  CHECK(errc_of([] { solve_mst2(gen_random(3, 0, 1, 1).induced(std::vector<Vertex>{0, 1})); }) ==
        Errc::too_few_vertices);
}

TEST_CASE("property: every root and child order yields a valid tour") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 3 + static_cast<int>(seed);
    auto g = gen_random(n, seed + 900, 1, 10);
    auto t = minimum_spanning_tree(g);
    for (Vertex root = 0; root < n; ++root) {
      for (auto order : {ChildOrder::ascending, ChildOrder::descending}) {
        auto w = tree_traversal(t, root, order);
        CHECK(w.vertices.size() == static_cast<std::size_t>(2 * n - 1));
        auto s = shortcut(w);
        CHECK(testsupport::is_perm(s, n));
        CHECK(s.front() == root);
        auto r = solve_mst2(g, root, order);
        CHECK(testsupport::rel_close(r.tour.weight, testsupport::naive_tour_weight(g, r.tour.order), 1e-9));
        CHECK(r.tour.weight <= 2 * r.gamma * t.weight() * (1 + 1e-9));
      }
    }
  }
}
