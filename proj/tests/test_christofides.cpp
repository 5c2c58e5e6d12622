#include <map>
#include <numeric>

#include "doctest.h"
#include "semitsp/christofides.hpp"
#include "semitsp/generators.hpp"
#include "semitsp/mst.hpp"
#include "semitsp/oracle.hpp"
#include "support.hpp"

using namespace semitsp;
using testsupport::errc_of;

namespace {

const CompleteWeightedGraph& uniform6() {
  static const auto g = gen_random(6, 0, 1, 1);
  return g;
}

SpanningTree tree_of(const CompleteWeightedGraph& g, std::vector<VertexPair> edges) {
  return SpanningTree::from_edges(g, edges);
}

std::map<VertexPair, int> usage(const Walk& w) {
  std::map<VertexPair, int> out;
  for (std::size_t k = 0; k + 1 < w.vertices.size(); ++k)
    ++out[std::minmax(w.vertices[k], w.vertices[k + 1])];
  return out;
}

}  // namespace

TEST_CASE("odd vertices") {
  CHECK(odd_vertices(tree_of(uniform6(), {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}})) == std::vector<Vertex>{0, 2, 3, 5});
  auto k4 = gen_random(4, 0, 1, 1);
  CHECK(odd_vertices(tree_of(k4, {{0, 1}, {1, 2}, {2, 3}})) == std::vector<Vertex>{0, 3});
  CHECK(odd_vertices(tree_of(uniform6(), {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) ==
        std::vector<Vertex>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("minimum weight perfect matching") {
  auto g = gen_random(6, 3, 1, 10);
  auto m = min_weight_perfect_matching(g, std::vector<Vertex>{4, 1});
  REQUIRE(m.pairs().size() == 1);
  CHECK(m.pairs()[0] == VertexPair{1, 4});

  auto w = CompleteWeightedGraph::from_rows({{0, 1, 10, 10}, {1, 0, 10, 10}, {10, 10, 0, 1}, {10, 10, 1, 0}});
  auto mm = min_weight_perfect_matching(w, std::vector<Vertex>{0, 1, 2, 3});
  CHECK(mm.weight() == 2);
  CHECK(mm.contains(0, 1));
  CHECK(mm.contains(2, 3));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto r = gen_random(14, seed + 40, 1, 10);
    std::vector<Vertex> s{0, 2, 3, 5, 6, 7, 9, 10, 12, 13};
    auto got = min_weight_perfect_matching(r, s);
    auto brute = brute_force_matching(r, s);
    CHECK(brute.matchings == 945);
    CHECK(testsupport::rel_close(got.weight(), brute.matching.weight(), 1e-12));
    CHECK(got.is_perfect_over(s));
  }

  CHECK(errc_of([&] { min_weight_perfect_matching(g, std::vector<Vertex>{0, 1, 2}); }) == Errc::odd_set_size);
  CHECK(errc_of([&] { min_weight_perfect_matching(g, std::vector<Vertex>{0, 1, 2, 3}, 2); }) == Errc::set_too_large);
}

TEST_CASE("Euler walk starts on a matching edge") {
  EulerMultigraph tri(3, {{EdgeTag::matching, 0, 1}, {EdgeTag::tree, 1, 2}, {EdgeTag::tree, 2, 0}});
  auto w = euler_walk_matching_first(tri, Matching({{0, 1}}, 0));
  CHECK(w.vertices == std::vector<Vertex>{0, 1, 2, 0});
  CHECK(w.tags == std::vector<EdgeTag>{EdgeTag::matching, EdgeTag::tree, EdgeTag::tree});

  EulerMultigraph path(4, {{EdgeTag::tree, 0, 1}, {EdgeTag::tree, 1, 2}, {EdgeTag::tree, 2, 3}, {EdgeTag::matching, 0, 3}});
  CHECK(euler_walk_matching_first(path, Matching({{0, 3}}, 0)).vertices == std::vector<Vertex>{0, 3, 2, 1, 0});

  auto t = tree_of(uniform6(), {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
  Matching m({{0, 2}, {3, 5}}, 2);
  auto mg = EulerMultigraph::from_tree_and_matching(t, m);
  auto ew = euler_walk_matching_first(mg, m);
  CHECK(ew.closed());
  CHECK(ew.edge_count() == 7);
  CHECK(ew.tags.front() == EdgeTag::matching);
  CHECK(m.contains(ew.vertices[0], ew.vertices[1]));
  std::map<VertexPair, int> expected{{{0, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}, {{2, 4}, 1},
                                     {{4, 5}, 1}, {{0, 2}, 1}, {{3, 5}, 1}};
  CHECK(usage(ew) == expected);

  CHECK(errc_of([&] { euler_walk_matching_first(tri, Matching()); }) == Errc::no_matching_edge);
  EulerMultigraph split(5, {{EdgeTag::matching, 0, 1}, {EdgeTag::tree, 1, 2}, {EdgeTag::tree, 2, 0}});
  CHECK(errc_of([&] { euler_walk_matching_first(split, Matching({{0, 1}}, 0)); }) == Errc::disconnected_multigraph);
}

TEST_CASE("enhanced shortcut") {
  CHECK(enhanced_shortcut(Walk{{0, 1, 2, 0}, {}}, Matching({{0, 1}}, 0)) == std::vector<Vertex>{0, 1, 2});
  CHECK(enhanced_shortcut(Walk{{0, 3, 2, 1, 0}, {}}, Matching({{0, 3}}, 0)) == std::vector<Vertex>{0, 3, 2, 1});
  CHECK(errc_of([] { enhanced_shortcut(Walk{{1, 2, 0, 1}, {}}, Matching({{0, 1}}, 0)); }) ==
        Errc::walk_does_not_start_with_matching_edge);
  // A walk that misses the matching pair entirely is rejected up front.
  CHECK(errc_of([] { enhanced_shortcut(Walk{{0, 2, 1, 0}, {}}, Matching({{0, 3}}, 0)); }) == Errc::invalid_walk);
}

TEST_CASE("Christofides on small instances") {
  CHECK(solve_christofides(gen_random(4, 0, 1, 1)).tour.weight == 4);
  auto ex1 = gen_example1();
  auto r = solve_christofides(ex1);
  CHECK(r.tour.weight <= 7.5 * exact_tsp_held_karp(ex1).weight * (1 + 1e-9));
  REQUIRE(r.trace);
  CHECK(r.trace->odd_vertices.size() % 2 == 0);
}

TEST_CASE("property: enhanced shortcut keeps every matching pair") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    auto g = gen_random(n, seed + 1300, 1, 10);
    auto r = solve_christofides(g);
    REQUIRE(r.trace);
    const auto& tr = *r.trace;
    CHECK(testsupport::is_perm(r.tour.order, n));
    CHECK(testsupport::tour_keeps_pairs(r.tour.order, tr.matching.pairs()));
    CHECK(tr.matching.is_perfect_over(tr.odd_vertices));
    CHECK(tr.non_matching_weight <= r.gamma * tr.tree.weight() * (1 + 1e-9));
    CHECK(testsupport::rel_close(r.tour.weight, testsupport::naive_tour_weight(g, r.tour.order), 1e-9));
  }
}

TEST_CASE("blossom matching agrees with the subset DP and brute force") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int k = 2 + 2 * static_cast<int>(seed % 9);  // 2..18
    auto g = gen_random(k + 3, seed + 5000, 1, 10);
    std::vector<Vertex> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 3 * (i % 2);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() % 2) s.pop_back();
    if (s.size() < 2) continue;
    auto dp = matching_by_subset_dp(g, s);
    auto bl = matching_by_blossom(g, s);
    CHECK(bl.is_perfect_over(s));
    CHECK(testsupport::rel_close(bl.weight(), dp.weight(), 1e-9));
    if (s.size() <= 12) CHECK(testsupport::rel_close(brute_force_matching(g, s).matching.weight(), dp.weight(), 1e-12));
  }
  // Metric-looking and heavily tied instances exercise blossom shrinking.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen_random(16, seed, 1, 2);
    std::vector<Vertex> s(16);
    std::iota(s.begin(), s.end(), 0);
    CHECK(testsupport::rel_close(matching_by_blossom(g, s).weight(), matching_by_subset_dp(g, s).weight(), 1e-9));
    auto tied = gen_random(12, 0, 1, 1);
    std::vector<Vertex> t(12);
    std::iota(t.begin(), t.end(), 0);
    CHECK(matching_by_blossom(tied, t).weight() == 6);
  }
}

TEST_CASE("large odd sets use the blossom solver when allowed") {
  auto g = gen_random(60, 11, 1, 10);
  auto t = minimum_spanning_tree(g);
  auto odd = odd_vertices(t);
  REQUIRE(odd.size() > static_cast<std::size_t>(kSubsetDpLimit));
  CHECK(errc_of([&] { solve_christofides(g); }) == Errc::set_too_large);
  auto r = solve_christofides(g, 60);
  REQUIRE(r.trace);
  CHECK(testsupport::tour_keeps_pairs(r.tour.order, r.trace->matching.pairs()));
}

TEST_CASE("blossom matching agrees with the subset DP near the DP limit") {
  for (int k : {20, 22, 24}) {
    auto g = gen_random(k, 7000 + static_cast<std::uint64_t>(k), 1, 10);
    std::vector<Vertex> s(k);
    std::iota(s.begin(), s.end(), 0);
    CHECK(testsupport::rel_close(matching_by_blossom(g, s).weight(), matching_by_subset_dp(g, s).weight(), 1e-9));
  }
}
