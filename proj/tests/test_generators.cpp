#include "doctest.h"
#include "semitsp/christofides.hpp"
#include "semitsp/generators.hpp"
#include "semitsp/mst.hpp"
#include "semitsp/semimetric.hpp"
#include "support.hpp"

using namespace semitsp;
using testsupport::errc_of;

TEST_CASE("example instance") {
  auto g = gen_example1();
  CHECK(g.size() == 5);
  CHECK(g.weight(0, 4) == 20);
  CHECK(g.weight(0, 1) == 1);
  CHECK(g.weight(0, 2) == 4);
  CHECK(g.weight(1, 4) == 4);
}

TEST_CASE("star family") {
  auto g = gen_star_family(6, 2);
  CHECK(minimum_spanning_tree(g).weight() == 5);
  CHECK(solve_mst2(g).tour.weight == 18);
  auto m = gen_star_family(4, 1);
  CHECK(compute_gamma(m).gamma == 1);
  CHECK(solve_mst2(m).tour.weight == 2 * (1 + 1 * 2));
  CHECK(errc_of([] { gen_star_family(3, 2); }) == Errc::invalid_params);
  CHECK(errc_of([] { gen_star_family(5, 0.5); }) == Errc::invalid_params);
}

TEST_CASE("random instances") {
  auto u = gen_random(5, 1, 1, 1);
  CHECK(compute_gamma(u).gamma == 1);
  auto g = gen_random(8, 7, 1, 10);
  const double gamma = compute_gamma(g).gamma;
  CHECK(gamma >= 1);
  CHECK(gamma <= 10);
  CHECK(gen_random(8, 7, 1, 10) == g);
  CHECK_FALSE(gen_random(8, 8, 1, 10) == g);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      CHECK(g.weight(i, j) >= 1);
      CHECK(g.weight(i, j) <= 10);
    }
}

TEST_CASE("planted tree instances have the requested odd-vertex count") {
  auto g = gen_planted_tree(60, 5, 2);
  CHECK(odd_vertices(minimum_spanning_tree(g)).size() == 12);
}

TEST_CASE("random connected instances are connected and not complete") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen_random_connected(4 + static_cast<int>(seed % 6), seed, 0.5, 1, 10);
    CHECK(g.is_connected());
    const int n = g.size();
    CHECK(g.edges().size() < static_cast<std::size_t>(n * (n - 1) / 2));
  }
}
