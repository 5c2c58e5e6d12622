#include "doctest.h"
#include "semitsp/generators.hpp"
#include "semitsp/oracle.hpp"
#include "semitsp/semimetric.hpp"
#include "support.hpp"

using namespace semitsp;
using testsupport::errc_of;

namespace {
CompleteWeightedGraph uniform(int n) { return gen_random(n, 0, 1, 1); }
}  // namespace

TEST_CASE("beta") {
  auto ex1 = gen_example1();
  auto b = compute_beta(ex1);
  CHECK(b.beta == 4.0);
  REQUIRE(b.witness);
  auto [x, y, z] = *b.witness;
  CHECK(ex1.weight(x, z) / (ex1.weight(x, y) + ex1.weight(y, z)) == 4.0);

  CHECK(compute_beta(uniform(5)).beta == 1.0);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen_random(6, seed, 1, 10);
    CHECK(compute_beta(g).beta == testsupport::naive_beta(g));
  }
}

TEST_CASE("gamma") {
  auto ex1 = gen_example1();
  auto c = compute_gamma(ex1);
  CHECK(c.gamma == 5.0);
  CHECK(c.witness == VertexPair{0, 4});
  CHECK(c.shortest_path(0, 4) == 4.0);

  CHECK(compute_gamma(uniform(5)).gamma == 1.0);

  auto k7 = gen_random(7, 11, 1, 10);
  CHECK(testsupport::rel_close(compute_gamma(k7).gamma, brute_gamma(k7), 1e-12));
}

TEST_CASE("shortest paths match Dijkstra") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gen_random(12, seed, 1, 10);
    auto fw = shortest_paths(g);
    auto dj = testsupport::dijkstra_all(g);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) CHECK(testsupport::rel_close(fw(i, j), dj[i][j], 1e-12));
  }
}

TEST_CASE("classification") {
  auto u = classify(uniform(5));
  CHECK(u.kind == MetricClass::metric);
  CHECK(u.beta == 1.0);
  CHECK(u.gamma == 1.0);

  auto e = classify(gen_example1());
  CHECK(e.kind == MetricClass::beta_metric);
  CHECK(e.beta == 4.0);
  CHECK(e.gamma == 5.0);

  auto s = classify(gen_star_family(10, 3));
  CHECK(testsupport::rel_close(s.gamma, 3.0, 1e-9));
}

TEST_CASE("Suzuki exponent") {
  CHECK(suzuki_exponent(2) == 0);
  CHECK(suzuki_exponent(3) == 1);
  CHECK(suzuki_exponent(5) == 2);
  CHECK(suzuki_exponent(6) == 3);
  CHECK(suzuki_exponent(9) == 3);
  CHECK(suzuki_exponent(10) == 4);
  CHECK(suzuki_bound(2.0, 10) == 16.0);
}

TEST_CASE("bound comparison") {
  auto b = compare_bounds(4, 5);
  std::vector<double> values;
  for (auto& v : b) values.push_back(v.value);
  CHECK(values == std::vector<double>{7.5, 10, 16, 20, 24, 26});
  CHECK(b.front().method == BoundMethod::three_halves_gamma);

  auto raw = bound_values(1, 1);
  std::vector<double> metric;
  for (auto& v : raw) metric.push_back(v.value);
  CHECK(metric == std::vector<double>{2, 1.5, 4, 2, 1.5, 2});
  auto m = compare_bounds(1, 1);
  CHECK(m[0].value == 1.5);
  CHECK(m[1].value == 1.5);
  CHECK(m[0].method == BoundMethod::three_halves_gamma);
  CHECK(m[1].method == BoundMethod::three_halves_beta_sq);

  auto r = bound_values(3, 5.9);
  CHECK(r[0].value == doctest::Approx(11.8));
  CHECK(r[0].value < r[2].value);
  CHECK(r[2].value == 12.0);

  CHECK(errc_of([] { compare_bounds(2, 1.5); }) == Errc::invalid_constants);
  CHECK(errc_of([] { compare_bounds(0.5, 1); }) == Errc::invalid_constants);
}

TEST_CASE("property: beta <= gamma <= Suzuki bound") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    auto p = classify(gen_random(n, seed + 500, 1, 10));
    CHECK(p.beta >= 1.0);
    CHECK(p.beta <= p.gamma * (1 + 1e-9));
    CHECK(p.gamma <= suzuki_bound(p.beta, n) * (1 + 1e-9));
  }
}
