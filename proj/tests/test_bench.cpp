#include "doctest.h"
#include "semitsp/bench.hpp"
#include "support.hpp"

using namespace semitsp;

TEST_CASE("bench rows are sorted and round trip through CSV") {
  BenchConfig c;
  c.sizes = {6, 4};
  c.seeds = {2, 1};
  auto rows = run_bench(c);
  REQUIRE(rows.size() == 8);
  CHECK(rows.front().n == 4);
  CHECK(rows.front().seed == 1);
  CHECK(rows.front().method == Method::mst2);
  for (const auto& r : rows) {
    REQUIRE(r.optimum);
    CHECK(r.tour_weight >= *r.optimum);
    CHECK(r.ratio == r.tour_weight / *r.optimum);
    CHECK(r.bounds[0] == 2 * r.gamma);
    CHECK(r.bounds[2] == 4 * r.beta);
  }
  auto csv = bench_csv(rows);
  CHECK(csv.rfind(std::string(kBenchCsvHeader), 0) == 0);
  auto back = parse_bench_csv(csv);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].tour_weight == rows[i].tour_weight);
    CHECK(back[i].gamma == rows[i].gamma);
    CHECK(back[i].bounds == rows[i].bounds);
  }
}

TEST_CASE("bench leaves the optimum empty above the oracle limit") {
  BenchConfig c;
  c.sizes = {14};
  c.seeds = {0};
  c.oracle_limit = 12;
  auto rows = run_bench(c);
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].optimum);
  CHECK(parse_bench_csv(bench_csv(rows))[0].optimum == std::nullopt);
}
