#pragma once

// Benchmark sweep over seeded random instances. CSV columns (header row
// always written):
//   n,seed,beta,gamma,method,tour_weight,optimum,ratio,
//   bound_2g,bound_3g2,bound_4b,bound_b2b,bound_32b2,bound_3b2b2
// optimum is empty when n exceeds the oracle limit; ratio is
// tour_weight / optimum when the optimum is known, otherwise
// tour_weight / w(MST).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semitsp/christofides.hpp"
#include "semitsp/solve_report.hpp"

namespace semitsp {

struct BenchConfig {
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  double low = 1.0;
  double high = 10.0;
  std::vector<Method> methods{Method::mst2, Method::christofides};
  int oracle_limit = 12;
  int matching_limit = kDefaultMatchingLimit;
};

struct BenchRow {
  int n = 0;
  std::uint64_t seed = 0;
  double beta = 1.0;
  double gamma = 1.0;
  Method method = Method::mst2;
  double tour_weight = 0.0;
  std::optional<double> optimum;
  double ratio = 1.0;
  /// Same order as bound_values().
  std::array<double, 6> bounds{};
};

inline constexpr std::string_view kBenchCsvHeader =
    "n,seed,beta,gamma,method,tour_weight,optimum,ratio,"
    "bound_2g,bound_3g2,bound_4b,bound_b2b,bound_32b2,bound_3b2b2";

/// Rows sorted by (n, seed, method).
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_bench_csv(std::string_view csv);

}  // namespace semitsp
