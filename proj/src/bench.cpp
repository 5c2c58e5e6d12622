#include "semitsp/bench.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "semitsp/generators.hpp"
#include "semitsp/instance_io.hpp"
#include "semitsp/solve.hpp"

namespace semitsp {

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (int n : config.sizes) {
    for (std::uint64_t seed : config.seeds) {
      const CompleteWeightedGraph g = gen_random(n, seed, config.low, config.high);
      const RelaxationProfile profile = classify(g);
      std::optional<Tour> optimum;
      if (n <= config.oracle_limit) optimum = exact_tsp_held_karp(g, config.oracle_limit);

      const auto bounds = bound_values(profile.beta, profile.gamma);
      for (Method method : config.methods) {
        SolveOptions options;
        options.method = method;
        options.oracle_limit = config.oracle_limit;
        options.matching_limit = config.matching_limit;
        SolveReport report = method == Method::exact && optimum ? solve_exact(g, profile, config.oracle_limit)
                                                                : solve(g, profile, options);
        BenchRow row;
        row.n = n;
        row.seed = seed;
        row.beta = profile.beta;
        row.gamma = profile.gamma;
        row.method = method;
        row.tour_weight = report.tour.weight;
        if (optimum) {
          const Verification v = verify_against_optimum(g, report, *optimum);
          if (!v.ok()) {
            throw Error(Errc::guarantee_violation, "bench n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                                                       " " + std::string(method_name(method)) + ": " + v.failures.front());
          }
          row.optimum = optimum->weight;
          row.ratio = report.tour.weight / optimum->weight;
        } else {
          row.ratio = report.achieved_ratio;
        }
        for (std::size_t k = 0; k < bounds.size(); ++k) row.bounds[k] = bounds[k].value;
        rows.push_back(row);
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::make_tuple(a.n, a.seed, static_cast<int>(a.method)) <
           std::make_tuple(b.n, b.seed, static_cast<int>(b.method));
  });
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kBenchCsvHeader << "\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.seed << ',' << format_double(r.beta) << ',' << format_double(r.gamma) << ','
        << method_name(r.method) << ',' << format_double(r.tour_weight) << ','
        << (r.optimum ? format_double(*r.optimum) : std::string()) << ',' << format_double(r.ratio);
    for (double b : r.bounds) out << ',' << format_double(b);
    out << "\n";
  }
  return out.str();
}

std::vector<BenchRow> parse_bench_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  std::vector<BenchRow> rows;
  if (!std::getline(in, line) || line != kBenchCsvHeader) {
    throw Error(Errc::parse_error, "line 1: missing or unexpected bench CSV header");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 14) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 14 columns");
    }
    try {
      BenchRow r;
      r.n = std::stoi(cells[0]);
      r.seed = std::stoull(cells[1]);
      r.beta = std::stod(cells[2]);
      r.gamma = std::stod(cells[3]);
      auto method = parse_method(cells[4]);
      if (!method) throw std::invalid_argument("method");
      r.method = *method;
      r.tour_weight = std::stod(cells[5]);
      if (!cells[6].empty()) r.optimum = std::stod(cells[6]);
      r.ratio = std::stod(cells[7]);
      for (std::size_t k = 0; k < 6; ++k) r.bounds[k] = std::stod(cells[8 + k]);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": malformed value");
    }
  }
  return rows;
}

}  // namespace semitsp
