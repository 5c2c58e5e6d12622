#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "semitsp/graph.hpp"

namespace semitsp {

enum class Method { mst2, christofides, exact };

std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// Intermediate structures of one gamma-Christofides run.
struct ChristofidesTrace {
  SpanningTree tree;
  std::vector<Vertex> odd_vertices;
  Matching matching;
  Walk euler_walk;
  Tour tour;
  /// Sum of tour edge weights that are not matching edges.
  double non_matching_weight = 0.0;
};

struct SolveReport {
  Method method = Method::mst2;
  Tour tour;
  /// omega(T) for the approximation methods, the optimum for exact.
  double lower_bound = 0.0;
  bool lower_bound_is_optimum = false;
  double beta = 1.0;
  double gamma = 1.0;
  /// 2 gamma, 3 gamma / 2, or 1.
  double guarantee_factor = 1.0;
  /// tour.weight / lower_bound.
  double achieved_ratio = 1.0;
  /// Filled in by verification against the exact solver.
  std::optional<double> optimum;
  std::optional<ChristofidesTrace> trace;
};

}  // namespace semitsp
