#pragma once

// Relaxation constants of a complete weighted graph viewed as a finite
// semimetric space: the beta-triangle constant and the gamma-polygon
// constant, plus the comparison of the resulting approximation factors.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "semitsp/graph.hpp"

namespace semitsp {

struct BetaResult {
  double beta = 1.0;
  /// (x, y, z) attaining d(x,z) / (d(x,y) + d(y,z)); absent for n = 1.
  std::optional<std::array<Vertex, 3>> witness;
};

struct GammaResult {
  double gamma = 1.0;
  SquareMatrix shortest_path;
  /// (x, y), x < y, attaining w(x,y) / D(x,y); absent for n = 1.
  std::optional<VertexPair> witness;
};

/// beta = max over ordered triples with x != z of d(x,z)/(d(x,y)+d(y,z)),
/// y ranging over every vertex. Ties keep the lexicographically smallest
/// triple.
BetaResult compute_beta(const CompleteWeightedGraph& g);

/// All-pairs shortest paths (Floyd-Warshall) over the complete graph.
SquareMatrix shortest_paths(const CompleteWeightedGraph& g);

/// gamma = max over x < y of w(x,y) / D(x,y), D from shortest_paths.
GammaResult compute_gamma(const CompleteWeightedGraph& g);

/// ceil(log2(n - 1)) for n >= 2.
int suzuki_exponent(int n);

/// beta^ceil(log2(n-1)), the upper bound on gamma for a beta-metric space
/// on n >= 2 points.
double suzuki_bound(double beta, int n);

enum class MetricClass { metric, beta_metric };

struct RelaxationProfile {
  MetricClass kind = MetricClass::metric;
  double beta = 1.0;
  double gamma = 1.0;
  SquareMatrix shortest_path;
  std::optional<std::array<Vertex, 3>> beta_witness;
  std::optional<VertexPair> gamma_witness;
};

/// Metric iff no triple violates the triangle inequality (beta == 1).
RelaxationProfile classify(const CompleteWeightedGraph& g);

std::string_view metric_class_name(MetricClass kind) noexcept;

enum class BoundMethod {
  two_gamma,                // MST shortcut, 2 gamma
  three_halves_gamma,       // gamma-Christofides, 3 gamma / 2
  four_beta,                // 4 beta
  beta_squared_plus_beta,   // beta^2 + beta
  three_halves_beta_sq,     // 3 beta^2 / 2
  three_beta_sq_plus_beta,  // (3 beta^2 + beta) / 2
};

std::string_view bound_method_name(BoundMethod m) noexcept;

struct BoundValue {
  BoundMethod method;
  double value;
};

/// All six factors in declaration order (gamma-based first).
std::array<BoundValue, 6> bound_values(double beta, double gamma);

/// bound_values sorted ascending; equal values keep declaration order.
/// Throws InvalidConstants unless 1 <= beta <= gamma.
std::vector<BoundValue> compare_bounds(double beta, double gamma);

}  // namespace semitsp
