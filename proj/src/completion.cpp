#include "semitsp/completion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace semitsp {

bool CompletionResult::is_original(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(original_edges.begin(), original_edges.end(), VertexPair{u, v});
}

CompletionResult complete_graph(const WeightedGraph& g) {
  const int n = g.size();
  if (n < 3) throw Error(Errc::too_few_vertices, "completion needs n >= 3, got " + std::to_string(n));
  if (g.edges().empty()) throw Error(Errc::no_edges, "completion needs at least one edge");

  const double filler = g.total_weight();
  SquareMatrix w(n, filler);
  for (Vertex v = 0; v < n; ++v) w(v, v) = 0.0;

  std::vector<VertexPair> original;
  original.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    w(e.u, e.v) = e.w;
    w(e.v, e.u) = e.w;
    original.emplace_back(e.u, e.v);
  }
  return CompletionResult{CompleteWeightedGraph(std::move(w)), filler, std::move(original)};
}

TourInterpretation interpret_tour(const CompletionResult& result, const Tour& tour, Optimality optimality) {
  const auto& g = result.complete;
  if (!is_permutation_of_range(tour.order, g.size())) {
    throw Error(Errc::invalid_tour, "tour is not a permutation of the completion's vertices");
  }
  const double recomputed = tour_weight(g, tour.order);
  if (std::abs(recomputed - tour.weight) > 1e-9 * std::max(1.0, std::abs(recomputed))) {
    throw Error(Errc::invalid_tour, "stored tour weight does not match the completion");
  }

  const auto edges = tour_edges(tour.order);
  const bool uses_filler = std::any_of(edges.begin(), edges.end(),
                                       [&](const VertexPair& e) { return !result.is_original(e.first, e.second); });

  // A filler edge alone weighs omega(G) and a tour has >= 3 edges, so
  // "weight <= omega(G)" and "no filler edge" coincide. The edge test is
  // the one taken; the weight test is the cross-check.
  if (!uses_filler) return {TourVerdict::hamiltonian_in_original, tour, false};
  if (tour.weight <= result.filler_weight) {
    throw Error(Errc::internal_invariant_violation,
                "tour uses a filler edge yet weighs at most the original total weight");
  }
  if (optimality == Optimality::certified_minimal) return {TourVerdict::no_hamiltonian_cycle, std::nullopt, true};
  return {TourVerdict::uses_filler_edges, std::nullopt, true};
}

std::string_view verdict_name(TourVerdict v) noexcept {
  switch (v) {
    case TourVerdict::hamiltonian_in_original: return "hamiltonian_in_original";
    case TourVerdict::no_hamiltonian_cycle: return "no_hamiltonian_cycle";
    case TourVerdict::uses_filler_edges: return "uses_filler_edges";
  }
  return "?";
}

}  // namespace semitsp
