#pragma once

// Completion of an arbitrary weighted graph to K_n: missing pairs receive
// the total edge weight of the input, so any tour touching a filler edge
// is heavier than every tour that stays on original edges.

#include <optional>
#include <string_view>
#include <vector>

#include "semitsp/graph.hpp"

namespace semitsp {

struct CompletionResult {
  CompleteWeightedGraph complete;
  double filler_weight;
  std::vector<VertexPair> original_edges;  // normalized, sorted

  bool is_original(Vertex u, Vertex v) const;
};

/// Requires n >= 3 and at least one edge.
CompletionResult complete_graph(const WeightedGraph& g);

enum class Optimality { certified_minimal, unknown };

enum class TourVerdict {
  hamiltonian_in_original,
  no_hamiltonian_cycle,
  uses_filler_edges,  // tour not certified minimal, so nothing follows
};

struct TourInterpretation {
  TourVerdict verdict;
  std::optional<Tour> tour;  // set for hamiltonian_in_original
  bool uses_filler = false;
};

/// Reads a tour of the completion back on the original graph. The
/// no_hamiltonian_cycle verdict is only issued for tours certified
/// minimal (e.g. by the exact solver).
TourInterpretation interpret_tour(const CompletionResult& result, const Tour& tour,
                                  Optimality optimality = Optimality::unknown);

std::string_view verdict_name(TourVerdict v) noexcept;

}  // namespace semitsp
