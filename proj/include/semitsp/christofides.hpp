#pragma once

// gamma-Christofides: MST, odd-degree vertices, exact minimum-weight
// perfect matching on them, a matching-first Eulerian walk of the
// tree+matching multigraph, and a shortcut that never drops a matching
// edge. The tour satisfies
//   sum of non-matching tour edges <= gamma w(T),
//   w(M) <= (gamma/2) w(C*),
// hence w(tour) <= (3 gamma / 2) w(C*).

#include <span>
#include <vector>

#include "semitsp/graph.hpp"
#include "semitsp/semimetric.hpp"
#include "semitsp/solve_report.hpp"

namespace semitsp {

inline constexpr int kDefaultMatchingLimit = 24;
/// Sets up to this size go to the subset DP; larger ones to the blossom solver.
inline constexpr int kSubsetDpLimit = 24;

/// Vertices of odd tree degree, ascending.
std::vector<Vertex> odd_vertices(const SpanningTree& t);

/// Exact minimum-weight perfect matching on the subgraph induced by `s`.
/// k = |s| <= kSubsetDpLimit uses matching_by_subset_dp, larger sets
/// matching_by_blossom. Throws SetTooLarge above `max_set_size`.
Matching min_weight_perfect_matching(const CompleteWeightedGraph& g, std::span<const Vertex> s,
                                     int max_set_size = kDefaultMatchingLimit);

/// Dynamic programme over subsets, O(2^k k) time and 2^k memory. Ties go
/// to the smallest partner of the lowest unmatched member.
Matching matching_by_subset_dp(const CompleteWeightedGraph& g, std::span<const Vertex> s);

/// Edmonds' weighted blossom algorithm with maximum cardinality, O(k^3).
Matching matching_by_blossom(const CompleteWeightedGraph& g, std::span<const Vertex> s);

/// Hierholzer's algorithm started at the smallest vertex incident to a
/// matching edge. At every step an unused matching multiedge is taken
/// before a tree multiedge, smallest neighbour id first within a class;
/// sub-walks are spliced in at the last appearance of their anchor.
/// The returned walk carries the tag of every multiedge it uses.
Walk euler_walk_matching_first(const EulerMultigraph& mg, const Matching& matching);

/// Shortcut of a matching-first Eulerian walk that keeps every matching
/// edge. Non-matching vertices are kept at their first appearance;
/// matching vertices at the position where the walk enters or leaves them
/// along their matching edge. Untagged walks have their matching edges
/// inferred from vertex pairs, in which case each matching pair must occur
/// exactly once.
std::vector<Vertex> enhanced_shortcut(const Walk& walk, const Matching& matching);

/// Sum of tour edge weights over edges not in `matching`.
double non_matching_weight(const CompleteWeightedGraph& g, std::span<const Vertex> order, const Matching& matching);

SolveReport solve_christofides(const CompleteWeightedGraph& g, int max_set_size = kDefaultMatchingLimit);
SolveReport solve_christofides(const CompleteWeightedGraph& g, const RelaxationProfile& profile,
                               int max_set_size = kDefaultMatchingLimit);

}  // namespace semitsp
