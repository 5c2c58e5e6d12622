#pragma once

// MST double-tree method: minimum spanning tree, DFS tree traversal,
// shortcut to a Hamiltonian cycle. The shortcut S satisfies
// w(S) <= 2 gamma w(T) <= 2 gamma w(C*).

#include <vector>

#include "semitsp/graph.hpp"
#include "semitsp/semimetric.hpp"
#include "semitsp/solve_report.hpp"

namespace semitsp {

/// Dense Prim, O(n^2). Edges are compared by (weight, u, v) with u < v,
/// so the result is the unique minimum tree under that total order.
/// Rooted at vertex 0.
SpanningTree minimum_spanning_tree(const CompleteWeightedGraph& g);

enum class ChildOrder { ascending, descending };

/// Closed DFS walk from `root` using each tree edge twice (length 2n-1).
/// Children are visited in ascending or descending vertex id.
Walk tree_traversal(const SpanningTree& t, Vertex root, ChildOrder order = ChildOrder::ascending);

/// Keeps each vertex of a closed tree traversal at its first appearance.
/// Throws NotATraversal when the walk does not use every edge of some tree
/// exactly twice.
std::vector<Vertex> shortcut(const Walk& walk);

/// Runs the three MST-method steps and asserts w(S) <= 2 gamma w(T).
SolveReport solve_mst2(const CompleteWeightedGraph& g, Vertex root = 0, ChildOrder order = ChildOrder::ascending);
SolveReport solve_mst2(const CompleteWeightedGraph& g, const RelaxationProfile& profile, Vertex root = 0,
                       ChildOrder order = ChildOrder::ascending);

}  // namespace semitsp
