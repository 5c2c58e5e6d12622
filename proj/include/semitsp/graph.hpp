#pragma once

// Core graph model: complete weighted graphs (dense), general weighted
// graphs (edge lists), tours, spanning trees, matchings, the tree+matching
// multigraph and walks over it. Vertices are 0-based ints everywhere.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "semitsp/error.hpp"

namespace semitsp {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

/// Dense row-major n x n matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int size() const noexcept { return n_; }

  double operator()(int i, int j) const noexcept { return data_[index(i, j)]; }
  double& operator()(int i, int j) noexcept { return data_[index(i, j)]; }

  std::span<const double> row(int i) const noexcept {
    return {data_.data() + index(i, 0), static_cast<std::size_t>(n_)};
  }
  std::span<double> row(int i) noexcept {
    return {data_.data() + index(i, 0), static_cast<std::size_t>(n_)};
  }

  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> data_;
};

/// A single violated invariant, located at matrix entry (i, j).
struct ValidationIssue {
  Errc code;
  int i;
  int j;
};

/// Checks the complete-graph invariants: zero diagonal, symmetry, and
/// strictly positive finite off-diagonal weights. Entries are scanned
/// row-major; the first violation found is reported.
std::optional<ValidationIssue> validate_complete(const SquareMatrix& w);

[[noreturn]] void throw_issue(const ValidationIssue& issue);

/// Complete graph K_n with a positive symmetric weight on every pair.
/// The weight matrix doubles as the induced semimetric (d(x,x) = 0).
class CompleteWeightedGraph {
 public:
  /// Throws Error on any invariant violation.
  explicit CompleteWeightedGraph(SquareMatrix weights);
  static CompleteWeightedGraph from_rows(const std::vector<std::vector<double>>& rows);

  int size() const noexcept { return w_.size(); }
  double weight(Vertex u, Vertex v) const noexcept { return w_(u, v); }
  const SquareMatrix& matrix() const noexcept { return w_; }

  /// Induced subgraph on `vertices`; vertex k of the result is vertices[k].
  CompleteWeightedGraph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const CompleteWeightedGraph&, const CompleteWeightedGraph&) = default;

 private:
  SquareMatrix w_;
};

struct WeightedEdge {
  Vertex u;
  Vertex v;
  double w;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Simple undirected graph with positive edge weights. Edges are stored
/// normalized (u < v) and sorted.
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<WeightedEdge> edges);

  int size() const noexcept { return n_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  std::optional<double> weight(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return weight(u, v).has_value(); }
  /// omega(G): sum of all edge weights.
  double total_weight() const noexcept;
  bool is_connected() const;

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
};

/// Hamiltonian cycle as a vertex order; the closing edge back to order[0]
/// is implicit.
struct Tour {
  std::vector<Vertex> order;
  double weight = 0.0;
};

bool is_permutation_of_range(std::span<const Vertex> order, int n);

/// Sum of w over consecutive pairs plus the closing edge, accumulated in
/// sequence order starting at order[0].
double tour_weight(const CompleteWeightedGraph& g, std::span<const Vertex> order);

Tour make_tour(const CompleteWeightedGraph& g, std::vector<Vertex> order);

/// Rotates the order to start at vertex 0 and orients it so that
/// order[1] < order[n-1]; the weight is recomputed in the new order.
Tour canonical_tour(const CompleteWeightedGraph& g, std::span<const Vertex> order);

/// Edges of the cycle as normalized pairs (u < v), closing edge last.
std::vector<VertexPair> tour_edges(std::span<const Vertex> order);

struct TreeEdge {
  Vertex u;
  Vertex v;
  double w;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Spanning tree of a complete graph, stored both as a parent array
/// rooted at `root()` and as a normalized, sorted edge list.
class SpanningTree {
 public:
  /// `parent[root] == -1`; every other entry names the parent vertex.
  static SpanningTree from_parents(const CompleteWeightedGraph& g, std::vector<Vertex> parent);
  /// Validates that `edges` form a spanning tree of 0..n-1 and roots it at 0.
  static SpanningTree from_edges(const CompleteWeightedGraph& g, std::span<const VertexPair> edges);

  int size() const noexcept { return static_cast<int>(parent_.size()); }
  Vertex root() const noexcept { return root_; }
  const std::vector<Vertex>& parents() const noexcept { return parent_; }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  double weight() const noexcept { return weight_; }

  std::vector<std::vector<Vertex>> adjacency() const;
  std::vector<int> degrees() const;

 private:
  SpanningTree() = default;

  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<TreeEdge> edges_;
  double weight_ = 0.0;
};

/// Set of vertex-disjoint pairs. Pairs are stored normalized (first < second)
/// in the order given.
class Matching {
 public:
  Matching() = default;
  Matching(std::vector<VertexPair> pairs, double weight);

  static Matching from_pairs(const CompleteWeightedGraph& g, std::vector<VertexPair> pairs);

  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
  double weight() const noexcept { return weight_; }
  bool empty() const noexcept { return pairs_.empty(); }

  std::optional<Vertex> mate(Vertex v) const;
  bool contains(Vertex u, Vertex v) const;
  /// Every vertex of `s` appears in exactly one pair and no other vertex
  /// appears at all.
  bool is_perfect_over(std::span<const Vertex> s) const;

 private:
  std::vector<VertexPair> pairs_;
  std::vector<Vertex> mate_;  // indexed by vertex, -1 when unmatched
  double weight_ = 0.0;
};

enum class EdgeTag : std::uint8_t { tree = 0, matching = 1 };

struct Multiedge {
  EdgeTag tag;
  Vertex u;
  Vertex v;
};

/// Multigraph on 0..n-1 whose multiedges are tagged tree or matching
/// copies. Construction rejects any odd-degree vertex.
class EulerMultigraph {
 public:
  EulerMultigraph(int n, std::vector<Multiedge> multiedges);
  static EulerMultigraph from_tree_and_matching(const SpanningTree& tree, const Matching& matching);

  int size() const noexcept { return n_; }
  const std::vector<Multiedge>& multiedges() const noexcept { return edges_; }
  std::vector<int> degrees() const;

 private:
  int n_;
  std::vector<Multiedge> edges_;
};

/// Vertex sequence; tags[k], when present, names the kind of multiedge
/// used between vertices[k] and vertices[k+1].
struct Walk {
  std::vector<Vertex> vertices;
  std::vector<EdgeTag> tags;

  bool closed() const noexcept { return !vertices.empty() && vertices.front() == vertices.back(); }
  std::size_t edge_count() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
};

}  // namespace semitsp
