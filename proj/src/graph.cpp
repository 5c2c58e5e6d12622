#include "semitsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

namespace semitsp {

namespace {

std::string pair_text(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

void check_vertex(Vertex v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw Error(Errc::invalid_vertex, std::string(what) + " vertex " + std::to_string(v) +
                                          " outside 0.." + std::to_string(n - 1));
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(Errc::invalid_params, "row " + std::to_string(i) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(n));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

std::vector<std::vector<double>> SquareMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

std::optional<ValidationIssue> validate_complete(const SquareMatrix& w) {
  const int n = w.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        if (w(i, i) != 0.0) return ValidationIssue{Errc::nonzero_diagonal, i, i};
        continue;
      }
      if (j < i) continue;
      if (w(i, j) != w(j, i)) return ValidationIssue{Errc::asymmetric_weight, i, j};
      if (!(w(i, j) > 0.0) || !std::isfinite(w(i, j))) {
        return ValidationIssue{Errc::nonpositive_weight, i, j};
      }
    }
  }
  return std::nullopt;
}

void throw_issue(const ValidationIssue& issue) {
  switch (issue.code) {
    case Errc::nonzero_diagonal:
      throw Error(issue.code, "w[" + std::to_string(issue.i) + "][" + std::to_string(issue.i) + "] != 0");
    case Errc::asymmetric_weight:
      throw Error(issue.code, pair_text(issue.i, issue.j) + ": w[i][j] != w[j][i]");
    default:
      throw Error(issue.code, pair_text(issue.i, issue.j) + ": weight must be finite and > 0");
  }
}

CompleteWeightedGraph::CompleteWeightedGraph(SquareMatrix weights) : w_(std::move(weights)) {
  if (w_.size() < 1) throw Error(Errc::too_few_vertices, "complete graph needs n >= 1");
  if (auto issue = validate_complete(w_)) throw_issue(*issue);
}

CompleteWeightedGraph CompleteWeightedGraph::from_rows(const std::vector<std::vector<double>>& rows) {
  return CompleteWeightedGraph(SquareMatrix::from_rows(rows));
}

CompleteWeightedGraph CompleteWeightedGraph::induced(std::span<const Vertex> vertices) const {
  const int k = static_cast<int>(vertices.size());
  SquareMatrix sub(k);
  for (int a = 0; a < k; ++a) {
    check_vertex(vertices[a], size(), "induced");
    for (int b = 0; b < k; ++b) sub(a, b) = w_(vertices[a], vertices[b]);
  }
  return CompleteWeightedGraph(std::move(sub));
}

WeightedGraph::WeightedGraph(int n, std::vector<WeightedEdge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw Error(Errc::too_few_vertices, "graph needs n >= 1");
  for (auto& e : edges_) {
    check_vertex(e.u, n_, "edge");
    check_vertex(e.v, n_, "edge");
    if (e.u == e.v) throw Error(Errc::self_loop, "edge " + pair_text(e.u, e.v));
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw Error(Errc::nonpositive_weight, pair_text(e.u, e.v) + ": weight must be finite and > 0");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw Error(Errc::duplicate_edge, "edge " + pair_text(edges_[k].u, edges_[k].v));
    }
  }
}

std::optional<double> WeightedGraph::weight(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const WeightedEdge& e, const VertexPair& key) {
                               return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                             });
  if (it != edges_.end() && it->u == u && it->v == v) return it->w;
  return std::nullopt;
}

double WeightedGraph::total_weight() const noexcept {
  double total = 0.0;
  for (const auto& e : edges_) total += e.w;
  return total;
}

bool WeightedGraph::is_connected() const {
  DisjointSets sets(n_);
  int components = n_;
  for (const auto& e : edges_) {
    if (sets.unite(e.u, e.v)) --components;
  }
  return components == 1;
}

bool is_permutation_of_range(std::span<const Vertex> order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

double tour_weight(const CompleteWeightedGraph& g, std::span<const Vertex> order) {
  const int n = g.size();
  if (n < 3) throw Error(Errc::too_few_vertices, "a tour needs n >= 3, got " + std::to_string(n));
  if (!is_permutation_of_range(order, n)) {
    throw Error(Errc::not_a_permutation, "tour order is not a permutation of 0.." + std::to_string(n - 1));
  }
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) total += g.weight(order[k], order[k + 1]);
  return total + g.weight(order.back(), order.front());
}

Tour make_tour(const CompleteWeightedGraph& g, std::vector<Vertex> order) {
  const double w = tour_weight(g, order);
  return Tour{std::move(order), w};
}

Tour canonical_tour(const CompleteWeightedGraph& g, std::span<const Vertex> order) {
  if (!is_permutation_of_range(order, g.size())) {
    throw Error(Errc::not_a_permutation, "tour order is not a permutation");
  }
  std::vector<Vertex> rotated(order.begin(), order.end());
  std::rotate(rotated.begin(), std::find(rotated.begin(), rotated.end(), 0), rotated.end());
  if (rotated.size() > 2 && rotated[1] > rotated.back()) std::reverse(rotated.begin() + 1, rotated.end());
  return make_tour(g, std::move(rotated));
}

std::vector<VertexPair> tour_edges(std::span<const Vertex> order) {
  std::vector<VertexPair> out;
  out.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    Vertex a = order[k];
    Vertex b = order[(k + 1) % order.size()];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

SpanningTree SpanningTree::from_parents(const CompleteWeightedGraph& g, std::vector<Vertex> parent) {
  const int n = g.size();
  if (static_cast<int>(parent.size()) != n) {
    throw Error(Errc::invalid_params, "parent array must have one entry per vertex");
  }
  SpanningTree t;
  t.root_ = -1;
  DisjointSets sets(n);
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] == -1) {
      if (t.root_ != -1) throw Error(Errc::invalid_params, "parent array has two roots");
      t.root_ = v;
      continue;
    }
    check_vertex(parent[v], n, "parent");
    if (!sets.unite(v, parent[v])) throw Error(Errc::invalid_params, "parent array contains a cycle");
    t.edges_.push_back({std::min(v, parent[v]), std::max(v, parent[v]), g.weight(v, parent[v])});
  }
  if (t.root_ == -1) throw Error(Errc::invalid_params, "parent array has no root");
  std::sort(t.edges_.begin(), t.edges_.end(),
            [](const TreeEdge& a, const TreeEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (const auto& e : t.edges_) t.weight_ += e.w;
  t.parent_ = std::move(parent);
  return t;
}

SpanningTree SpanningTree::from_edges(const CompleteWeightedGraph& g, std::span<const VertexPair> edges) {
  const int n = g.size();
  if (static_cast<int>(edges.size()) != n - 1) {
    throw Error(Errc::invalid_params, "a spanning tree on " + std::to_string(n) + " vertices has " +
                                          std::to_string(n - 1) + " edges");
  }
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  DisjointSets sets(n);
  for (auto [u, v] : edges) {
    check_vertex(u, n, "tree edge");
    check_vertex(v, n, "tree edge");
    if (u == v || !sets.unite(u, v)) throw Error(Errc::invalid_params, "tree edges contain a cycle");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
  parent[0] = -1;
  std::queue<Vertex> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : adj[x]) {
      if (parent[y] != -2) continue;
      parent[y] = x;
      frontier.push(y);
    }
  }
  return from_parents(g, std::move(parent));
}

std::vector<std::vector<Vertex>> SpanningTree::adjacency() const {
  std::vector<std::vector<Vertex>> adj(parent_.size());
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<int> SpanningTree::degrees() const {
  std::vector<int> deg(parent_.size(), 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

Matching::Matching(std::vector<VertexPair> pairs, double weight) : pairs_(std::move(pairs)), weight_(weight) {
  Vertex top = -1;
  for (auto& [a, b] : pairs_) {
    if (a < 0 || b < 0) throw Error(Errc::invalid_vertex, "negative vertex in matching");
    if (a == b) throw Error(Errc::self_loop, "matching pair " + pair_text(a, b));
    if (a > b) std::swap(a, b);
    top = std::max(top, b);
  }
  mate_.assign(static_cast<std::size_t>(top + 1), -1);
  for (auto [a, b] : pairs_) {
    if (mate_[a] != -1 || mate_[b] != -1) {
      throw Error(Errc::invalid_params, "matching pairs share a vertex at " + pair_text(a, b));
    }
    mate_[a] = b;
    mate_[b] = a;
  }
}

Matching Matching::from_pairs(const CompleteWeightedGraph& g, std::vector<VertexPair> pairs) {
  double total = 0.0;
  for (auto [a, b] : pairs) {
    check_vertex(a, g.size(), "matching");
    check_vertex(b, g.size(), "matching");
    total += g.weight(a, b);
  }
  return Matching(std::move(pairs), total);
}

std::optional<Vertex> Matching::mate(Vertex v) const {
  if (v < 0 || v >= static_cast<Vertex>(mate_.size()) || mate_[v] == -1) return std::nullopt;
  return mate_[v];
}

bool Matching::contains(Vertex u, Vertex v) const {
  auto m = mate(u);
  return m && *m == v;
}

bool Matching::is_perfect_over(std::span<const Vertex> s) const {
  if (pairs_.size() * 2 != s.size()) return false;
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return mate(v).has_value(); });
}

EulerMultigraph::EulerMultigraph(int n, std::vector<Multiedge> multiedges) : n_(n), edges_(std::move(multiedges)) {
  for (const auto& e : edges_) {
    check_vertex(e.u, n_, "multiedge");
    check_vertex(e.v, n_, "multiedge");
    if (e.u == e.v) throw Error(Errc::self_loop, "multiedge " + pair_text(e.u, e.v));
  }
  auto deg = degrees();
  for (Vertex v = 0; v < n_; ++v) {
    if (deg[v] % 2 != 0) {
      throw Error(Errc::odd_degree_vertex, "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
    }
  }
}

EulerMultigraph EulerMultigraph::from_tree_and_matching(const SpanningTree& tree, const Matching& matching) {
  std::vector<Multiedge> edges;
  edges.reserve(tree.edges().size() + matching.pairs().size());
  for (const auto& e : tree.edges()) edges.push_back({EdgeTag::tree, e.u, e.v});
  for (auto [a, b] : matching.pairs()) edges.push_back({EdgeTag::matching, a, b});
  return EulerMultigraph(tree.size(), std::move(edges));
}

std::vector<int> EulerMultigraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

}  // namespace semitsp
