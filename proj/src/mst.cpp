#include "semitsp/mst.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <tuple>

#include "semitsp/tolerance.hpp"

namespace semitsp {

namespace {

struct EdgeKey {
  double w = std::numeric_limits<double>::infinity();
  Vertex u = -1;
  Vertex v = -1;

  bool operator<(const EdgeKey& o) const { return std::tie(w, u, v) < std::tie(o.w, o.u, o.v); }
};

EdgeKey key_of(const CompleteWeightedGraph& g, Vertex a, Vertex b) {
  return {g.weight(a, b), std::min(a, b), std::max(a, b)};
}

}  // namespace

SpanningTree minimum_spanning_tree(const CompleteWeightedGraph& g) {
  const int n = g.size();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<EdgeKey> best(static_cast<std::size_t>(n));
  std::vector<bool> in_tree(static_cast<std::size_t>(n), false);

  in_tree[0] = true;
  for (Vertex v = 1; v < n; ++v) {
    best[v] = key_of(g, 0, v);
    parent[v] = 0;
  }
  for (int added = 1; added < n; ++added) {
    Vertex next = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_tree[v] && (next == -1 || best[v] < best[next])) next = v;
    }
    in_tree[next] = true;
    for (Vertex v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      EdgeKey candidate = key_of(g, next, v);
      if (candidate < best[v]) {
        best[v] = candidate;
        parent[v] = next;
      }
    }
  }
  return SpanningTree::from_parents(g, std::move(parent));
}

Walk tree_traversal(const SpanningTree& t, Vertex root, ChildOrder order) {
  const int n = t.size();
  if (root < 0 || root >= n) throw Error(Errc::root_not_in_tree, "root " + std::to_string(root));

  auto adj = t.adjacency();
  if (order == ChildOrder::descending) {
    for (auto& list : adj) std::reverse(list.begin(), list.end());
  }

  Walk walk;
  walk.vertices.reserve(static_cast<std::size_t>(2 * n - 1));
  walk.vertices.push_back(root);

  // Stack frames: (vertex, its DFS parent, index of the next neighbour).
  struct Frame {
    Vertex v;
    Vertex from;
    std::size_t next;
  };
  std::vector<Frame> stack{{root, -1, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& nbrs = adj[top.v];
    if (top.next < nbrs.size()) {
      Vertex child = nbrs[top.next++];
      if (child == top.from) continue;
      walk.vertices.push_back(child);
      stack.push_back({child, top.v, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) walk.vertices.push_back(stack.back().v);
    }
  }
  walk.tags.assign(walk.edge_count(), EdgeTag::tree);
  return walk;
}

std::vector<Vertex> shortcut(const Walk& walk) {
  const auto& x = walk.vertices;
  if (x.empty() || !walk.closed()) throw Error(Errc::not_a_traversal, "walk must be nonempty and closed");

  std::map<Vertex, bool> seen;
  std::vector<Vertex> order;
  for (Vertex v : x) {
    if (!seen[v]) {
      seen[v] = true;
      order.push_back(v);
    }
  }
  const std::size_t m = order.size();
  if (x.size() != 2 * m - 1) {
    throw Error(Errc::not_a_traversal, "closed walk over " + std::to_string(m) + " vertices must have length " +
                                           std::to_string(2 * m - 1) + ", got " + std::to_string(x.size()));
  }
  std::map<VertexPair, int> uses;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    if (x[k] == x[k + 1]) throw Error(Errc::not_a_traversal, "walk repeats a vertex in place");
    ++uses[{std::min(x[k], x[k + 1]), std::max(x[k], x[k + 1])}];
  }
  // 2(m-1) steps over exactly m-1 distinct pairs, each used twice, in a
  // connected walk: the pairs form a spanning tree of the visited set.
  if (uses.size() != m - 1 ||
      std::any_of(uses.begin(), uses.end(), [](const auto& kv) { return kv.second != 2; })) {
    throw Error(Errc::not_a_traversal, "walk does not use every edge of a tree exactly twice");
  }
  return order;
}

SolveReport solve_mst2(const CompleteWeightedGraph& g, Vertex root, ChildOrder order) {
  if (g.size() < 3) throw Error(Errc::too_few_vertices, "mst2 needs n >= 3, got " + std::to_string(g.size()));
  return solve_mst2(g, classify(g), root, order);
}

SolveReport solve_mst2(const CompleteWeightedGraph& g, const RelaxationProfile& profile, Vertex root,
                       ChildOrder order) {
  if (g.size() < 3) throw Error(Errc::too_few_vertices, "mst2 needs n >= 3, got " + std::to_string(g.size()));
  SpanningTree tree = minimum_spanning_tree(g);
  Walk walk = tree_traversal(tree, root, order);
  Tour tour = make_tour(g, shortcut(walk));

  SolveReport report;
  report.method = Method::mst2;
  report.lower_bound = tree.weight();
  report.beta = profile.beta;
  report.gamma = profile.gamma;
  report.guarantee_factor = 2.0 * profile.gamma;
  report.achieved_ratio = tour.weight / tree.weight();
  if (!within_bound(tour.weight, report.guarantee_factor * tree.weight())) {
    throw Error(Errc::guarantee_violation, "w(S) = " + std::to_string(tour.weight) + " exceeds 2*gamma*w(T) = " +
                                               std::to_string(report.guarantee_factor * tree.weight()));
  }
  report.tour = std::move(tour);
  return report;
}

}  // namespace semitsp
