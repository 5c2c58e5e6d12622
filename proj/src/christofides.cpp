#include "semitsp/christofides.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "semitsp/mst.hpp"
#include "semitsp/tolerance.hpp"

namespace semitsp {

namespace {

std::vector<bool> matching_tags(const Walk& walk, const Matching& matching) {
  const auto& x = walk.vertices;
  std::vector<bool> is_matching(walk.edge_count(), false);
  if (!walk.tags.empty()) {
    if (walk.tags.size() != walk.edge_count()) {
      throw Error(Errc::invalid_walk, "walk has " + std::to_string(walk.tags.size()) + " tags for " +
                                          std::to_string(walk.edge_count()) + " edges");
    }
    for (std::size_t k = 0; k < is_matching.size(); ++k) {
      if (walk.tags[k] != EdgeTag::matching) continue;
      if (!matching.contains(x[k], x[k + 1])) {
        throw Error(Errc::invalid_walk, "walk edge " + std::to_string(k) + " is tagged matching but (" +
                                            std::to_string(x[k]) + "," + std::to_string(x[k + 1]) +
                                            ") is not a matching pair");
      }
      is_matching[k] = true;
    }
  } else {
    for (std::size_t k = 0; k < is_matching.size(); ++k) is_matching[k] = matching.contains(x[k], x[k + 1]);
  }
  std::map<VertexPair, int> seen;
  for (std::size_t k = 0; k < is_matching.size(); ++k) {
    if (is_matching[k]) ++seen[std::minmax(x[k], x[k + 1])];
  }
  for (auto [a, b] : matching.pairs()) {
    auto it = seen.find({a, b});
    if (it == seen.end() || it->second != 1) {
      throw Error(Errc::invalid_walk, "matching pair (" + std::to_string(a) + "," + std::to_string(b) +
                                          ") must be traversed exactly once as a matching edge");
    }
  }
  return is_matching;
}

}  // namespace

std::vector<Vertex> enhanced_shortcut(const Walk& walk, const Matching& matching) {
  const auto& x = walk.vertices;
  if (!walk.closed() || x.size() < 3) throw Error(Errc::invalid_walk, "enhanced shortcut needs a closed walk");
  const auto is_matching = matching_tags(walk, matching);
  if (!is_matching[0]) {
    throw Error(Errc::walk_does_not_start_with_matching_edge,
                "first walk edge (" + std::to_string(x[0]) + "," + std::to_string(x[1]) + ") is not a matching edge");
  }

  const std::set<Vertex> distinct(x.begin(), x.end());
  const std::size_t n = distinct.size();
  std::set<Vertex> placed{x[0], x[1]};
  std::vector<Vertex> order{x[0], x[1]};
  std::size_t j = 2;
  while (order.size() < n) {
    if (j >= x.size()) {
      throw Error(Errc::matching_edge_lost, "walk exhausted with " + std::to_string(n - order.size()) +
                                                " vertices unplaced");
    }
    const Vertex v = x[j];
    if (!matching.mate(v)) {
      // Unmatched vertex: keep on first sighting only.
      if (placed.insert(v).second) order.push_back(v);
    } else {
      const bool leaves_on_matching = j + 1 < x.size() && is_matching[j];
      const bool enters_on_matching = is_matching[j - 1];
      // Matched vertex: keep it only where the walk uses its matching edge.
      if (leaves_on_matching || enters_on_matching) {
        if (!placed.insert(v).second) {
          throw Error(Errc::internal_invariant_violation,
                      "matching vertex " + std::to_string(v) + " reached its keep position twice");
        }
        order.push_back(v);
      }
    }
    ++j;
  }

  std::map<Vertex, std::size_t> position;
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  for (auto [a, b] : matching.pairs()) {
    const std::size_t pa = position.at(a);
    const std::size_t pb = position.at(b);
    const std::size_t gap = pa > pb ? pa - pb : pb - pa;
    if (gap != 1 && gap != n - 1) {
      throw Error(Errc::matching_edge_lost, "matching pair (" + std::to_string(a) + "," + std::to_string(b) +
                                                ") is not adjacent in the shortcut tour");
    }
  }
  return order;
}

double non_matching_weight(const CompleteWeightedGraph& g, std::span<const Vertex> order, const Matching& matching) {
  double total = 0.0;
  for (auto [a, b] : tour_edges(order)) {
    if (!matching.contains(a, b)) total += g.weight(a, b);
  }
  return total;
}

SolveReport solve_christofides(const CompleteWeightedGraph& g, int max_set_size) {
  if (g.size() < 3) {
    throw Error(Errc::too_few_vertices, "christofides needs n >= 3, got " + std::to_string(g.size()));
  }
  return solve_christofides(g, classify(g), max_set_size);
}

SolveReport solve_christofides(const CompleteWeightedGraph& g, const RelaxationProfile& profile, int max_set_size) {
  if (g.size() < 3) {
    throw Error(Errc::too_few_vertices, "christofides needs n >= 3, got " + std::to_string(g.size()));
  }
  SpanningTree tree = minimum_spanning_tree(g);
  std::vector<Vertex> odd = odd_vertices(tree);
  Matching matching = min_weight_perfect_matching(g, odd, max_set_size);
  const EulerMultigraph multigraph = EulerMultigraph::from_tree_and_matching(tree, matching);
  Walk walk = euler_walk_matching_first(multigraph, matching);
  Tour tour = make_tour(g, enhanced_shortcut(walk, matching));
  const double outside = non_matching_weight(g, tour.order, matching);

  if (!within_bound(outside, profile.gamma * tree.weight())) {
    throw Error(Errc::guarantee_violation, "non-matching tour weight " + std::to_string(outside) +
                                               " exceeds gamma*w(T) = " + std::to_string(profile.gamma * tree.weight()));
  }

  SolveReport report;
  report.method = Method::christofides;
  report.tour = tour;
  report.lower_bound = tree.weight();
  report.beta = profile.beta;
  report.gamma = profile.gamma;
  report.guarantee_factor = 1.5 * profile.gamma;
  report.achieved_ratio = tour.weight / tree.weight();
  report.trace = ChristofidesTrace{std::move(tree), std::move(odd), std::move(matching), std::move(walk),
                                   std::move(tour), outside};
  return report;
}

}  // namespace semitsp
