#include "semitsp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace semitsp {

namespace {

void check_size(int n, int lo, int hi, const char* what) {
  if (n < lo) throw Error(Errc::too_few_vertices, std::string(what) + " needs n >= " + std::to_string(lo));
  if (n > hi) {
    throw Error(Errc::too_large, std::string(what) + " limited to n <= " + std::to_string(hi) + ", got " +
                                     std::to_string(n));
  }
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Tour exact_tsp_held_karp(const CompleteWeightedGraph& g, int max_n) {
  const int n = g.size();
  check_size(n, 3, std::min(max_n, 24), "Held-Karp");

  // cost[S*m + v]: cheapest path starting at vertex v+1, visiting every
  // vertex of S (bit u <-> vertex u+1, v not in S), ending at vertex 0.
  const int m = n - 1;
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<double> cost(subsets * static_cast<std::size_t>(m), kInf);
  std::vector<std::uint8_t> next(subsets * static_cast<std::size_t>(m), 0);
  for (std::size_t s = 0; s < subsets; ++s) {
    for (int v = 0; v < m; ++v) {
      if (s >> v & 1) continue;
      const std::size_t at = s * m + v;
      if (s == 0) {
        cost[at] = g.weight(v + 1, 0);
        continue;
      }
      double top = kInf;
      int arg = -1;
      for (int u = 0; u < m; ++u) {
        if (!(s >> u & 1)) continue;
        const double c = g.weight(v + 1, u + 1) + cost[(s & ~(std::size_t{1} << u)) * m + u];
        if (c < top) {
          top = c;
          arg = u;
        }
      }
      cost[at] = top;
      next[at] = static_cast<std::uint8_t>(arg);
    }
  }

  const std::size_t all = subsets - 1;
  double top = kInf;
  int first = -1;
  for (int v = 0; v < m; ++v) {
    const double c = g.weight(0, v + 1) + cost[(all & ~(std::size_t{1} << v)) * m + v];
    if (c < top) {
      top = c;
      first = v;
    }
  }
  std::vector<Vertex> order{0};
  std::size_t s = all & ~(std::size_t{1} << first);
  int v = first;
  order.push_back(v + 1);
  while (s != 0) {
    const int u = next[s * m + v];
    order.push_back(u + 1);
    s &= ~(std::size_t{1} << u);
    v = u;
  }
  return canonical_tour(g, order);
}

EnumerationResult exact_tsp_enumerate(const CompleteWeightedGraph& g, int max_n) {
  const int n = g.size();
  check_size(n, 3, max_n, "tour enumeration");
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  EnumerationResult result;
  double best = kInf;
  do {
    if (order[1] > order[n - 1]) continue;
    ++result.cycles;
    const double w = tour_weight(g, order);
    if (w < best) {
      best = w;
      result.tour.order = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  result.tour.weight = best;
  return result;
}

double brute_gamma(const CompleteWeightedGraph& g, int max_n) {
  const int n = g.size();
  check_size(n, 1, max_n, "brute-force gamma");
  double best = 1.0;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  Vertex start = 0;
  // Depth-first enumeration of simple paths from `start`.
  auto extend = [&](auto&& self, Vertex tip, double length) -> void {
    for (Vertex y = 0; y < n; ++y) {
      if (on_path[y]) continue;
      const double len = length + g.weight(tip, y);
      best = std::max(best, g.weight(start, y) / len);
      on_path[y] = true;
      self(self, y, len);
      on_path[y] = false;
    }
  };
  for (start = 0; start < n; ++start) {
    on_path[start] = true;
    extend(extend, start, 0.0);
    on_path[start] = false;
  }
  return best;
}

MatchingEnumeration brute_force_matching(const CompleteWeightedGraph& g, std::span<const Vertex> s, int max_k) {
  const int k = static_cast<int>(s.size());
  if (k % 2 != 0 || k < 2) throw Error(Errc::odd_set_size, "need an even set of size >= 2");
  if (k > max_k) throw Error(Errc::set_too_large, "brute-force matching limited to " + std::to_string(max_k));

  std::vector<bool> used(static_cast<std::size_t>(k), false);
  std::vector<VertexPair> current;
  std::vector<VertexPair> best_pairs;
  double best = kInf;
  std::uint64_t count = 0;
  auto recurse = [&](auto&& self, double weight) -> void {
    int i = 0;
    while (i < k && used[i]) ++i;
    if (i == k) {
      ++count;
      if (weight < best) {
        best = weight;
        best_pairs = current;
      }
      return;
    }
    used[i] = true;
    for (int j = i + 1; j < k; ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.emplace_back(s[i], s[j]);
      self(self, weight + g.weight(s[i], s[j]));
      current.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  recurse(recurse, 0.0);
  return {Matching::from_pairs(g, best_pairs), count};
}

std::optional<Tour> best_hamiltonian_cycle(const WeightedGraph& g, int max_n) {
  const int n = g.size();
  check_size(n, 3, max_n, "Hamiltonian cycle search");
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::optional<Tour> best;
  do {
    if (order[1] > order[n - 1]) continue;
    double w = 0.0;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      auto e = g.weight(order[k], order[(k + 1) % n]);
      if (!e) ok = false;
      else w += *e;
    }
    if (ok && (!best || w < best->weight)) best = Tour{order, w};
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

}  // namespace semitsp
