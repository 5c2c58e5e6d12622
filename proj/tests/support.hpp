#pragma once

// Independent reference implementations used to cross-check the library.
// Deliberately naive; none of them share code with src/.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "semitsp/error.hpp"
#include "semitsp/graph.hpp"

namespace testsupport {

using semitsp::CompleteWeightedGraph;
using semitsp::Vertex;

template <typename F>
std::optional<semitsp::Errc> errc_of(F&& f) {
  try {
    f();
  } catch (const semitsp::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline double naive_tour_weight(const CompleteWeightedGraph& g, const std::vector<Vertex>& order) {
  double s = 0;
  for (std::size_t i = 0; i < order.size(); ++i) s += g.weight(order[i], order[(i + 1) % order.size()]);
  return s;
}

// Full ordered-triple scan, y over every vertex.
inline double naive_beta(const CompleteWeightedGraph& g) {
  const int n = g.size();
  double best = 1.0;
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (x == z) continue;
      for (int y = 0; y < n; ++y) best = std::max(best, g.weight(x, z) / (g.weight(x, y) + g.weight(y, z)));
    }
  return best;
}

// Dijkstra from every source (dense O(n^2) variant).
inline std::vector<std::vector<double>> dijkstra_all(const CompleteWeightedGraph& g) {
  const int n = g.size();
  std::vector<std::vector<double>> out(n);
  for (int s = 0; s < n; ++s) {
    std::vector<double> d(n, INFINITY);
    std::vector<bool> done(n, false);
    d[s] = 0;
    for (int it = 0; it < n; ++it) {
      int u = -1;
      for (int v = 0; v < n; ++v)
        if (!done[v] && (u < 0 || d[v] < d[u])) u = v;
      done[u] = true;
      for (int v = 0; v < n; ++v)
        if (v != u && d[u] + g.weight(u, v) < d[v]) d[v] = d[u] + g.weight(u, v);
    }
    out[s] = d;
  }
  return out;
}

inline double kruskal_weight(const CompleteWeightedGraph& g) {
  const int n = g.size();
  struct E {
    double w;
    int u, v;
  };
  std::vector<E> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({g.weight(u, v), u, v});
  std::sort(es.begin(), es.end(), [](const E& a, const E& b) { return a.w < b.w; });
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  double total = 0;
  for (const auto& e : es) {
    int a = find(e.u), b = find(e.v);
    if (a == b) continue;
    p[a] = b;
    total += e.w;
  }
  return total;
}

// Minimum tour weight by permuting vertices 1..n-1.
inline double permutation_optimum(const CompleteWeightedGraph& g) {
  std::vector<Vertex> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  double best = INFINITY;
  do best = std::min(best, naive_tour_weight(g, order));
  while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

// Every matching pair must appear as a cyclically adjacent pair.
inline bool tour_keeps_pairs(const std::vector<Vertex>& order, const std::vector<semitsp::VertexPair>& pairs) {
  const std::size_t n = order.size();
  for (auto [a, b] : pairs) {
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      Vertex p = order[i], q = order[(i + 1) % n];
      found = (p == a && q == b) || (p == b && q == a);
    }
    if (!found) return false;
  }
  return true;
}

inline bool is_perm(std::vector<Vertex> order, int n) {
  std::sort(order.begin(), order.end());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(order.size()) != n || order[i] != i) return false;
  return true;
}

}  // namespace testsupport
