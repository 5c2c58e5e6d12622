#include "semitsp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace semitsp {

CompleteWeightedGraph gen_example1() {
  SquareMatrix w(5);
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      const int gap = std::abs(x - y);
      w(x, y) = gap == 0 ? 0.0 : gap == 1 ? 1.0 : gap == 4 ? 20.0 : 4.0;
    }
  }
  return CompleteWeightedGraph(std::move(w));
}

CompleteWeightedGraph gen_star_family(int n, double gamma) {
  if (n < 4) throw Error(Errc::invalid_params, "star family needs n >= 4, got " + std::to_string(n));
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) throw Error(Errc::invalid_params, "star family needs gamma >= 1");
  SquareMatrix w(n, 2.0 * gamma);
  for (int v = 0; v < n; ++v) {
    w(v, v) = 0.0;
    if (v > 0) w(0, v) = w(v, 0) = 1.0;
  }
  return CompleteWeightedGraph(std::move(w));
}

CompleteWeightedGraph gen_random(int n, std::uint64_t seed, double low, double high) {
  if (n < 3) throw Error(Errc::invalid_params, "random instances need n >= 3");
  if (!(low > 0.0) || !(high >= low) || !std::isfinite(high)) {
    throw Error(Errc::invalid_params, "random instances need 0 < low <= high");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(low, high);
  SquareMatrix w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) w(i, j) = w(j, i) = low == high ? low : weight(rng);
  }
  return CompleteWeightedGraph(std::move(w));
}

CompleteWeightedGraph gen_planted_tree(int n, int branches, std::uint64_t seed) {
  if (branches < 0 || n < 2 * branches + 3) {
    throw Error(Errc::invalid_params, "planted tree needs n >= 2*branches + 3");
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);

  // Spine 0..spine-1; branch b hangs off spine vertex 1 + b and gets an
  // equal share of the remaining vertices (at least one each).
  const int spine = std::max(branches + 2, n / 2);
  std::vector<VertexPair> tree;
  for (int k = 1; k < spine; ++k) tree.emplace_back(k - 1, k);
  int next = spine;
  for (int b = 0; b < branches; ++b) {
    const int share = (n - spine) / branches + (b < (n - spine) % branches ? 1 : 0);
    int anchor = 1 + b;
    for (int k = 0; k < share; ++k) {
      tree.emplace_back(anchor, next);
      anchor = next++;
    }
  }
  for (; next < n; ++next) tree.emplace_back(next - 1, next);  // branches == 0: extend the spine

  std::uniform_real_distribution<double> light(1.0, 2.0);
  std::uniform_real_distribution<double> heavy(3.0, 10.0);
  SquareMatrix w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) w(i, j) = w(j, i) = heavy(rng);
  }
  for (auto [a, b] : tree) {
    const double x = light(rng);
    w(label[a], label[b]) = w(label[b], label[a]) = x;
  }
  return CompleteWeightedGraph(std::move(w));
}

WeightedGraph gen_random_connected(int n, std::uint64_t seed, double density, double low, double high) {
  if (n < 3) throw Error(Errc::invalid_params, "random graphs need n >= 3");
  if (!(low > 0.0) || !(high >= low) || !(density >= 0.0 && density <= 1.0)) {
    throw Error(Errc::invalid_params, "need 0 < low <= high and density in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(low, high);
  std::bernoulli_distribution keep(density);

  std::vector<std::vector<bool>> present(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<VertexPair> pairs;
  // Random recursive tree: vertex v attaches to a uniformly chosen earlier vertex.
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int k = 1; k < n; ++k) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    const Vertex a = perm[k], b = perm[pick(rng)];
    present[a][b] = present[b][a] = true;
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<VertexPair> spare;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (present[a][b]) continue;
      if (keep(rng)) pairs.emplace_back(a, b);
      else spare.emplace_back(a, b);
    }
  }
  if (spare.empty()) {
    // Drop one non-tree pair so the graph stays non-complete.
    pairs.pop_back();
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({a, b, weight(rng)});
  return WeightedGraph(n, std::move(edges));
}

}  // namespace semitsp
