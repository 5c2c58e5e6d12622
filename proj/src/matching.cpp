#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "semitsp/christofides.hpp"

namespace semitsp {

std::vector<Vertex> odd_vertices(const SpanningTree& t) {
  std::vector<Vertex> odd;
  const auto deg = t.degrees();
  for (Vertex v = 0; v < t.size(); ++v) {
    if (deg[v] % 2 == 1) odd.push_back(v);
  }
  return odd;
}

namespace {

void check_matching_set(const CompleteWeightedGraph& g, std::span<const Vertex> s) {
  const int k = static_cast<int>(s.size());
  if (k % 2 != 0) throw Error(Errc::odd_set_size, "perfect matching needs an even set, got " + std::to_string(k));
  if (k < 2) throw Error(Errc::odd_set_size, "perfect matching needs at least two vertices");
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::invalid_params, "matching vertex set contains a repeated vertex");
  }
  if (sorted.front() < 0 || sorted.back() >= g.size()) {
    throw Error(Errc::invalid_vertex, "matching vertex out of range");
  }
}

}  // namespace

Matching min_weight_perfect_matching(const CompleteWeightedGraph& g, std::span<const Vertex> s, int max_set_size) {
  const int k = static_cast<int>(s.size());
  check_matching_set(g, s);
  if (k > max_set_size) {
    throw Error(Errc::set_too_large, "exact matching limited to " + std::to_string(max_set_size) +
                                         " vertices, got " + std::to_string(k));
  }
  return k <= kSubsetDpLimit ? matching_by_subset_dp(g, s) : matching_by_blossom(g, s);
}

Matching matching_by_subset_dp(const CompleteWeightedGraph& g, std::span<const Vertex> s) {
  check_matching_set(g, s);
  const int k = static_cast<int>(s.size());
  if (k > 30) throw Error(Errc::set_too_large, "subset DP needs k <= 30");
  const CompleteWeightedGraph sub = g.induced(s);

  // best[mask]: cheapest perfect matching of the members of mask. The
  // lowest member is always the one paired, so each matching is built once.
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<double> best(static_cast<std::size_t>(full) + 1, std::numeric_limits<double>::infinity());
  std::vector<std::uint8_t> partner(static_cast<std::size_t>(full) + 1, 0);
  best[0] = 0.0;
  for (std::uint32_t mask = 3; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const int i = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    double top = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1) {
      const int j = std::countr_zero(bits);
      const double candidate = best[rest & ~(std::uint32_t{1} << j)] + sub.weight(i, j);
      if (candidate < top) {
        top = candidate;
        arg = j;
      }
    }
    best[mask] = top;
    partner[mask] = static_cast<std::uint8_t>(arg);
  }

  std::vector<VertexPair> pairs;
  pairs.reserve(static_cast<std::size_t>(k / 2));
  for (std::uint32_t mask = full; mask != 0;) {
    const int i = std::countr_zero(mask);
    const int j = partner[mask];
    pairs.emplace_back(s[i], s[j]);
    mask &= ~((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
  }
  return Matching::from_pairs(g, std::move(pairs));
}

}  // namespace semitsp
