#pragma once

// Exact small-instance solvers used as ground truth for the approximation
// pipelines and the relaxation constants.

#include <cstdint>
#include <optional>
#include <span>

#include "semitsp/graph.hpp"

namespace semitsp {

inline constexpr int kHeldKarpLimit = 20;
inline constexpr int kEnumerationLimit = 10;
inline constexpr int kBruteGammaLimit = 7;
inline constexpr int kBruteMatchingLimit = 14;

/// Held-Karp dynamic programming, O(n^2 2^n). Among exact ties the
/// lexicographically smallest order from vertex 0 is kept; the result is
/// then oriented so that order[1] < order[n-1].
Tour exact_tsp_held_karp(const CompleteWeightedGraph& g, int max_n = kHeldKarpLimit);

struct EnumerationResult {
  Tour tour;
  std::uint64_t cycles = 0;
};

/// Visits each of the (n-1)!/2 Hamiltonian cycles once (vertex 0 first,
/// order[1] < order[n-1]) and keeps the first lightest one.
EnumerationResult exact_tsp_enumerate(const CompleteWeightedGraph& g, int max_n = kEnumerationLimit);

/// Maximum over all simple paths x1..xk (x1 != xk) of
/// w(x1,xk) / sum w(x_i, x_{i+1}).
double brute_gamma(const CompleteWeightedGraph& g, int max_n = kBruteGammaLimit);

struct MatchingEnumeration {
  Matching matching;
  std::uint64_t matchings = 0;
};

/// Enumerates all (k-1)!! perfect matchings of `s`.
MatchingEnumeration brute_force_matching(const CompleteWeightedGraph& g, std::span<const Vertex> s,
                                         int max_k = kBruteMatchingLimit);

/// Lightest Hamiltonian cycle using only edges of `g`, by enumeration;
/// nullopt when `g` is not Hamiltonian.
std::optional<Tour> best_hamiltonian_cycle(const WeightedGraph& g, int max_n = kEnumerationLimit);

}  // namespace semitsp
