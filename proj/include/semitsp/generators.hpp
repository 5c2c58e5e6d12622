#pragma once

#include <cstdint>

#include "semitsp/graph.hpp"

namespace semitsp {

/// Five points with d = 1 for neighbours (|x-y| = 1), 20 for the two
/// ends (|x-y| = 4), 4 otherwise. beta = 4, gamma = 5.
CompleteWeightedGraph gen_example1();

/// Star tightness family: spokes from vertex 0 weigh 1, every other pair
/// weighs 2*gamma. Its unique MST is the star. Requires n >= 4, gamma >= 1.
CompleteWeightedGraph gen_star_family(int n, double gamma);

/// i.i.d. uniform weights in [low, high], deterministic per seed.
/// Since every path is at least `low` long and every edge at most `high`,
/// gamma <= high / low.
CompleteWeightedGraph gen_random(int n, std::uint64_t seed, double low, double high);

/// Planted-tree instance: a spine path with `branches` pendant paths,
/// tree edges uniform in [1, 2), all other pairs uniform in [3, 10). The
/// planted tree is the MST and has 2 + 2*branches odd vertices.
CompleteWeightedGraph gen_planted_tree(int n, int branches, std::uint64_t seed);

/// Random connected graph that is never complete: a random spanning tree
/// plus each remaining pair with probability `density`, weights uniform
/// in [low, high].
WeightedGraph gen_random_connected(int n, std::uint64_t seed, double density, double low, double high);

}  // namespace semitsp
