#pragma once

#include "qchrom/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qchrom {

/// Isomorphism-invariant code: the smallest adjacency bitmask over all
/// relabelings that list vertices by decreasing degree. Requires order() <= 11.
std::uint64_t graph_canonical_code(const Graph& g);

/// One representative per isomorphism class on d vertices (1 <= d <= 7),
/// ordered by edge count and then by canonical code.
std::vector<Graph> all_graphs(int d, bool connected_only = false);

/// G(d, p) sample; with connected_only, resamples until connected.
Graph random_graph(int d, double p, std::mt19937_64& rng, bool connected_only = false);

}  // namespace qchrom
