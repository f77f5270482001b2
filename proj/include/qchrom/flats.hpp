#pragma once

#include "qchrom/graph.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace qchrom {

/// A flat of the graphic arrangement: an edge set closed under adding edges
/// inside its own components. A flat is determined by its partition.
struct Flat {
  std::vector<Edge> edges;  ///< sorted
  Partition blocks;         ///< components of (V, edges)
  friend auto operator<=>(const Flat&, const Flat&) = default;
};

/// All flats, ordered by edge count and then lexicographically by edge list.
/// Throws BudgetExceeded (see budget.hpp) when more than max_flats exist.
std::vector<Flat> flats(const Graph& g, std::uint64_t max_flats = std::uint64_t{1} << 20);

/// mu(empty, S) for every flat S, from mu(0,0) = 1 and
/// mu(0,S) = -sum over flats S' strictly below S of mu(0,S').
std::vector<std::pair<Flat, long long>> mobius_flats(const Graph& g,
                                                     std::uint64_t max_flats = std::uint64_t{1} << 20);

}  // namespace qchrom
