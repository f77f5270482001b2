#pragma once

#include "qchrom/graph.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace qchrom {

/// An acyclic orientation of a graph. direction[i] refers to graph().edges()[i]:
/// true orients it low -> high endpoint.
class Orientation {
 public:
  /// Throws std::invalid_argument if the directions create a directed cycle or
  /// do not match the edge count.
  Orientation(std::shared_ptr<const Graph> graph, std::vector<bool> direction);

  const Graph& graph() const { return *graph_; }
  const std::vector<bool>& direction() const { return direction_; }
  /// Arcs as (tail, head) pairs in edge order.
  std::vector<std::pair<int, int>> arcs() const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<bool> direction_;
};

/// All acyclic orientations, ordered lexicographically by direction vector
/// (false < true).
std::vector<Orientation> acyclic_orientations(const Graph& g);
std::uint64_t count_acyclic_orientations(const Graph& g);

/// Finite strict partial order on elements 0..size()-1, stored transitively
/// closed, together with a natural labeling: the topological order that always
/// emits the smallest available element. Labels are 1..size().
class Poset {
 public:
  /// Closes `relations` (pairs a < b) transitively. Throws
  /// std::invalid_argument if they contain a cycle.
  Poset(int size, std::span<const std::pair<int, int>> relations);

  static Poset antichain(int size) { return Poset(size, {}); }
  static Poset chain(int size);

  int size() const { return n_; }
  bool less(int a, int b) const { return (above_[a] >> b) & 1u; }
  /// Elements strictly above a.
  VertexMask above(int a) const { return above_[a]; }
  /// natural_labeling()[element] in 1..size().
  const std::vector<int>& natural_labeling() const { return label_; }
  /// Inverse of the labeling: element carrying label l is element_of_label()[l - 1].
  const std::vector<int>& element_of_label() const { return element_; }
  /// Predecessor masks indexed by label-1, over label-1 bit positions.
  std::vector<VertexMask> label_predecessors() const;

 private:
  int n_ = 0;
  std::vector<VertexMask> above_;
  std::vector<int> label_;
  std::vector<int> element_;
};

Poset poset_of(const Orientation& rho);

struct DescentStats {
  std::vector<int> descents;  ///< Des(sigma), 1-based positions
  int des = 0;
  int asc = 0;
  int maj = 0;
  int comaj = 0;
};

/// Statistics of a permutation given as its one-line notation.
DescentStats descent_stats(std::span<const int> perm);

/// maj of the reversed word sigma^op(j) = sigma(d + 1 - j).
int maj_of_reverse(std::span<const int> perm);

struct LinearExtension {
  std::vector<int> perm;  ///< labels 1..d in extension order
  DescentStats stats;
};

/// All linear extensions as label words, lexicographically ordered.
std::vector<LinearExtension> linear_extensions(const Poset& poset);

/// Counts of linear extensions by (des, maj): table[des][maj], with
/// des in [0, d-1] and maj in [0, d(d-1)/2].
using ExtensionTable = std::vector<std::vector<std::uint64_t>>;
ExtensionTable extension_table(const Poset& poset);

/// extension_table summed over the posets of all acyclic orientations of g,
/// i.e. over every pair (rho, sigma).
ExtensionTable orientation_extension_table(const Graph& g);

}  // namespace qchrom
