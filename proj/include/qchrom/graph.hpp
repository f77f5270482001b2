#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qchrom {

/// Undirected edge {u, v} with u < v. Vertices are 0-based internally; the
/// text and JSON formats are 1-based.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexMask = std::uint32_t;

/// Simple undirected graph on vertices 0..order()-1 with a strictly sorted
/// edge list (canonical form). Bitmask helpers limit graphs to 32 vertices.
class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  Graph() = default;
  /// Orders each pair, sorts, and rejects loops, duplicates and out-of-range
  /// endpoints with std::invalid_argument.
  Graph(int order, std::vector<Edge> edges);

  int order() const { return d_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexMask neighbors(int v) const { return adj_[v]; }
  VertexMask all_vertices() const { return d_ == 32 ? ~VertexMask{0} : (VertexMask{1} << d_) - 1; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  /// Position of e in edges(), or -1.
  int edge_index(Edge e) const;

  bool is_connected() const;
  bool is_tree() const { return d_ >= 1 && size() == d_ - 1 && is_connected(); }
  /// True when the vertices in `set` induce a connected subgraph.
  bool induces_connected(VertexMask set) const;
  bool is_independent(VertexMask set) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.d_ == b.d_ && a.edges_ == b.edges_; }
  friend auto operator<=>(const Graph& a, const Graph& b) {
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  int d_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
};

Graph path_graph(int d);
Graph star_graph(int d);
Graph complete_graph(int d);
Graph empty_graph(int d);
Graph cycle_graph(int d);

/// Positive integer vertex weights lambda_v.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws std::invalid_argument if any entry is < 1.
  explicit WeightVector(std::vector<int> weights);
  static WeightVector ones(int d) { return WeightVector(std::vector<int>(d, 1)); }

  int size() const { return static_cast<int>(w_.size()); }
  int operator[](int v) const { return w_[v]; }
  const std::vector<int>& values() const { return w_; }
  /// Lambda_V.
  int total() const;
  /// Lambda_W for the vertex set W.
  int total(VertexMask set) const;
  int total(std::span<const int> vertices) const;
  bool is_unit() const;

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<int> w_;
};

/// Vertex blocks; each block sorted ascending, blocks sorted by minimum.
using Partition = std::vector<std::vector<int>>;

/// Connected components of (V, S).
Partition components(const Graph& g, std::span<const Edge> subset);
/// Connected components of (V, S) for S given as a bitmask over edges()
/// (requires size() <= 64), as vertex masks sorted by minimum vertex.
std::vector<VertexMask> component_masks(const Graph& g, std::uint64_t edge_mask);

Graph delete_edge(const Graph& g, Edge e);
/// Merges e's endpoints into the lower one, relabels the rest to 0..d-2
/// preserving order, drops parallel edges and adds the two weights.
std::pair<Graph, WeightVector> contract_edge(const Graph& g, Edge e, const WeightVector& lambda);

/// Splits v into v' (kept at index v, weight lambda_v - 1) and v'' (appended at
/// index d, weight 1); both are joined to every neighbour of v. Throws
/// std::invalid_argument("nothing to split") when lambda_v == 1.
std::pair<Graph, WeightVector> expand_vertex(const Graph& g, int v, const WeightVector& lambda);
/// expand_vertex plus the edge {v', v''}.
std::pair<Graph, WeightVector> add_vertex_edge(const Graph& g, int v, const WeightVector& lambda);

/// Smallest k admitting a proper k-colouring, by exhaustive search.
int chromatic_number(const Graph& g);

}  // namespace qchrom
