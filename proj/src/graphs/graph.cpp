#include "qchrom/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qchrom {

Graph::Graph(int order, std::vector<Edge> edges) : d_(order), edges_(std::move(edges)) {
  if (order < 0 || order > kMaxVertices)
    throw std::invalid_argument("vertex count must be in [0, " + std::to_string(kMaxVertices) + "]");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u + 1));
    if (e.u < 0 || e.v >= order) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  adj_.assign(order, 0);
  for (const auto& e : edges_) {
    adj_[e.u] |= VertexMask{1} << e.v;
    adj_[e.v] |= VertexMask{1} << e.u;
  }
}

int Graph::edge_index(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::induces_connected(VertexMask set) const {
  if (set == 0) return true;
  VertexMask seen = set & (~set + 1);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

bool Graph::is_connected() const { return induces_connected(all_vertices()); }

bool Graph::is_independent(VertexMask set) const {
  for (VertexMask s = set; s != 0; s &= s - 1)
    if (adj_[std::countr_zero(s)] & set) return false;
  return true;
}

Graph path_graph(int d) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < d; ++i) e.push_back({i, i + 1});
  return Graph(d, std::move(e));
}

Graph star_graph(int d) {
  std::vector<Edge> e;
  for (int i = 1; i < d; ++i) e.push_back({0, i});
  return Graph(d, std::move(e));
}

Graph complete_graph(int d) {
  std::vector<Edge> e;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) e.push_back({i, j});
  return Graph(d, std::move(e));
}

Graph empty_graph(int d) { return Graph(d, {}); }

Graph cycle_graph(int d) {
  if (d < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < d; ++i) e.push_back({i, i + 1});
  e.push_back({0, d - 1});
  return Graph(d, std::move(e));
}

WeightVector::WeightVector(std::vector<int> weights) : w_(std::move(weights)) {
  for (int w : w_)
    if (w < 1) throw std::invalid_argument("vertex weights must be positive integers");
}

int WeightVector::total() const { return std::accumulate(w_.begin(), w_.end(), 0); }

int WeightVector::total(VertexMask set) const {
  int t = 0;
  for (VertexMask s = set; s != 0; s &= s - 1) t += w_[std::countr_zero(s)];
  return t;
}

int WeightVector::total(std::span<const int> vertices) const {
  int t = 0;
  for (int v : vertices) t += w_[v];
  return t;
}

bool WeightVector::is_unit() const {
  return std::all_of(w_.begin(), w_.end(), [](int w) { return w == 1; });
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a < b) parent[b] = a;
    else if (b < a) parent[a] = b;
  }
  std::vector<int> parent;
};

std::vector<VertexMask> masks_from_sets(DisjointSets& ds, int d) {
  std::vector<VertexMask> by_root(d, 0);
  for (int v = 0; v < d; ++v) by_root[ds.find(v)] |= VertexMask{1} << v;
  std::vector<VertexMask> out;
  // Roots are block minima, so scanning roots in order sorts blocks by minimum.
  for (int v = 0; v < d; ++v)
    if (by_root[v] != 0) out.push_back(by_root[v]);
  return out;
}

}  // namespace

Partition components(const Graph& g, std::span<const Edge> subset) {
  DisjointSets ds(g.order());
  for (const auto& e : subset) {
    if (g.edge_index(e) < 0) throw std::invalid_argument("edge subset is not contained in the graph");
    ds.unite(e.u, e.v);
  }
  Partition out;
  for (VertexMask m : masks_from_sets(ds, g.order())) {
    std::vector<int> block;
    for (VertexMask s = m; s != 0; s &= s - 1) block.push_back(std::countr_zero(s));
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<VertexMask> component_masks(const Graph& g, std::uint64_t edge_mask) {
  if (g.size() > 64) throw std::invalid_argument("edge bitmask needs at most 64 edges");
  DisjointSets ds(g.order());
  for (std::uint64_t s = edge_mask; s != 0; s &= s - 1) {
    const Edge& e = g.edges()[std::countr_zero(s)];
    ds.unite(e.u, e.v);
  }
  return masks_from_sets(ds, g.order());
}

Graph delete_edge(const Graph& g, Edge e) {
  const int idx = g.edge_index(e);
  if (idx < 0) throw std::invalid_argument("edge not in graph");
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + idx);
  return Graph(g.order(), std::move(edges));
}

std::pair<Graph, WeightVector> contract_edge(const Graph& g, Edge e, const WeightVector& lambda) {
  if (e.u > e.v) std::swap(e.u, e.v);
  if (g.edge_index(e) < 0) throw std::invalid_argument("edge not in graph");
  const int keep = e.u, gone = e.v;
  auto relabel = [&](int x) {
    if (x == gone) x = keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> edges;
  for (const auto& f : g.edges()) {
    if (f == e) continue;
    Edge h{relabel(f.u), relabel(f.v)};
    if (h.u > h.v) std::swap(h.u, h.v);
    edges.push_back(h);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<int> w;
  for (int v = 0; v < g.order(); ++v) {
    if (v == gone) continue;
    w.push_back(v == keep ? lambda[keep] + lambda[gone] : lambda[v]);
  }
  return {Graph(g.order() - 1, std::move(edges)), WeightVector(std::move(w))};
}

std::pair<Graph, WeightVector> expand_vertex(const Graph& g, int v, const WeightVector& lambda) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  if (lambda[v] < 2) throw std::invalid_argument("nothing to split");
  const int fresh = g.order();
  std::vector<Edge> edges = g.edges();
  for (VertexMask s = g.neighbors(v); s != 0; s &= s - 1) edges.push_back({std::countr_zero(s), fresh});
  std::vector<int> w = lambda.values();
  w[v] -= 1;
  w.push_back(1);
  return {Graph(g.order() + 1, std::move(edges)), WeightVector(std::move(w))};
}

std::pair<Graph, WeightVector> add_vertex_edge(const Graph& g, int v, const WeightVector& lambda) {
  auto [h, w] = expand_vertex(g, v, lambda);
  std::vector<Edge> edges = h.edges();
  edges.push_back({v, g.order()});
  return {Graph(h.order(), std::move(edges)), std::move(w)};
}

namespace {

bool colorable(const Graph& g, int k, std::vector<int>& color, int v) {
  if (v == g.order()) return true;
  // Symmetry break: a vertex may open at most one new colour.
  int used = 0;
  for (int u = 0; u < v; ++u) used = std::max(used, color[u] + 1);
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    for (VertexMask s = g.neighbors(v) & ((VertexMask{1} << v) - 1); s != 0; s &= s - 1)
      if (color[std::countr_zero(s)] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, k, color, v + 1)) return true;
  }
  return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  std::vector<int> color(g.order(), -1);
  for (int k = 1;; ++k)
    if (colorable(g, k, color, 0)) return k;
}

}  // namespace qchrom
