#include "qchrom/graph_enum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qchrom {

namespace {

int pair_bit(int a, int b) {
  if (a > b) std::swap(a, b);
  return b * (b - 1) / 2 + a;
}

Graph from_code(int d, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int b = 1; b < d; ++b)
    for (int a = 0; a < b; ++a)
      if ((code >> pair_bit(a, b)) & 1u) edges.push_back({a, b});
  return Graph(d, std::move(edges));
}

}  // namespace

std::uint64_t graph_canonical_code(const Graph& g) {
  const int d = g.order();
  if (d > 11) throw std::invalid_argument("canonical codes support at most 11 vertices");
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  auto degree = [&](int v) { return std::popcount(g.neighbors(v)); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return degree(a) > degree(b); });
  // Permute only inside runs of equal degree; label i goes to order[i].
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < d;) {
    int j = i;
    while (j < d && degree(order[j]) == degree(order[i])) ++j;
    runs.emplace_back(i, j);
    std::sort(order.begin() + i, order.begin() + j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> label(d);
  auto evaluate = [&] {
    for (int i = 0; i < d; ++i) label[order[i]] = i;
    std::uint64_t code = 0;
    for (const auto& e : g.edges()) code |= std::uint64_t{1} << pair_bit(label[e.u], label[e.v]);
    best = std::min(best, code);
  };
  // Odometer over the permutations of every run.
  while (true) {
    evaluate();
    std::size_t r = 0;
    for (; r < runs.size(); ++r) {
      auto [lo, hi] = runs[r];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (r == runs.size()) break;
  }
  return best;
}

std::vector<Graph> all_graphs(int d, bool connected_only) {
  if (d < 1 || d > 7) throw std::invalid_argument("graph enumeration supports 1 <= d <= 7");
  // Every graph on k+1 vertices is a graph on k vertices plus one vertex.
  std::map<std::uint64_t, Graph> level{{0, Graph(1, {})}};
  for (int k = 1; k < d; ++k) {
    std::map<std::uint64_t, Graph> grown;
    for (const auto& [code, g] : level)
      for (VertexMask nbrs = 0; nbrs < (VertexMask{1} << k); ++nbrs) {
        std::vector<Edge> edges = g.edges();
        for (VertexMask s = nbrs; s != 0; s &= s - 1) edges.push_back({std::countr_zero(s), k});
        Graph h(k + 1, std::move(edges));
        const auto c = graph_canonical_code(h);
        if (!grown.count(c)) grown.emplace(c, from_code(k + 1, c));
      }
    level = std::move(grown);
  }
  std::vector<std::pair<std::pair<int, std::uint64_t>, Graph>> sorted;
  for (auto& [code, g] : level)
    if (!connected_only || g.is_connected()) sorted.push_back({{g.size(), code}, g});
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& entry : sorted) out.push_back(std::move(entry.second));
  return out;
}

Graph random_graph(int d, double p, std::mt19937_64& rng, bool connected_only) {
  if (d < 1 || d > Graph::kMaxVertices) throw std::invalid_argument("vertex count out of range");
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<Edge> edges;
    for (int u = 0; u < d; ++u)
      for (int v = u + 1; v < d; ++v)
        if (coin(rng)) edges.push_back({u, v});
    Graph g(d, std::move(edges));
    if (!connected_only || g.is_connected()) return g;
  }
}

}  // namespace qchrom
