#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace qchrom::oracle {

namespace {

struct Code {
  std::uint64_t bits = 0;
  int len = 0;
  bool operator<(const Code& o) const { return len != o.len ? len < o.len : bits < o.bits; }
};

constexpr int kMax = 16;

Code rooted(const std::array<std::array<int, kMax>, kMax>& adj, const std::array<int, kMax>& deg, int v, int parent) {
  std::array<Code, kMax> kids{};
  int k = 0;
  for (int i = 0; i < deg[v]; ++i)
    if (adj[v][i] != parent) kids[k++] = rooted(adj, deg, adj[v][i], v);
  std::sort(kids.begin(), kids.begin() + k);
  Code out{1, 1};
  for (int i = 0; i < k; ++i) {
    out.bits = (out.bits << kids[i].len) | kids[i].bits;
    out.len += kids[i].len;
  }
  out.bits <<= 1;
  out.len += 1;
  return out;
}

}  // namespace

std::uint64_t tree_code(int d, const std::vector<std::pair<int, int>>& edges) {
  std::array<std::array<int, kMax>, kMax> adj{};
  std::array<int, kMax> deg{};
  for (auto [a, b] : edges) {
    adj[a][deg[a]++] = b;
    adj[b][deg[b]++] = a;
  }
  // Peel leaves down to the centre.
  std::array<int, kMax> left = deg;
  std::array<int, kMax> layer{}, next{};
  int layer_size = 0, remaining = d;
  for (int v = 0; v < d; ++v)
    if (left[v] <= 1) layer[layer_size++] = v;
  while (remaining > 2) {
    remaining -= layer_size;
    int next_size = 0;
    for (int i = 0; i < layer_size; ++i) {
      const int v = layer[i];
      left[v] = -1;
      for (int j = 0; j < deg[v]; ++j) {
        const int w = adj[v][j];
        if (left[w] > 0 && --left[w] == 1) next[next_size++] = w;
      }
    }
    layer = next;
    layer_size = next_size;
  }
  Code best = rooted(adj, deg, layer[0], -1);
  if (layer_size == 2) best = std::min(best, rooted(adj, deg, layer[1], -1));
  return (static_cast<std::uint64_t>(best.len) << 40) | best.bits;
}

std::uint64_t tree_code(const Graph& t) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : t.edges()) edges.emplace_back(e.u, e.v);
  return tree_code(t.order(), edges);
}

std::set<std::uint64_t> prufer_tree_codes(int d) {
  std::set<std::uint64_t> codes;
  if (d == 1) {
    codes.insert(tree_code(1, {}));
    return codes;
  }
  if (d == 2) {
    codes.insert(tree_code(2, {{0, 1}}));
    return codes;
  }
  std::vector<int> seq(d - 2, 0);
  std::vector<std::pair<int, int>> edges(d - 1);
  std::vector<int> degree(d);
  while (true) {
    // Linear-time decoding.
    std::fill(degree.begin(), degree.end(), 1);
    for (int x : seq) ++degree[x];
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < d - 2; ++i) {
      const int x = seq[i];
      edges[i] = {leaf, x};
      if (--degree[x] == 1 && x < ptr) {
        leaf = x;
      } else {
        ++ptr;
        while (degree[ptr] != 1) ++ptr;
        leaf = ptr;
      }
      --degree[edges[i].first];
    }
    int last = d - 1;
    edges[d - 2] = {leaf, last};
    codes.insert(tree_code(d, edges));
    int i = d - 3;
    while (i >= 0 && seq[i] == d - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return codes;
}

Integer strict_poset_partitions(const Poset& poset, int n) {
  const int d = poset.size();
  std::vector<int> m(d, 0);
  Integer count = 0;
  std::function<void(int, int)> walk = [&](int v, int left) {
    if (v == d) {
      if (left != 0) return;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (poset.less(i, j) && m[i] >= m[j]) return;
      ++count;
      return;
    }
    for (int x = 1; x <= left - (d - 1 - v); ++x) {
      m[v] = x;
      walk(v + 1, left - x);
    }
  };
  if (d == 0) return n == 0 ? 1 : 0;
  walk(0, n);
  return count;
}

std::vector<Integer> bounded_colourings(const Graph& g, const WeightVector& lambda, int max_weight) {
  const int d = g.order();
  std::vector<Integer> out(max_weight + 1, 0);
  std::vector<int> c(d, 0);
  std::function<void(int, int)> walk = [&](int v, int weight) {
    if (v == d) {
      ++out[weight];
      return;
    }
    for (int x = 1; weight + lambda[v] * x <= max_weight; ++x) {
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (g.has_edge(u, v) && c[u] == x) ok = false;
      if (!ok) continue;
      c[v] = x;
      walk(v + 1, weight + lambda[v] * x);
    }
  };
  walk(0, 0);
  return out;
}

Integer eval_in_n(const std::vector<Integer>& coeffs, long n) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Integer count_colourings(const Graph& g, int n) {
  const int d = g.order();
  std::vector<int> c(d, 0);
  Integer count = 0;
  std::function<void(int)> walk = [&](int v) {
    if (v == d) {
      ++count;
      return;
    }
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (g.has_edge(u, v) && c[u] == x) ok = false;
      if (!ok) continue;
      c[v] = x;
      walk(v + 1);
    }
  };
  walk(0);
  return count;
}

}  // namespace qchrom::oracle
