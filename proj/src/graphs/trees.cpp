#include "qchrom/trees.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace qchrom {

namespace {

std::string encode(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (VertexMask s = t.neighbors(v); s != 0; s &= s - 1) {
    const int w = std::countr_zero(s);
    if (w != parent) kids.push_back(encode(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

}  // namespace

std::vector<int> tree_centers(const Graph& t) {
  if (!t.is_tree()) throw std::invalid_argument("graph is not a tree");
  const int d = t.order();
  if (d <= 2) {
    std::vector<int> all;
    for (int v = 0; v < d; ++v) all.push_back(v);
    return all;
  }
  std::vector<int> degree(d);
  for (int v = 0; v < d; ++v) degree[v] = std::popcount(t.neighbors(v));
  std::vector<int> layer;
  for (int v = 0; v < d; ++v)
    if (degree[v] == 1) layer.push_back(v);
  int left = d;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int leaf : layer)
      for (VertexMask s = t.neighbors(leaf); s != 0; s &= s - 1) {
        const int w = std::countr_zero(s);
        if (--degree[w] == 1) next.push_back(w);
      }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string tree_canonical_form(const Graph& t) {
  auto centers = tree_centers(t);
  std::string best = encode(t, centers[0], -1);
  if (centers.size() == 2) best = std::min(best, encode(t, centers[1], -1));
  return best;
}

Graph tree_from_canonical_form(std::string_view code) {
  std::vector<Edge> edges;
  std::vector<int> stack;
  int next = 0;
  for (char c : code) {
    if (c == '(') {
      if (!stack.empty()) edges.push_back({stack.back(), next});
      else if (next != 0) throw std::invalid_argument("canonical form has more than one root");
      stack.push_back(next++);
    } else if (c == ')') {
      if (stack.empty()) throw std::invalid_argument("unbalanced canonical form");
      stack.pop_back();
    } else {
      throw std::invalid_argument("canonical form may only contain parentheses");
    }
  }
  if (!stack.empty() || next == 0) throw std::invalid_argument("unbalanced canonical form");
  return Graph(next, std::move(edges));
}

std::vector<Graph> generate_trees(int d) {
  if (d < 1 || d > 12) throw std::invalid_argument("tree generation supports 1 <= d <= 12");
  // Every tree on k+1 vertices is a tree on k vertices plus a leaf, so growing
  // each class representative by one leaf everywhere reaches every class.
  std::set<std::string> level{"()"};
  for (int k = 1; k < d; ++k) {
    std::set<std::string> grown;
    for (const auto& code : level) {
      Graph t = tree_from_canonical_form(code);
      for (int v = 0; v < k; ++v) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({v, k});
        grown.insert(tree_canonical_form(Graph(k + 1, std::move(edges))));
      }
    }
    level = std::move(grown);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& code : level) out.push_back(tree_from_canonical_form(code));
  return out;
}

}  // namespace qchrom
