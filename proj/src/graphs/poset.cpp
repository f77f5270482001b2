#include "qchrom/poset.hpp"

#include <bit>
#include <stdexcept>

namespace qchrom {

namespace {

// Backtracking over edges in order, trying "false" before "true", rejecting a
// direction as soon as it closes a directed cycle. Visits orientations in
// lexicographic order of the direction vector.
class OrientationWalker {
 public:
  explicit OrientationWalker(const Graph& g) : g_(g), succ_(g.order(), 0), dir_(g.size()) {}

  template <class F>
  void run(F&& visit) {
    step(0, visit);
  }

 private:
  bool reaches(int from, int to) const {
    VertexMask seen = VertexMask{1} << from;
    VertexMask frontier = seen;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= succ_[std::countr_zero(f)];
      if ((next >> to) & 1u) return true;
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  template <class F>
  void step(int i, F& visit) {
    if (i == g_.size()) {
      visit(dir_, succ_);
      return;
    }
    const Edge& e = g_.edges()[i];
    for (bool forward : {false, true}) {
      const int tail = forward ? e.u : e.v;
      const int head = forward ? e.v : e.u;
      if (reaches(head, tail)) continue;
      succ_[tail] |= VertexMask{1} << head;
      dir_[i] = forward;
      step(i + 1, visit);
      succ_[tail] &= ~(VertexMask{1} << head);
    }
  }

  const Graph& g_;
  std::vector<VertexMask> succ_;
  std::vector<bool> dir_;
};

std::vector<std::pair<int, int>> arcs_from(const std::vector<VertexMask>& succ) {
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < static_cast<int>(succ.size()); ++a)
    for (VertexMask s = succ[a]; s != 0; s &= s - 1) arcs.emplace_back(a, std::countr_zero(s));
  return arcs;
}

// Depth-first walk over linear extensions in label space, tallying (des, maj).
class ExtensionCounter {
 public:
  ExtensionCounter(std::vector<VertexMask> pred, std::uint64_t* table, int stride)
      : pred_(std::move(pred)), n_(static_cast<int>(pred_.size())), table_(table), stride_(stride) {}

  void run() {
    if (n_ == 0) {
      ++table_[0];
      return;
    }
    walk(0, -1, 0, 0, 0);
  }

 private:
  void walk(VertexMask placed, int last, int pos, int des, int maj) {
    if (pos == n_) {
      ++table_[des * stride_ + maj];
      return;
    }
    for (int v = 0; v < n_; ++v) {
      const VertexMask bit = VertexMask{1} << v;
      if ((placed & bit) || (pred_[v] & ~placed)) continue;
      if (v < last) walk(placed | bit, v, pos + 1, des + 1, maj + pos);
      else walk(placed | bit, v, pos + 1, des, maj);
    }
  }

  std::vector<VertexMask> pred_;
  int n_;
  std::uint64_t* table_;
  int stride_;
};

ExtensionTable table_from_flat(const std::vector<std::uint64_t>& flat, int d, int stride) {
  ExtensionTable t(std::max(d, 1), std::vector<std::uint64_t>(stride, 0));
  for (int des = 0; des < static_cast<int>(t.size()); ++des)
    for (int m = 0; m < stride; ++m) t[des][m] = flat[des * stride + m];
  return t;
}

}  // namespace

Orientation::Orientation(std::shared_ptr<const Graph> graph, std::vector<bool> direction)
    : graph_(std::move(graph)), direction_(std::move(direction)) {
  if (static_cast<int>(direction_.size()) != graph_->size())
    throw std::invalid_argument("orientation length does not match edge count");
  // Kahn's algorithm: acyclic iff every vertex gets removed.
  std::vector<int> indeg(graph_->order(), 0);
  auto a = arcs();
  for (auto [t, h] : a) ++indeg[h];
  std::vector<int> stack;
  for (int v = 0; v < graph_->order(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for (auto [t, h] : a)
      if (t == v && --indeg[h] == 0) stack.push_back(h);
  }
  if (removed != graph_->order()) throw std::invalid_argument("orientation has a directed cycle");
}

std::vector<std::pair<int, int>> Orientation::arcs() const {
  std::vector<std::pair<int, int>> out;
  const auto& edges = graph_->edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (direction_[i]) out.emplace_back(edges[i].u, edges[i].v);
    else out.emplace_back(edges[i].v, edges[i].u);
  }
  return out;
}

std::vector<Orientation> acyclic_orientations(const Graph& g) {
  auto shared = std::make_shared<const Graph>(g);
  std::vector<Orientation> out;
  OrientationWalker(g).run([&](const std::vector<bool>& dir, const std::vector<VertexMask>&) {
    out.emplace_back(shared, dir);
  });
  return out;
}

std::uint64_t count_acyclic_orientations(const Graph& g) {
  std::uint64_t n = 0;
  OrientationWalker(g).run([&](const std::vector<bool>&, const std::vector<VertexMask>&) { ++n; });
  return n;
}

Poset::Poset(int size, std::span<const std::pair<int, int>> relations)
    : n_(size), above_(size, 0), label_(size, 0), element_(size, 0) {
  if (size < 0 || size > Graph::kMaxVertices) throw std::invalid_argument("poset size out of range");
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= size || b >= size) throw std::invalid_argument("relation out of range");
    above_[a] |= VertexMask{1} << b;
  }
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if ((above_[i] >> k) & 1u) above_[i] |= above_[k];
  for (int i = 0; i < n_; ++i)
    if ((above_[i] >> i) & 1u) throw std::invalid_argument("relations contain a cycle");

  std::vector<VertexMask> below(n_, 0);
  for (int a = 0; a < n_; ++a)
    for (VertexMask s = above_[a]; s != 0; s &= s - 1) below[std::countr_zero(s)] |= VertexMask{1} << a;
  VertexMask done = 0;
  for (int l = 0; l < n_; ++l) {
    for (int v = 0; v < n_; ++v) {
      if (((done >> v) & 1u) || (below[v] & ~done)) continue;
      label_[v] = l + 1;
      element_[l] = v;
      done |= VertexMask{1} << v;
      break;
    }
  }
}

Poset Poset::chain(int size) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < size; ++i) rel.emplace_back(i, i + 1);
  return Poset(size, rel);
}

std::vector<VertexMask> Poset::label_predecessors() const {
  std::vector<VertexMask> pred(n_, 0);
  for (int a = 0; a < n_; ++a)
    for (VertexMask s = above_[a]; s != 0; s &= s - 1) {
      const int b = std::countr_zero(s);
      pred[label_[b] - 1] |= VertexMask{1} << (label_[a] - 1);
    }
  return pred;
}

Poset poset_of(const Orientation& rho) {
  auto arcs = rho.arcs();
  return Poset(rho.graph().order(), arcs);
}

DescentStats descent_stats(std::span<const int> perm) {
  DescentStats s;
  const int d = static_cast<int>(perm.size());
  for (int j = 1; j < d; ++j) {
    if (perm[j] < perm[j - 1]) {
      s.descents.push_back(j);
      ++s.des;
      s.maj += j;
      s.comaj += d - j;
    }
  }
  s.asc = d > 0 ? d - 1 - s.des : 0;
  return s;
}

int maj_of_reverse(std::span<const int> perm) {
  std::vector<int> rev(perm.rbegin(), perm.rend());
  return descent_stats(rev).maj;
}

std::vector<LinearExtension> linear_extensions(const Poset& poset) {
  const int n = poset.size();
  const auto pred = poset.label_predecessors();
  std::vector<LinearExtension> out;
  std::vector<int> word;
  VertexMask placed = 0;
  auto walk = [&](auto& self) -> void {
    if (static_cast<int>(word.size()) == n) {
      out.push_back({word, descent_stats(word)});
      return;
    }
    for (int v = 0; v < n; ++v) {
      const VertexMask bit = VertexMask{1} << v;
      if ((placed & bit) || (pred[v] & ~placed)) continue;
      placed |= bit;
      word.push_back(v + 1);
      self(self);
      word.pop_back();
      placed &= ~bit;
    }
  };
  walk(walk);
  return out;
}

ExtensionTable extension_table(const Poset& poset) {
  const int d = poset.size();
  const int stride = d * (d - 1) / 2 + 1;
  std::vector<std::uint64_t> flat(static_cast<std::size_t>(std::max(d, 1)) * stride, 0);
  ExtensionCounter(poset.label_predecessors(), flat.data(), stride).run();
  return table_from_flat(flat, d, stride);
}

ExtensionTable orientation_extension_table(const Graph& g) {
  const int d = g.order();
  const int stride = d * (d - 1) / 2 + 1;
  std::vector<std::uint64_t> flat(static_cast<std::size_t>(std::max(d, 1)) * stride, 0);
  OrientationWalker(g).run([&](const std::vector<bool>&, const std::vector<VertexMask>& succ) {
    Poset p(d, arcs_from(succ));
    ExtensionCounter(p.label_predecessors(), flat.data(), stride).run();
  });
  return table_from_flat(flat, d, stride);
}

}  // namespace qchrom
