#include "qchrom/flats.hpp"

#include "qchrom/budget.hpp"

#include <algorithm>
#include <bit>

namespace qchrom {

namespace {

// Enumerates partitions of V into blocks that each induce a connected subgraph.
void connected_partitions(const Graph& g, VertexMask remaining, std::vector<VertexMask>& blocks,
                          std::vector<std::vector<VertexMask>>& out, std::uint64_t max_flats) {
  if (remaining == 0) {
    if (out.size() >= max_flats) throw BudgetExceeded("flat enumeration exceeds budget");
    out.push_back(blocks);
    return;
  }
  const VertexMask low = remaining & (~remaining + 1);
  const VertexMask rest = remaining & ~low;
  // Every subset of `rest`, including the empty one.
  VertexMask sub = rest;
  for (;;) {
    const VertexMask block = sub | low;
    if (g.induces_connected(block)) {
      blocks.push_back(block);
      connected_partitions(g, remaining & ~block, blocks, out, max_flats);
      blocks.pop_back();
    }
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
}

Flat flat_from_blocks(const Graph& g, std::vector<VertexMask> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](VertexMask a, VertexMask b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  Flat f;
  for (const auto& e : g.edges())
    for (VertexMask b : blocks)
      if (((b >> e.u) & 1u) && ((b >> e.v) & 1u)) {
        f.edges.push_back(e);
        break;
      }
  for (VertexMask b : blocks) {
    std::vector<int> block;
    for (VertexMask s = b; s != 0; s &= s - 1) block.push_back(std::countr_zero(s));
    f.blocks.push_back(std::move(block));
  }
  return f;
}

}  // namespace

std::vector<Flat> flats(const Graph& g, std::uint64_t max_flats) {
  std::vector<std::vector<VertexMask>> parts;
  std::vector<VertexMask> blocks;
  connected_partitions(g, g.all_vertices(), blocks, parts, max_flats);
  std::vector<Flat> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(flat_from_blocks(g, std::move(p)));
  std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

std::vector<std::pair<Flat, long long>> mobius_flats(const Graph& g, std::uint64_t max_flats) {
  std::vector<Flat> fl = flats(g, max_flats);
  const std::size_t n = fl.size();
  std::vector<std::vector<VertexMask>> masks(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& b : fl[i].blocks) {
      VertexMask m = 0;
      for (int v : b) m |= VertexMask{1} << v;
      masks[i].push_back(m);
    }
  // Refinement: every block of the lower flat sits inside some block above.
  auto below = [&](std::size_t lo, std::size_t hi) {
    for (VertexMask b : masks[lo]) {
      bool inside = false;
      for (VertexMask c : masks[hi])
        if ((b & c) == b) {
          inside = true;
          break;
        }
      if (!inside) return false;
    }
    return true;
  };
  std::vector<long long> mu(n, 0);
  // Flats are sorted by edge count, so everything strictly below index i
  // appears before it.
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      mu[i] = 1;
      continue;
    }
    long long s = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (fl[j].edges.size() < fl[i].edges.size() && below(j, i)) s += mu[j];
    mu[i] = -s;
  }
  std::vector<std::pair<Flat, long long>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::move(fl[i]), mu[i]);
  return out;
}

}  // namespace qchrom
