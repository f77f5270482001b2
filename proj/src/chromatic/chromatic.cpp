#include "qchrom/chromatic.hpp"

#include "qchrom/flats.hpp"
#include "qchrom/poset.hpp"
#include "qchrom/qcombinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace qchrom {

namespace {

using Wide = unsigned __int128;

Integer to_integer(Wide v) {
  const auto hi = static_cast<unsigned long>(v >> 64);
  const auto lo = static_cast<unsigned long>(v);
  Integer out = hi;
  out <<= 64;
  out += lo;
  return out;
}

QPoly from_counts(const std::vector<Wide>& counts) {
  std::vector<Integer> c;
  c.reserve(counts.size());
  for (Wide v : counts) c.push_back(to_integer(v));
  return QPoly(std::move(c));
}

void require_weights(const Graph& g, const WeightVector& lambda) {
  if (lambda.size() != g.order()) throw std::invalid_argument("weight vector length must equal the vertex count");
}

Graph remove_vertex(const Graph& g, int v) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v});
  }
  return Graph(g.order() - 1, std::move(edges));
}

WeightVector remove_weight(const WeightVector& lambda, int v) {
  auto w = lambda.values();
  w.erase(w.begin() + v);
  return WeightVector(std::move(w));
}

// Polynomials in x over Z[q], used to keep the flat sums denominator-free.
using ZX = std::vector<QPoly>;

ZX multiply(const ZX& a, const ZX& b) {
  if (a.empty() || b.empty()) return {};
  ZX out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// 1 - (1 + (q-1)x)^k, whose x^j coefficient is -C(k,j) (q-1)^j.
ZX block_numerator(int k) {
  ZX out(k + 1);
  const QPoly qm1{-1, 1};
  QPoly power = QPoly::one();
  for (int j = 1; j <= k; ++j) {
    power *= qm1;
    out[j] = power * Integer(-binomial(k, j));
  }
  return out;
}

// q^total * sum over keys B of coeff * prod_{k in B} (1 - (1+(q-1)x)^k) / (1 - q^k),
// with keys grouped by their multiset of block weights.
XPoly block_weight_sum(const std::map<std::vector<int>, Integer>& terms, int total) {
  const QPoly common = q_pochhammer(total);
  std::vector<ZX> numerators(total + 1);
  for (int k = 1; k <= total; ++k) numerators[k] = block_numerator(k);
  ZX acc(total + 1);
  for (const auto& [blocks, coeff] : terms) {
    if (coeff == 0) continue;
    QPoly denom = QPoly::one();
    ZX prod{QPoly::one()};
    for (int k : blocks) {
      denom *= QPoly::one() - QPoly::monomial(k);
      prod = multiply(prod, numerators[k]);
    }
    const QPoly cofactor = exact_div(common, denom) * coeff;
    for (std::size_t j = 0; j < prod.size(); ++j) acc[j] += prod[j] * cofactor;
  }
  std::vector<QRat> out;
  out.reserve(acc.size());
  for (auto& c : acc) out.emplace_back(c.shifted(total), common);
  return XPoly(std::move(out));
}

std::vector<int> block_weights(const WeightVector& lambda, const std::vector<VertexMask>& blocks) {
  std::vector<int> w;
  w.reserve(blocks.size());
  for (VertexMask b : blocks) w.push_back(lambda.total(b));
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

QPoly chi_enumerate(const Graph& g, const WeightVector& lambda, int n, const Budget& budget) {
  require_weights(g, lambda);
  if (n < 0) throw std::invalid_argument("number of colours must be nonnegative");
  const int d = g.order();
  if (d > budget.max_vertices || n > budget.max_colors) throw BudgetExceeded("oracle too large");
  std::vector<Wide> counts(static_cast<std::size_t>(lambda.total()) * n + 1, 0);
  std::vector<int> colour(d, 0);
  std::function<void(int, int)> walk = [&](int v, int weight) {
    if (v == d) {
      ++counts[weight];
      return;
    }
    for (int c = 1; c <= n; ++c) {
      bool ok = true;
      for (VertexMask s = g.neighbors(v) & ((VertexMask{1} << v) - 1); s != 0 && ok; s &= s - 1)
        ok = colour[std::countr_zero(s)] != c;
      if (!ok) continue;
      colour[v] = c;
      walk(v + 1, weight + lambda[v] * c);
    }
  };
  walk(0, 0);
  return from_counts(counts);
}

std::vector<QPoly> chi_color_classes(const Graph& g, const WeightVector& lambda, int n_max) {
  require_weights(g, lambda);
  if (n_max < 0) throw std::invalid_argument("number of colours must be nonnegative");
  const int d = g.order();
  if (d > 20) throw BudgetExceeded("colour-class transfer limited to 20 vertices");
  if (d * std::log2(std::max(n_max, 2)) > 120) throw BudgetExceeded("colouring counts exceed 120 bits");
  const std::size_t states = std::size_t{1} << d;
  std::vector<char> independent(states);
  std::vector<int> weight(states);
  for (std::size_t s = 0; s < states; ++s) {
    independent[s] = g.is_independent(static_cast<VertexMask>(s));
    weight[s] = lambda.total(static_cast<VertexMask>(s));
  }
  const std::size_t stride = static_cast<std::size_t>(lambda.total()) * n_max + 1;
  // f[U * stride + e]: colourings of U with the colours used so far, by weight e.
  std::vector<Wide> f(states * stride, 0), next(states * stride, 0);
  std::vector<int> top(states, -1), next_top(states, -1);
  f[0] = 1;
  top[0] = 0;
  std::vector<QPoly> out;
  out.push_back(d == 0 ? QPoly::one() : QPoly());
  for (int k = 1; k <= n_max; ++k) {
    std::fill(next.begin(), next.end(), 0);
    std::fill(next_top.begin(), next_top.end(), -1);
    for (std::size_t u = 0; u < states; ++u) {
      for (std::size_t i = u;; i = (i - 1) & u) {
        const std::size_t rest = u & ~i;
        if (independent[i] && top[rest] >= 0) {
          const int shift = k * weight[i];
          const Wide* src = &f[rest * stride];
          Wide* dst = &next[u * stride + shift];
          for (int e = 0; e <= top[rest]; ++e) dst[e] += src[e];
          next_top[u] = std::max(next_top[u], top[rest] + shift);
        }
        if (i == 0) break;
      }
    }
    std::swap(f, next);
    std::swap(top, next_top);
    const std::size_t all = states - 1;
    out.push_back(from_counts(std::vector<Wide>(f.begin() + all * stride, f.begin() + all * stride + top[all] + 1)));
  }
  return out;
}

QChromPoly chi_tilde(const Graph& g, const WeightVector& lambda, const Budget& budget) {
  require_weights(g, lambda);
  const int total = lambda.total();
  if (total > budget.max_total_weight) throw BudgetExceeded("total weight exceeds budget");
  const auto values = chi_color_classes(g, lambda, total + 2);
  std::vector<std::pair<QRat, QRat>> points;
  for (int n = 0; n <= total; ++n) points.emplace_back(q_int(n), QRat(values[n]));
  XPoly tilde = lagrange_interpolate(points);
  for (int n = total + 1; n <= total + 2; ++n)
    if (substitute_x(tilde, q_int(n)) != QRat(values[n])) throw std::logic_error("degree bound violated");
  const int degree = tilde.degree();
  return {g, lambda, std::move(tilde), degree};
}

XPoly chi_tilde_flats(const Graph& g, const WeightVector& lambda, const Budget& budget) {
  require_weights(g, lambda);
  std::map<std::vector<int>, Integer> terms;
  for (const auto& [flat, mu] : mobius_flats(g, budget.max_edge_subsets)) {
    std::vector<int> w;
    for (const auto& block : flat.blocks) w.push_back(lambda.total(block));
    std::sort(w.begin(), w.end());
    terms[w] += Integer(static_cast<long>(mu));
  }
  return block_weight_sum(terms, lambda.total());
}

XPoly chi_tilde_tree_subsets(const Graph& t, const WeightVector& lambda) {
  require_weights(t, lambda);
  if (!t.is_tree()) throw std::invalid_argument("graph is not a tree");
  const int m = t.size();
  if (m > 30) throw BudgetExceeded("too many edge subsets");
  std::map<std::vector<int>, Integer> terms;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s)
    terms[block_weights(lambda, component_masks(t, s))] += (std::popcount(s) % 2 ? -1 : 1);
  return block_weight_sum(terms, lambda.total());
}

XPoly chi_tilde_mobius(const Graph& g, const WeightVector& lambda, const Budget& budget) {
  if (g.is_tree()) {
    if ((std::uint64_t{1} << g.size()) > budget.max_edge_subsets) throw BudgetExceeded("too many edge subsets");
    return chi_tilde_tree_subsets(g, lambda);
  }
  return chi_tilde_flats(g, lambda, budget);
}

BetaExpansion beta_expansion(const Graph& g) {
  const int d = g.order();
  const auto table = orientation_extension_table(g);
  const int top = d * (d + 1) / 2;
  BetaExpansion out{d, {}};
  for (int des = 0; des < static_cast<int>(table.size()); ++des) {
    QPoly beta;
    for (int maj = 0; maj < static_cast<int>(table[des].size()); ++maj)
      if (table[des][maj] != 0) beta += QPoly::monomial(top - (d * des - maj), Integer(static_cast<unsigned long>(table[des][maj])));
    out.betas.push_back(std::move(beta));
  }
  while (!out.betas.empty() && out.betas.back().is_zero()) out.betas.pop_back();
  return out;
}

QPoly evaluate(const BetaExpansion& beta, int n) {
  if (n < 0) throw std::invalid_argument("number of colours must be nonnegative");
  QPoly out;
  for (int j = 0; j < static_cast<int>(beta.betas.size()); ++j) out += beta.betas[j] * q_binomial(n + j, beta.d);
  return out;
}

QPoly chi_orientations_formula(const Graph& g, int n) { return evaluate(beta_expansion(g), n); }

QPoly chi_loebl(const Graph& g, int n, const Budget& budget) {
  if (n < 0) throw std::invalid_argument("number of colours must be nonnegative");
  const int m = g.size();
  if (m >= 63 || (std::uint64_t{1} << m) > budget.max_edge_subsets) throw BudgetExceeded("too many edge subsets");
  std::map<std::vector<int>, long long> terms;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<int> sizes;
    for (VertexMask block : component_masks(g, s)) sizes.push_back(std::popcount(block));
    std::sort(sizes.begin(), sizes.end());
    terms[sizes] += std::popcount(s) % 2 ? -1 : 1;
  }
  QPoly out;
  for (const auto& [sizes, coeff] : terms) {
    if (coeff == 0) continue;
    QPoly prod = QPoly::constant(Integer(static_cast<long>(coeff)));
    for (int k : sizes) prod *= q_int_poly(n, k);
    out += prod;
  }
  return out;
}

QPoly chi_delcon(const Graph& g, const WeightVector& lambda, int n) {
  require_weights(g, lambda);
  if (n < 0) throw std::invalid_argument("number of colours must be nonnegative");
  std::map<std::pair<Graph, WeightVector>, QPoly> memo;
  std::function<QPoly(const Graph&, const WeightVector&)> solve = [&](const Graph& h, const WeightVector& w) -> QPoly {
    if (h.size() == 0) {
      QPoly prod = QPoly::one();
      for (int v = 0; v < h.order(); ++v) prod *= q_int_poly(n, w[v]).shifted(w[v]);
      return prod;
    }
    auto key = std::make_pair(h, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    QPoly result;
    int isolated = -1;
    for (int v = 0; v < h.order() && isolated < 0; ++v)
      if (h.neighbors(v) == 0) isolated = v;
    if (isolated >= 0) {
      // A disjoint union colours independently.
      result = q_int_poly(n, w[isolated]).shifted(w[isolated]) *
               solve(remove_vertex(h, isolated), remove_weight(w, isolated));
    } else {
      const Edge e = h.edges().front();
      auto [contracted, merged] = contract_edge(h, e, w);
      result = solve(delete_edge(h, e), w) - solve(contracted, merged);
    }
    memo.emplace(std::move(key), result);
    return result;
  };
  return solve(g, lambda);
}

std::vector<SignedGraph> reduce_to_unit_weights(const Graph& g, const WeightVector& lambda, const Budget& budget) {
  require_weights(g, lambda);
  const int total = lambda.total();
  if (total > budget.max_total_weight || total > Graph::kMaxVertices) throw BudgetExceeded("total weight exceeds budget");
  const int splits = total - g.order();
  if (splits >= 63 || (std::uint64_t{1} << splits) > budget.max_edge_subsets)
    throw BudgetExceeded("too many unit-weight graphs");
  std::vector<SignedGraph> out;
  std::function<void(int, const Graph&, const WeightVector&)> walk = [&](int sign, const Graph& h, const WeightVector& w) {
    int v = 0;
    while (v < w.size() && w[v] == 1) ++v;
    if (v == w.size()) {
      out.push_back({sign, h});
      return;
    }
    auto [expanded, we] = expand_vertex(h, v, w);
    walk(sign, expanded, we);
    auto [added, wa] = add_vertex_edge(h, v, w);
    walk(-sign, added, wa);
  };
  walk(1, g, lambda);
  return out;
}

QRat reciprocity_lhs(const QChromPoly& chi, int n) {
  if (n < 0) throw std::invalid_argument("number of colours must be nonnegative");
  const QRat x0 = q_int(-n).substitute_q_inverse();
  QRat value = substitute_x(substitute_q_inverse(chi.tilde), x0) * q_power(chi.lambda.total());
  return chi.graph.order() % 2 ? -value : value;
}

QRat reciprocity_lhs(const Graph& g, const WeightVector& lambda, int n) {
  return reciprocity_lhs(chi_tilde(g, lambda), n);
}

QPoly reciprocity_rhs(const Graph& g, const WeightVector& lambda, int n, const Budget& budget) {
  require_weights(g, lambda);
  if (n < 0) throw std::invalid_argument("number of colours must be nonnegative");
  const int d = g.order();
  if (d > budget.max_vertices || n > budget.max_colors) throw BudgetExceeded("oracle too large");
  std::vector<std::vector<std::pair<int, int>>> orientations;
  for (const auto& rho : acyclic_orientations(g)) orientations.push_back(rho.arcs());
  std::vector<Wide> counts(static_cast<std::size_t>(lambda.total()) * n + 1, 0);
  if (n == 0) return d == 0 ? QPoly::one() : QPoly();
  std::vector<int> colour(d, 1);
  while (true) {
    int weight = 0;
    for (int v = 0; v < d; ++v) weight += lambda[v] * colour[v];
    std::uint64_t compatible = 0;
    for (const auto& arcs : orientations) {
      bool ok = true;
      for (const auto& [t, h] : arcs)
        if (colour[t] > colour[h]) {
          ok = false;
          break;
        }
      compatible += ok;
    }
    counts[weight] += compatible;
    int v = 0;
    while (v < d && colour[v] == n) colour[v++] = 1;
    if (v == d) break;
    ++colour[v];
  }
  return from_counts(counts);
}

QRat stable_evaluation(const QChromPoly& chi) {
  return substitute_x(chi.tilde, QRat(QPoly::one(), QPoly{1, -1}));
}

QRat stable_evaluation(const Graph& g, const WeightVector& lambda) { return stable_evaluation(chi_tilde(g, lambda)); }

std::vector<Integer> chromatic_polynomial(const Graph& g) {
  std::map<Graph, std::vector<Integer>> memo;
  std::function<std::vector<Integer>(const Graph&)> solve = [&](const Graph& h) -> std::vector<Integer> {
    if (h.size() == 0) {
      std::vector<Integer> p(h.order() + 1, 0);
      p[h.order()] = 1;
      return p;
    }
    if (auto it = memo.find(h); it != memo.end()) return it->second;
    const Edge e = h.edges().front();
    auto a = solve(delete_edge(h, e));
    const auto b = solve(contract_edge(h, e, WeightVector::ones(h.order())).first);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    memo.emplace(h, a);
    return a;
  };
  return solve(g);
}

}  // namespace qchrom
