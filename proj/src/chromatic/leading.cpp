#include "qchrom/leading.hpp"

#include "qchrom/chromatic.hpp"
#include "qchrom/poset.hpp"
#include "qchrom/qcombinatorics.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace qchrom {

QRat leading_coeff(const Graph& g, const WeightVector& lambda) {
  const auto chi = chi_tilde(g, lambda);
  return chi.tilde.coeff(lambda.total());
}

QRat leading_coeff_tree(const Graph& t, const WeightVector& lambda) {
  if (!t.is_tree()) throw std::invalid_argument("graph is not a tree");
  if (lambda.size() != t.order()) throw std::invalid_argument("weight vector length must equal the vertex count");
  const int total = lambda.total();
  const QPoly common = q_pochhammer(total);
  QPoly sum;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << t.size()); ++s) {
    QPoly denom = QPoly::one();
    for (VertexMask block : component_masks(t, s)) denom *= QPoly::one() - QPoly::monomial(lambda.total(block));
    sum += exact_div(common, denom);
  }
  QPoly num = pow(QPoly{0, -1, 1}, total) * sum;
  if (t.order() % 2) num = -num;
  return QRat(num, common);
}

QRat leading_coeff_orientations(const Graph& g) {
  const int d = g.order();
  const auto table = orientation_extension_table(g);
  QPoly sum;
  for (const auto& row : table)
    for (int maj = 0; maj < static_cast<int>(row.size()); ++maj)
      if (row[maj] != 0) sum += QPoly::monomial(d + maj, Integer(static_cast<unsigned long>(row[maj])));
  return QRat(sum, q_factorial(d));
}

QRat leading_coeff_delcon(const Graph& t, const WeightVector& lambda) {
  if (!t.is_tree()) throw std::invalid_argument("graph is not a tree");
  if (lambda.size() != t.order()) throw std::invalid_argument("weight vector length must equal the vertex count");
  const QPoly qm1{-1, 1};
  std::function<QPoly(const Graph&, const std::vector<int>&)> scaled = [&](const Graph& h,
                                                                          const std::vector<int>& w) -> QPoly {
    if (h.order() == 1) return QPoly::monomial(w[0]) * pow(qm1, w[0] - 1) * q_factorial(w[0] - 1);
    int leaf = h.order() - 1;
    while (std::popcount(h.neighbors(leaf)) != 1) --leaf;
    const int parent = std::countr_zero(h.neighbors(leaf));
    std::vector<Edge> edges;
    for (const auto& e : h.edges())
      if (e.u != leaf && e.v != leaf) edges.push_back({e.u > leaf ? e.u - 1 : e.u, e.v > leaf ? e.v - 1 : e.v});
    const Graph rest(h.order() - 1, std::move(edges));
    std::vector<int> kept = w;
    kept.erase(kept.begin() + leaf);
    std::vector<int> merged = kept;
    merged[parent > leaf ? parent - 1 : parent] += w[leaf];
    int total = 0;
    for (int x : w) total += x;
    const int wl = w[leaf];
    const QPoly ratio = exact_div(q_factorial(total), q_int_poly(wl) * q_factorial(total - wl));
    return QPoly::monomial(wl) * pow(qm1, wl - 1) * ratio * scaled(rest, kept) - scaled(rest, merged);
  };
  return QRat(scaled(t, lambda.values()), q_factorial(lambda.total()));
}

QPoly normalized_fingerprint(const Graph& g) { return fingerprint_from_leading(leading_coeff_orientations(g), g.order()); }

QPoly fingerprint_from_leading(const QRat& c, int d) {
  const QRat scaled = c * QRat(q_factorial(d)) * q_power(-d);
  if (!scaled.is_polynomial() || !scaled.num().has_nonnegative_coeffs())
    throw std::logic_error("normalized leading coefficient is not a nonnegative polynomial");
  return scaled.num();
}

}  // namespace qchrom
