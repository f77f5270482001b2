#include "qchrom/gpartitions.hpp"

#include "qchrom/chromatic.hpp"
#include "qchrom/poset.hpp"
#include "qchrom/qcombinatorics.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace qchrom {

Integer count_gpartitions(const Graph& g, int n, const Budget& budget) {
  const int d = g.order();
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (d == 0) return n == 0 ? 1 : 0;
  if (n < d) return 0;
  if (binomial(n - 1, d - 1) > Integer(static_cast<unsigned long>(budget.max_edge_subsets)))
    throw BudgetExceeded("too many compositions");
  std::vector<int> part(d, 0);
  std::uint64_t count = 0;
  std::function<void(int, int)> walk = [&](int v, int left) {
    if (v == d - 1) {
      for (VertexMask s = g.neighbors(v) & ((VertexMask{1} << v) - 1); s != 0; s &= s - 1)
        if (part[std::countr_zero(s)] == left) return;
      ++count;
      return;
    }
    // Leave at least one for each later vertex.
    for (int m = 1; m <= left - (d - 1 - v); ++m) {
      bool ok = true;
      for (VertexMask s = g.neighbors(v) & ((VertexMask{1} << v) - 1); s != 0 && ok; s &= s - 1)
        ok = part[std::countr_zero(s)] != m;
      if (!ok) continue;
      part[v] = m;
      walk(v + 1, left - m);
    }
  };
  walk(0, n);
  return Integer(static_cast<unsigned long>(count));
}

GPartitionSeries gpartition_series(const Graph& g) {
  const int d = g.order();
  const auto table = orientation_extension_table(g);
  const int max_maj = d * (d - 1) / 2;
  QPoly reversed, cleared;
  for (int des = 0; des < static_cast<int>(table.size()); ++des)
    for (int maj = 0; maj < static_cast<int>(table[des].size()); ++maj) {
      if (table[des][maj] == 0) continue;
      const Integer count(static_cast<unsigned long>(table[des][maj]));
      // maj of the reversed word is C(d,2) - comaj.
      reversed += QPoly::monomial(d + max_maj - (d * des - maj), count);
      cleared += QPoly::monomial(d * (d + 1) / 2 + max_maj - maj, count);
    }
  const QPoly denom = q_pochhammer(d);
  QRat first(reversed, denom);
  QRat second(cleared, denom.shifted(max_maj));
  if (first != second) throw std::logic_error("G-partition closed forms disagree");
  GPartitionSeries out{g, first, {}};
  for (const auto& c : series_prefix(first, GPartitionSeries::kPrefixLength)) {
    if (c.get_den() != 1) throw std::logic_error("G-partition series has a non-integer coefficient");
    out.prefix.push_back(c.get_num());
  }
  return out;
}

QRat leading_coeff_via_gpartitions(const Graph& g) {
  const int d = g.order();
  // (-1)^d q^d P_G(1/q) alone is c / (1-q)^d.
  return gpartition_series(g).series.substitute_q_inverse() * QRat(pow(QPoly{0, -1, 1}, d));
}

QRat reflected_gpartition_series(const Graph& g) {
  const int d = g.order();
  QRat c = gpartition_series(g).series.substitute_q_inverse() * q_power(d);
  return d % 2 ? -c : c;
}

bool stable_bridge_check(const Graph& g) {
  return gpartition_series(g).series == stable_evaluation(g, WeightVector::ones(g.order()));
}

}  // namespace qchrom
