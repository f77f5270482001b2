#include "qchrom/order_polytope.hpp"

#include "qchrom/qcombinatorics.hpp"

#include <stdexcept>

namespace qchrom {

QPoly order_polytope_ehr(const Poset& poset, int n, bool interior, const std::optional<WeightVector>& weights,
                         const Budget& budget) {
  if (n < 0) throw std::invalid_argument("dilation must be nonnegative");
  const int d = poset.size();
  if (weights && weights->size() != d) throw std::invalid_argument("weight vector length must equal the poset size");
  if (d > budget.max_vertices || n > budget.max_colors + 1) throw BudgetExceeded("oracle too large");
  const WeightVector w = weights ? *weights : WeightVector::ones(d);
  const int lo = interior ? 1 : 0;
  const int hi = interior ? n - 1 : n;
  if (d == 0) return QPoly::one();
  if (lo > hi) return QPoly();
  std::vector<Integer> counts(static_cast<std::size_t>(w.total()) * hi + 1, 0);
  std::vector<int> m(d, lo);
  while (true) {
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j)
        if (poset.less(i, j)) ok = interior ? m[i] < m[j] : m[i] <= m[j];
    if (ok) {
      int e = 0;
      for (int i = 0; i < d; ++i) e += w[i] * m[i];
      ++counts[e];
    }
    int i = 0;
    while (i < d && m[i] == hi) m[i++] = lo;
    if (i == d) break;
    ++m[i];
  }
  return QPoly(std::move(counts));
}

QPoly kim_stanton_ehr(const Poset& poset, int n) {
  if (n < 0) throw std::invalid_argument("dilation must be nonnegative");
  const int d = poset.size();
  const auto table = extension_table(poset);
  QPoly out;
  for (int des = 0; des < static_cast<int>(table.size()); ++des)
    for (int maj = 0; maj < static_cast<int>(table[des].size()); ++maj)
      if (table[des][maj] != 0)
        out += QPoly::monomial(d * des - maj, Integer(static_cast<unsigned long>(table[des][maj]))) *
               q_binomial(n + d - des, d);
  return out;
}

}  // namespace qchrom
