#pragma once

#include "qchrom/budget.hpp"
#include "qchrom/poset.hpp"
#include "qchrom/qpoly.hpp"

#include <optional>

namespace qchrom {

/// Weighted lattice-point count of the dilated order polytope of a poset:
/// sum of q^(sum_i w_i m_i) over m in {0..n}^d with m_i <= m_j whenever i < j
/// in the poset. The interior version requires 0 < m_i < n and m_i < m_j.
/// Weights default to 1. Brute force; throws BudgetExceeded past
/// budget.max_vertices elements or budget.max_colors + 1 levels.
QPoly order_polytope_ehr(const Poset& poset, int n, bool interior,
                         const std::optional<WeightVector>& weights = std::nullopt, const Budget& budget = {});

/// Closed form for the closed polytope with unit weights:
/// sum over linear extensions sigma of q^(comaj sigma) [n + d - des sigma choose d]_q.
QPoly kim_stanton_ehr(const Poset& poset, int n);

}  // namespace qchrom
