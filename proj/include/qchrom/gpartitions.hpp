#pragma once

#include "qchrom/budget.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/qrat.hpp"

#include <vector>

namespace qchrom {

/// Number of m in Z_{>0}^V with sum n and m_u != m_v on every edge. Ordered
/// tuples, so these are compositions rather than partitions. Brute force;
/// throws BudgetExceeded when C(n-1, d-1) exceeds budget.max_edge_subsets.
Integer count_gpartitions(const Graph& g, int n, const Budget& budget = {});

/// P_G(q) = sum_n p_G(n) q^n together with its first coefficients.
struct GPartitionSeries {
  static constexpr int kPrefixLength = 30;
  Graph graph;
  QRat series;
  std::vector<Integer> prefix;  ///< p_G(0), ..., p_G(kPrefixLength)
};

/// Builds P_G(q) from the (rho, sigma) pairs in two ways,
///   q^d sum q^(maj sigma^op) / ((1-q)...(1-q^d)) and
///   q^(C(d+1,2)) sum q^(-maj sigma) / ((1-q)...(1-q^d)),
/// and throws std::logic_error if they differ.
GPartitionSeries gpartition_series(const Graph& g);

/// The unit-weight leading coefficient from P_G: (q^2 - q)^d P_G(1/q).
QRat leading_coeff_via_gpartitions(const Graph& g);

/// (-1)^d q^d P_G(1/q) as literally stated for the leading coefficient; it
/// equals leading coefficient / (1 - q)^d. Kept to document the discrepancy.
QRat reflected_gpartition_series(const Graph& g);

/// True when P_G(q) equals the stable evaluation of the q-chromatic polynomial.
bool stable_bridge_check(const Graph& g);

}  // namespace qchrom
