#pragma once

#include "qchrom/budget.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/xpoly.hpp"

#include <vector>

namespace qchrom {

// Every routine here computes, or cross-checks, the weighted colouring sum
//
//   chi_G^lambda(q, n) = sum over proper c : V -> [n] of q^(sum_v lambda_v c(v))
//
// or its interpolating polynomial chi~ in x = [n]_q over Q(q).

/// Brute-force oracle: walks every proper n-colouring.
/// Throws BudgetExceeded("oracle too large") beyond budget.max_vertices or
/// budget.max_colors.
QPoly chi_enumerate(const Graph& g, const WeightVector& lambda, int n, const Budget& budget = {});

/// chi(q, 0), ..., chi(q, n_max) by a transfer over colour classes: colour k
/// takes an independent set I and contributes q^(k * Lambda_I). Exact and
/// O(3^d n_max); used to feed interpolation past the oracle's colour budget.
std::vector<QPoly> chi_color_classes(const Graph& g, const WeightVector& lambda, int n_max);

/// The q-chromatic polynomial chi~ with chi~([n]_q) = chi(q, n).
struct QChromPoly {
  Graph graph;
  WeightVector lambda;
  XPoly tilde;
  int degree = -1;
};

/// Interpolates chi at the nodes [0]_q, ..., [Lambda_V]_q and verifies the
/// result at [Lambda_V + 1]_q and [Lambda_V + 2]_q. A failed verification
/// throws std::logic_error("degree bound violated").
QChromPoly chi_tilde(const Graph& g, const WeightVector& lambda, const Budget& budget = {});

/// q^Lambda_V * sum over flats S of mu(0,S) * prod over blocks C of
/// (1 - (1 + qx - x)^Lambda_C) / (1 - q^Lambda_C). Trees take the all-subsets
/// signed form (chi_tilde_tree_subsets).
XPoly chi_tilde_mobius(const Graph& g, const WeightVector& lambda, const Budget& budget = {});
/// The flat-lattice form for any graph, never specialised.
XPoly chi_tilde_flats(const Graph& g, const WeightVector& lambda, const Budget& budget = {});
/// Tree form: sum over all S subset of E with sign (-1)^|S|. Requires a tree.
XPoly chi_tilde_tree_subsets(const Graph& t, const WeightVector& lambda);

/// lambda = 1 only: sum over acyclic orientations rho and linear extensions
/// sigma of Pi_rho of q^(C(d+1,2) - comaj sigma) [n + des sigma choose d]_q.
QPoly chi_orientations_formula(const Graph& g, int n);

/// Inclusion-exclusion over edge subsets A:
///   sum_A (-1)^|A| prod over components W of (V, A) of [n]_{q^|W|}.
/// This convention has no q^d prefactor: chi_enumerate(g, 1, n) equals
/// q^d * chi_loebl(g, n). Throws BudgetExceeded beyond budget.max_edge_subsets.
QPoly chi_loebl(const Graph& g, int n, const Budget& budget = {});

/// Deletion-contraction on the lowest edge, memoised on (graph, weights);
/// an edgeless graph contributes prod_v q^lambda_v [n]_{q^lambda_v}.
QPoly chi_delcon(const Graph& g, const WeightVector& lambda, int n);

struct SignedGraph {
  int sign = 1;
  Graph graph;
};

/// Expresses chi^lambda_G as sum of sign * chi^1_H by repeated vertex
/// expansion (chi_G = chi_exp - chi_add). Every H has Lambda_V vertices.
/// Throws BudgetExceeded when Lambda_V exceeds budget.max_total_weight or the
/// output would exceed budget.max_edge_subsets graphs.
std::vector<SignedGraph> reduce_to_unit_weights(const Graph& g, const WeightVector& lambda,
                                                const Budget& budget = {});

/// chi^1_G(q, n) = sum_j betas[j] [n + j choose d]_q.
struct BetaExpansion {
  int d = 0;
  std::vector<QPoly> betas;
};

BetaExpansion beta_expansion(const Graph& g);
QPoly evaluate(const BetaExpansion& beta, int n);

/// (-1)^d q^Lambda chi~(1/q, [-n]_{1/q}), computed symbolically.
QRat reciprocity_lhs(const QChromPoly& chi, int n);
QRat reciprocity_lhs(const Graph& g, const WeightVector& lambda, int n);
/// Brute force over pairs (c, rho) of an n-colouring and a compatible acyclic
/// orientation (c weakly increases along every arc), weighted q^(sum lambda c).
QPoly reciprocity_rhs(const Graph& g, const WeightVector& lambda, int n, const Budget& budget = {});

/// chi~(q, 1/(1-q)): the generating function of all proper colourings with
/// positive integer colours.
QRat stable_evaluation(const QChromPoly& chi);
QRat stable_evaluation(const Graph& g, const WeightVector& lambda);

/// Classical chromatic polynomial by integer deletion-contraction; entry k is
/// the coefficient of n^k.
std::vector<Integer> chromatic_polynomial(const Graph& g);

}  // namespace qchrom
