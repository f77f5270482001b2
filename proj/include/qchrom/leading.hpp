#pragma once

#include "qchrom/graph.hpp"
#include "qchrom/qrat.hpp"

namespace qchrom {

/// Coefficient of x^Lambda_V in chi_tilde (by interpolation).
QRat leading_coeff(const Graph& g, const WeightVector& lambda);

/// Closed form for trees:
///   (-1)^d (q^2 - q)^Lambda_V * sum over S subset of E of prod over
///   components C of (V, S) of 1 / (1 - q^Lambda_C).
QRat leading_coeff_tree(const Graph& t, const WeightVector& lambda);

/// lambda = 1: sum over pairs (rho, sigma) of q^(d + maj sigma), over [d]_q!.
QRat leading_coeff_orientations(const Graph& g);

/// Leaf deletion-contraction for trees. With F = [Lambda_V]_q! * c, removing
/// leaf l attached to p gives
///   F(T, lambda) = q^lambda_l (q-1)^(lambda_l - 1) [Lambda_V]! / ([lambda_l] [Lambda_V - lambda_l]!) F(T - l, lambda')
///                  - F(T - l, lambda' with lambda_l added to p),
/// and a single vertex of weight w has F = q^w (q-1)^(w-1) [w-1]_q!.
QRat leading_coeff_delcon(const Graph& t, const WeightVector& lambda);

/// [d]_q! / q^d times the unit-weight leading coefficient, i.e. the number of
/// pairs (rho, sigma) counted by q^(maj sigma). Computed from a maj histogram.
QPoly normalized_fingerprint(const Graph& g);

/// [d]_q! c / q^d for a given leading coefficient. Throws std::logic_error
/// unless the result is a polynomial with nonnegative coefficients.
QPoly fingerprint_from_leading(const QRat& c, int d);

}  // namespace qchrom
