#pragma once

#include "qchrom/qrat.hpp"

#include <span>
#include <utility>
#include <vector>

namespace qchrom {

/// Polynomial in x with coefficients in Q(q); coefficient j multiplies x^j.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<QRat> coeffs);

  static XPoly x();
  static XPoly constant(QRat c);
  /// c * x^j
  static XPoly monomial(int j, QRat c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<QRat>& coeffs() const { return c_; }
  QRat coeff(int j) const;
  const QRat& leading() const { return c_.back(); }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const XPoly& o);
  XPoly& operator*=(const QRat& k);

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(XPoly a, const QRat& k) { return a *= k; }
  friend XPoly operator*(const QRat& k, XPoly a) { return a *= k; }

  friend bool operator==(const XPoly& a, const XPoly& b) = default;

 private:
  void trim();
  std::vector<QRat> c_;
};

/// p(x0) by Horner's rule over Q(q).
QRat substitute_x(const XPoly& p, const QRat& x0);

/// Applies q -> 1/q to every coefficient.
XPoly substitute_q_inverse(const XPoly& p);

/// Specializes q to a rational value. The result is the coefficient list of a
/// polynomial in x over Q, trailing zeros trimmed. Throws
/// std::domain_error("coefficient pole") when q0 is a root of a denominator.
std::vector<Rational> eval_q(const XPoly& p, const Rational& q0);

/// Value of a rational-coefficient polynomial (ascending coefficients) at t.
Rational eval_rational_poly(std::span<const Rational> coeffs, const Rational& t);

/// The unique polynomial of degree < points.size() through every
/// (node, value) pair, computed exactly over Q(q) by Newton divided differences.
/// Throws std::invalid_argument when two nodes coincide.
XPoly lagrange_interpolate(std::span<const std::pair<QRat, QRat>> points);

/// Coefficients of q^0..q^N in the Maclaurin expansion of r. Throws
/// std::domain_error("pole at q=0") when the denominator vanishes at 0.
std::vector<Rational> series_prefix(const QRat& r, int N);

}  // namespace qchrom
