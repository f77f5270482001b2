#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <vector>

namespace qchrom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficient i multiplies q^i. Trailing zeros are always trimmed, so the
/// zero polynomial has an empty coefficient vector and structural equality is
/// polynomial equality.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Integer> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const Integer& c);
  /// c * q^k
  static QPoly monomial(int k, const Integer& c = 1);
  static QPoly one() { return constant(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int i) const;
  /// Leading coefficient. Requires a nonzero polynomial.
  const Integer& leading() const { return c_.back(); }

  Rational eval(const Rational& q0) const;
  Integer eval(const Integer& q0) const;

  /// Multiply by q^k, k >= 0.
  QPoly shifted(int k) const;
  /// q^n * p(1/q); requires n >= degree().
  QPoly reflected(int n) const;
  bool has_nonnegative_coeffs() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Integer& k);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Integer& k) { return a *= k; }
  friend QPoly operator*(const Integer& k, QPoly a) { return a *= k; }

  friend bool operator==(const QPoly& a, const QPoly& b) = default;
  /// Total order (by degree, then coefficients from the top); used for map keys.
  friend std::strong_ordering operator<=>(const QPoly& a, const QPoly& b);

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
Integer content(const QPoly& p);
/// p / content(p), with a positive leading coefficient.
QPoly primitive_part(const QPoly& p);

/// Quotient of an exact division over Z[q]; throws std::domain_error if b does
/// not divide a.
QPoly exact_div(const QPoly& a, const QPoly& b);
/// Exact division by an integer; throws std::domain_error if inexact.
QPoly exact_div(const QPoly& a, const Integer& k);
/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
QPoly pseudo_rem(const QPoly& a, const QPoly& b);

/// gcd over Q[q], normalized to be primitive with positive leading coefficient.
/// gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

QPoly pow(const QPoly& p, unsigned e);

}  // namespace qchrom
