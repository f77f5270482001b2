#pragma once

#include "qchrom/qpoly.hpp"

namespace qchrom {

/// Element of the field Q(q), stored as a reduced quotient of two integer
/// polynomials.
///
/// Canonical form: gcd(num, den) is a unit in Q[q], the integer contents of
/// num and den are coprime, and den has a positive leading coefficient. Zero is
/// 0/1. Every constructor and operation returns canonical values, so equality
/// is structural.
class QRat {
 public:
  QRat() : den_(QPoly::one()) {}
  QRat(QPoly num);  // NOLINT(google-explicit-constructor): Z[q] embeds in Q(q)
  /// Throws std::domain_error("zero divisor") when den is zero.
  QRat(QPoly num, QPoly den);

  static QRat integer(const Integer& k) { return QRat(QPoly::constant(k)); }
  static QRat rational(const Rational& r);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  QRat inverse() const;
  /// c(q) -> c(1/q), cleared back into canonical form.
  QRat substitute_q_inverse() const;
  /// Value at a rational q0; throws std::domain_error("coefficient pole") at a
  /// root of the denominator.
  Rational eval(const Rational& q0) const;

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }

  friend bool operator==(const QRat& a, const QRat& b) = default;

 private:
  struct Canonical {};
  QRat(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  // Only content and sign need fixing; gcd(num, den) is already a unit.
  void normalize_scalars();

  QPoly num_;
  QPoly den_;
};

/// q^k as an element of Q(q) for any integer k.
QRat q_power(int k);

}  // namespace qchrom
