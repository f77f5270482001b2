#include "qchrom/qrat.hpp"

#include <stdexcept>
#include <utility>

namespace qchrom {

QRat::QRat(QPoly num) : num_(std::move(num)), den_(QPoly::one()) {}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero divisor");
  normalize();
}

QRat QRat::rational(const Rational& r) {
  return QRat(QPoly::constant(r.get_num()), QPoly::constant(r.get_den()));
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly::one();
    return;
  }
  if (!den_.is_constant() && !num_.is_constant()) {
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  normalize_scalars();
}

void QRat::normalize_scalars() {
  if (num_.is_zero()) {
    den_ = QPoly::one();
    return;
  }
  Integer g = content(den_);
  if (g != 1) {
    Integer cn = content(num_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cn.get_mpz_t());
  }
  if (sgn(den_.leading()) < 0) g = -g;
  if (g != 1) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
}

QRat QRat::inverse() const {
  if (is_zero()) throw std::domain_error("zero divisor");
  QRat r(den_, num_, Canonical{});
  r.normalize_scalars();
  return r;
}

QRat QRat::substitute_q_inverse() const {
  if (is_zero()) return *this;
  const int a = num_.degree();
  const int b = den_.degree();
  QPoly n = num_.reflected(a);
  QPoly d = den_.reflected(b);
  // num(1/q) / den(1/q) = n * q^b / (d * q^a)
  if (b > a) n = n.shifted(b - a);
  else if (a > b) d = d.shifted(a - b);
  return QRat(std::move(n), std::move(d));
}

Rational QRat::eval(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (sgn(d) == 0) throw std::domain_error("coefficient pole");
  return num_.eval(q0) / d;
}

QRat QRat::operator-() const { return QRat(-num_, den_, Canonical{}); }

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  QPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize_scalars();
    return *this;
  }
  QPoly b1 = exact_div(den_, g);
  QPoly d1 = exact_div(o.den_, g);
  QPoly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = QRat();
  QPoly g2 = gcd(t, g);
  if (g2.degree() > 0) {
    num_ = exact_div(t, g2);
    den_ = b1 * exact_div(o.den_, g2);
  } else {
    num_ = std::move(t);
    den_ = b1 * o.den_;
  }
  normalize_scalars();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QRat();
  QPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!a.is_constant() && !d.is_constant()) {
    QPoly g1 = gcd(a, d);
    if (g1.degree() > 0) {
      a = exact_div(a, g1);
      d = exact_div(d, g1);
    }
  }
  if (!c.is_constant() && !b.is_constant()) {
    QPoly g2 = gcd(c, b);
    if (g2.degree() > 0) {
      c = exact_div(c, g2);
      b = exact_div(b, g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize_scalars();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat q_power(int k) {
  if (k >= 0) return QRat(QPoly::monomial(k));
  return QRat(QPoly::one(), QPoly::monomial(-k));
}

}  // namespace qchrom
