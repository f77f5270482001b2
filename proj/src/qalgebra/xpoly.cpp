#include "qchrom/xpoly.hpp"

#include <stdexcept>
#include <utility>

namespace qchrom {

XPoly::XPoly(std::vector<QRat> coeffs) : c_(std::move(coeffs)) { trim(); }

XPoly XPoly::x() { return monomial(1, QRat(QPoly::one())); }

XPoly XPoly::constant(QRat c) { return XPoly(std::vector<QRat>{std::move(c)}); }

XPoly XPoly::monomial(int j, QRat c) {
  std::vector<QRat> v(static_cast<std::size_t>(j) + 1);
  v[j] = std::move(c);
  return XPoly(std::move(v));
}

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QRat XPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return {};
  return c_[j];
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QRat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return XPoly(std::move(v));
}

XPoly& XPoly::operator*=(const XPoly& o) { return *this = *this * o; }

XPoly& XPoly::operator*=(const QRat& k) {
  if (k.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

QRat substitute_x(const XPoly& p, const QRat& x0) {
  QRat acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

XPoly substitute_q_inverse(const XPoly& p) {
  std::vector<QRat> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.substitute_q_inverse());
  return XPoly(std::move(v));
}

std::vector<Rational> eval_q(const XPoly& p, const Rational& q0) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.eval(q0));
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
  return v;
}

Rational eval_rational_poly(std::span<const Rational> coeffs, const Rational& t) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

XPoly lagrange_interpolate(std::span<const std::pair<QRat, QRat>> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("duplicate interpolation nodes");
  if (n == 0) return {};

  // In-place divided differences: after pass k, dd[i] = f[x_{i-k}, ..., x_i].
  std::vector<QRat> dd;
  dd.reserve(n);
  for (const auto& pt : points) dd.push_back(pt.second);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - k].first);

  // Newton form, expanded by Horner: p = dd[0] + (x - x0)(dd[1] + (x - x1)(...)).
  std::vector<QRat> acc{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    const QRat& node = points[k].first;
    std::vector<QRat> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * node;
    }
    next[0] += dd[k];
    acc = std::move(next);
  }
  return XPoly(std::move(acc));
}

std::vector<Rational> series_prefix(const QRat& r, int N) {
  if (N < 0) throw std::invalid_argument("negative truncation order");
  const auto& den = r.den().coeffs();
  if (sgn(den[0]) == 0) throw std::domain_error("pole at q=0");
  const Rational d0(den[0]);
  std::vector<Rational> s(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    Rational acc(r.num().coeff(k));
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j) acc -= Rational(den[j]) * s[k - j];
    s[k] = acc / d0;
  }
  return s;
}

}  // namespace qchrom
