#include "qchrom/qpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qchrom {

QPoly::QPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

QPoly QPoly::constant(const Integer& c) { return QPoly(std::vector<Integer>{c}); }

QPoly QPoly::monomial(int k, const Integer& c) {
  if (k < 0) throw std::invalid_argument("negative exponent in QPoly::monomial");
  std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int QPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

Integer QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational QPoly::eval(const Rational& q0) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + Rational(*it);
  return acc;
}

Integer QPoly::eval(const Integer& q0) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
  return acc;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> v(c_.size() + k);
  std::copy(c_.begin(), c_.end(), v.begin() + k);
  QPoly r;
  r.c_ = std::move(v);
  return r;
}

QPoly QPoly::reflected(int n) const {
  if (n < degree()) throw std::invalid_argument("reflection degree below polynomial degree");
  if (is_zero()) return {};
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[n - i] = c_[i];
  return QPoly(std::move(v));
}

bool QPoly::has_nonnegative_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return sgn(c) >= 0; });
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return QPoly(std::move(v));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const Integer& k) {
  if (sgn(k) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

std::strong_ordering operator<=>(const QPoly& a, const QPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.degree(); i >= 0; --i) {
    int s = cmp(a.c_[i], b.c_[i]);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Integer content(const QPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  if (g == 1) return p;
  return exact_div(p, g);
}

QPoly exact_div(const QPoly& a, const Integer& k) {
  if (sgn(k) == 0) throw std::domain_error("zero divisor");
  std::vector<Integer> v = a.coeffs();
  for (auto& c : v) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
      throw std::domain_error("inexact division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  }
  return QPoly(std::move(v));
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  if (a.is_zero()) return {};
  if (b.degree() == 0) return exact_div(a, b.leading());
  if (a.degree() < b.degree()) throw std::domain_error("inexact division");
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t()))
      throw std::domain_error("inexact division");
    Integer t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    const int s = i - db;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[s + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    quo[s] = std::move(t);
  }
  for (int i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) throw std::domain_error("inexact division");
  return QPoly(std::move(quo));
}

QPoly pseudo_rem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Integer t = r[i];
    // r <- lb * r - t * q^(i-db) * b; the top term cancels.
    for (int j = 0; j <= i; ++j) r[j] *= lb;
    const int s = i - db;
    if (sgn(t) != 0)
      for (int j = 0; j <= db; ++j) mpz_submul(r[s + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    r.resize(i);
  }
  return QPoly(std::move(r));
}

namespace {

// Divide out q^k from a polynomial whose valuation is at least k.
QPoly drop_low(const QPoly& p, int k) {
  if (k == 0) return p;
  const auto& c = p.coeffs();
  return QPoly(std::vector<Integer>(c.begin() + k, c.end()));
}

QPoly primitive_prs_gcd(QPoly a, QPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return QPoly::one();
    QPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  const int va = a.valuation();
  const int vb = b.valuation();
  const int common = std::min(va, vb);
  QPoly ra = primitive_part(drop_low(a, va));
  QPoly rb = primitive_part(drop_low(b, vb));
  QPoly g;
  if (ra.degree() == 0 || rb.degree() == 0) {
    g = QPoly::one();
  } else if (ra == rb) {
    g = ra;
  } else {
    g = primitive_prs_gcd(std::move(ra), std::move(rb));
  }
  return g.shifted(common);
}

QPoly pow(const QPoly& p, unsigned e) {
  QPoly result = QPoly::one();
  QPoly base = p;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace qchrom
