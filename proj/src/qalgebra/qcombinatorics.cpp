#include "qchrom/qcombinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace qchrom {

QPoly q_int_poly(long n, int k) {
  if (n < 0) throw std::invalid_argument("q_int_poly requires n >= 0");
  if (k < 1) throw std::invalid_argument("q_int_poly requires k >= 1");
  if (n == 0) return {};
  std::vector<Integer> v(static_cast<std::size_t>(k) * (n - 1) + 1);
  for (long i = 0; i < n; ++i) v[static_cast<std::size_t>(k) * i] = 1;
  return QPoly(std::move(v));
}

QRat q_int(long n) {
  if (n >= 0) return QRat(q_int_poly(n));
  return QRat(-q_int_poly(-n), QPoly::monomial(static_cast<int>(-n)));
}

QPoly q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial requires n >= 0");
  QPoly r = QPoly::one();
  for (long i = 2; i <= n; ++i) r *= q_int_poly(i);
  return r;
}

QPoly q_binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return {};
  if (b > a - b) b = a - b;
  // prod_{i=1..b} (1 - q^(a-b+i)) / (1 - q^i), reduced incrementally so every
  // intermediate quotient is a polynomial.
  QPoly r = QPoly::one();
  for (long i = 1; i <= b; ++i) {
    r *= q_int_poly(a - b + i);
    r = exact_div(r, q_int_poly(i));
  }
  return r;
}

QPoly q_pochhammer(long n) {
  QPoly r = QPoly::one();
  for (long i = 1; i <= n; ++i) r *= QPoly::one() - QPoly::monomial(static_cast<int>(i));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace qchrom
