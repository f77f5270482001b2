#pragma once

#include "qchrom/qrat.hpp"

namespace qchrom {

/// [n]_q = (1 - q^n)/(1 - q) for any integer n. Negative n gives
/// -[|n|]_q / q^|n|.
QRat q_int(long n);

/// [n]_{q^k} = 1 + q^k + ... + q^(k(n-1)) for n >= 0, k >= 1.
QPoly q_int_poly(long n, int k = 1);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
QPoly q_factorial(long n);

/// Gaussian binomial [a choose b]_q; zero when b < 0 or b > a.
QPoly q_binomial(long a, long b);

/// (1 - q)(1 - q^2)...(1 - q^n).
QPoly q_pochhammer(long n);

/// Ordinary binomial coefficient.
Integer binomial(long n, long k);

}  // namespace qchrom
