#pragma once
// Integer and multiplicative-function primitives shared by the rest of the library.

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace heegner {

using i64 = std::int64_t;
using cdbl = std::complex<double>;

// Extended Jacobi-Kronecker symbol chi_c(d) for c != 0, defined for all d as the
// completely multiplicative extension with chi_c(-1) = sign(c) and
// chi_c(2) = +1 / -1 / 0 for c = 1, 5, even (mod 8).
// Throws std::domain_error when c = 3 (mod 4) and d is even (chi_c(2) undefined).
int kronecker(i64 c, i64 d);

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(i64 a, i64 n);

bool is_discriminant(i64 D);             // D != 0 and D = 0,1 (mod 4)
bool is_fundamental_discriminant(i64 D); // 1 (mod 4) squarefree, or 4m with m = 2,3 (mod 4) squarefree

// D < 0 discriminant -> (Delta, f) with D = Delta * f^2, Delta fundamental.
std::pair<i64, i64> factor_discriminant(i64 D);

// eps_d = 1 for d = 1 (mod 4), i for d = 3 (mod 4); d must be odd.
cdbl eps_d(i64 d);

std::vector<std::pair<i64, int>> factorize(i64 n); // n >= 1
std::vector<i64> divisors(i64 n);                  // unsorted
int moebius(i64 n);
i64 rad(i64 n);              // squarefree kernel
i64 gcd_inf(i64 a, i64 b);   // (a, b^infty): largest divisor of a supported on primes of b
i64 sigma_int(i64 n, int k); // exact divisor power sum for small k >= 0
cdbl sigma_s(i64 n, cdbl s); // sum_{d|n} d^s

// Modular inverse of a mod m, (a, m) = 1.
i64 mod_inverse(i64 a, i64 m);

// Primes below n.
std::vector<i64> primes_below(i64 n);

// Moebius table mu[0..n].
std::vector<int> moebius_table(i64 n);

// e(x) = exp(2 pi i x)
cdbl unit_e(double x);

// Simple deterministic parallel map over [0, n): each chunk writes into its own slot.
void parallel_for(i64 n, int threads, const std::function<void(i64, i64)>& chunk_fn);

} // namespace heegner
