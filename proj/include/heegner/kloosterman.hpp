#pragma once
// Classical, metaplectic and plus-space Kloosterman sums.

#include "heegner/arith.hpp"

namespace heegner {

// S(m, n, c) = sum_{d mod c, (d,c)=1} e((m d + n dbar)/c); real.
double kloosterman_s(i64 m, i64 n, i64 c);

// K_kappa(n, m, c) = sum_{d mod c, (d,c)=1} eps_d^{2 kappa} (c/d) e((n d + m dbar)/c),
// kappa in {1/2, 3/2} (and negatives); requires 4 | c.
cdbl kloosterman_k_half(double kappa, i64 n, i64 m, i64 c);

// Plus-space sum: K_kappa weighted by 0 / 2 / 1 according to 4 nmid c, 4 || c, 8 | c.
cdbl kloosterman_k_plus(double kappa, i64 m, i64 n, i64 c);

// max over 1 <= m, n <= mmax/nmax and 4 | c <= cmax of
// |K+_kappa(m,n,c)| / (c^{1/2 + eps} gcd(m,n,c)^{1/2}); the Weil-type ratio.
double weil_ratio_scan(double kappa, i64 mmax, i64 nmax, i64 cmax, double eps, int threads);

} // namespace heegner
