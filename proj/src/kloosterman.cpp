#include "heegner/kloosterman.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace heegner {

double kloosterman_s(i64 m, i64 n, i64 c) {
    if (c < 1) throw std::invalid_argument("kloosterman_s: c >= 1");
    if (c == 1) return 1.0;
    double acc = 0;
    for (i64 d = 1; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        i64 dbar = mod_inverse(d, c);
        i64 arg = (m % c * d + n % c * dbar) % c; // |m|,|n| assumed << 2^31
        acc += std::cos(2.0 * M_PI * (double)((arg % c + c) % c) / (double)c);
    }
    return acc;
}

static cdbl eps_pow(i64 d, double two_kappa) {
    // eps_d^{2 kappa} with 2 kappa an odd integer; eps_d in {1, i}
    int k = (int)std::llround(two_kappa);
    i64 r = ((d % 4) + 4) % 4;
    if (r == 1) return {1, 0};
    // i^k cycles with period 4
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

cdbl kloosterman_k_half(double kappa, i64 n, i64 m, i64 c) {
    if (c < 4 || c % 4 != 0) throw std::invalid_argument("kloosterman_k_half: 4 | c required");
    cdbl acc = 0;
    i64 mm = ((m % c) + c) % c, nn = ((n % c) + c) % c;
    for (i64 d = 1; d < c; d += 2) { // (d, c) = 1 forces d odd since 4 | c
        if (std::gcd(d, c) != 1) continue;
        i64 dbar = mod_inverse(d, c);
        i64 arg = (nn * d + mm * dbar) % c;
        acc += eps_pow(d, 2 * kappa) * (double)kronecker(c, d) * unit_e((double)arg / (double)c);
    }
    return acc;
}

cdbl kloosterman_k_plus(double kappa, i64 m, i64 n, i64 c) {
    if (c < 1) throw std::invalid_argument("kloosterman_k_plus: c >= 1");
    if (c % 4 != 0) return {0, 0};
    double w = (c % 8 == 0) ? 1.0 : 2.0;
    return w * kloosterman_k_half(kappa, m, n, c);
}

double weil_ratio_scan(double kappa, i64 mmax, i64 nmax, i64 cmax, double eps, int threads) {
    std::vector<i64> cs;
    for (i64 c = 4; c <= cmax; c += 4) cs.push_back(c);
    std::vector<double> best(std::max<size_t>(1, cs.size()), 0.0);
    auto work = [&](i64 lo, i64 hi) {
        for (i64 ci = lo; ci < hi; ++ci) {
            i64 c = cs[ci];
            double w = (c % 8 == 0) ? 1.0 : 2.0;
            double cpow = std::pow((double)c, 0.5 + eps);
            // unit data for this modulus
            std::vector<i64> ds, dbars;
            std::vector<cdbl> om;
            for (i64 d = 1; d < c; d += 2) {
                if (std::gcd(d, c) != 1) continue;
                ds.push_back(d);
                dbars.push_back(mod_inverse(d, c));
                om.push_back(eps_pow(d, 2 * kappa) * (double)kronecker(c, d));
            }
            double bb = 0;
            for (i64 n = 1; n <= nmax; ++n) {
                // z_j = om_j * e(n d_j / c), then K(m) = sum_j z_j e(m dbar_j / c)
                std::vector<cdbl> z(ds.size());
                for (size_t j = 0; j < ds.size(); ++j)
                    z[j] = om[j] * unit_e((double)((n * ds[j]) % c) / (double)c);
                std::vector<cdbl> step(ds.size()), cur(ds.size());
                for (size_t j = 0; j < ds.size(); ++j) {
                    step[j] = unit_e((double)(dbars[j] % c) / (double)c);
                    cur[j] = step[j];
                }
                for (i64 m = 1; m <= mmax; ++m) {
                    cdbl K = 0;
                    for (size_t j = 0; j < ds.size(); ++j) {
                        K += z[j] * cur[j];
                        cur[j] *= step[j];
                    }
                    double g = (double)std::gcd(std::gcd(m, n), c);
                    double ratio = w * std::abs(K) / (cpow * std::sqrt(g));
                    bb = std::max(bb, ratio);
                }
            }
            best[ci] = bb;
        }
    };
    parallel_for((i64)cs.size(), threads, work);
    double out = 0;
    for (double b : best) out = std::max(out, b);
    return out;
}

} // namespace heegner
